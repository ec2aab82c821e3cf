#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "idealinterp/errors.hpp"
#include "idealinterp/linalg.hpp"
#include "idealinterp/monomial.hpp"
#include "idealinterp/mpoly.hpp"
#include "idealinterp/rational.hpp"

namespace idealinterp {

class LowerSetError : public ValidationError {
public:
    /// A nonempty where is prefixed to the message, e.g. a JSON path.
    LowerSetError(Monomial element, Monomial missing, const std::string& where = {});

    const Monomial& element() const noexcept { return element_; }
    const Monomial& missing() const noexcept { return missing_; }

private:
    Monomial element_;
    Monomial missing_;
};

/// Finite subset of N^d closed under the product order, stored in
/// IndexOrderLess order (so every predecessor precedes its successors).
class LowerSet {
public:
    /// Throws LowerSetError naming a missing predecessor, or ValidationError
    /// for empty input or mixed arity.
    static LowerSet validate(std::vector<Monomial> elements);

    std::size_t dimension() const noexcept { return elems_.front().dimension(); }
    std::size_t size() const noexcept { return elems_.size(); }
    const std::vector<Monomial>& elements() const noexcept { return elems_; }
    /// Position of alpha in elements(), or nullopt.
    std::optional<std::size_t> index_of(const Monomial& alpha) const;

private:
    explicit LowerSet(std::vector<Monomial> elems) : elems_(std::move(elems)) {}
    std::vector<Monomial> elems_;
};

/// d linearly independent direction vectors rho_1..rho_d in Q^d. Unit length
/// is not required.
class DirectionFrame {
public:
    static DirectionFrame validate(std::vector<std::vector<Rational>> rows);
    static DirectionFrame identity(std::size_t d);

    std::size_t dimension() const noexcept { return rho_.size(); }
    const std::vector<Rational>& direction(std::size_t i) const { return rho_.at(i); }
    const std::vector<std::vector<Rational>>& directions() const noexcept { return rho_; }

private:
    explicit DirectionFrame(std::vector<std::vector<Rational>> rho) : rho_(std::move(rho)) {}
    std::vector<std::vector<Rational>> rho_;
};

/// (a_0, a_1, ..., a_n) with n >= 1, a_0 = 1 and a_1 > ... > a_n >= 2.
class ExponentLadder {
public:
    static ExponentLadder validate(std::vector<unsigned> a);

    /// n, the index of the last rung.
    std::size_t n() const noexcept { return a_.size() - 1; }
    unsigned operator[](std::size_t j) const { return a_.at(j); }
    unsigned top() const noexcept { return a_[1]; }
    const std::vector<unsigned>& values() const noexcept { return a_; }

private:
    explicit ExponentLadder(std::vector<unsigned> a) : a_(std::move(a)) {}
    std::vector<unsigned> a_;
};

/// d rows (c_{i,0}, ..., c_{i,n}); column 0 is not identically zero.
class CoefficientTable {
public:
    static CoefficientTable validate(std::vector<std::vector<Rational>> rows);

    std::size_t dimension() const noexcept { return c_.size(); }
    std::size_t columns() const noexcept { return c_.front().size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return c_.at(i).at(j); }
    /// Column j as a vector over the variables: (c_{1,j}, ..., c_{d,j}).
    std::vector<Rational> column(std::size_t j) const;
    const std::vector<std::vector<Rational>>& rows() const noexcept { return c_; }

private:
    explicit CoefficientTable(std::vector<std::vector<Rational>> c) : c_(std::move(c)) {}
    std::vector<std::vector<Rational>> c_;
};

struct ClassOneSpec {
    LowerSet delta;
    DirectionFrame rho;
};

/// Ladder and table together; checks that the table has n+1 columns.
struct ClassTwoSpec {
    ClassTwoSpec(ExponentLadder ladder, CoefficientTable table);

    ExponentLadder a;
    CoefficientTable c;
};

using SubspaceSpec = std::variant<ClassOneSpec, ClassTwoSpec>;

std::size_t subspace_dimension(const SubspaceSpec& spec);
std::size_t spec_arity(const SubspaceSpec& spec);

struct SubspaceBasis {
    std::vector<RPoly> polys;
    SubspaceSpec provenance;
};

/// prod_i (rho_i . x)^{alpha_i} for one multi-index.
RPoly directional_monomial(const Monomial& alpha, const DirectionFrame& rho);

/// One polynomial per alpha in the lower set, in the lower set's order.
SubspaceBasis class_one_basis(const LowerSet& delta, const DirectionFrame& rho);

/// q_{n,0}, ..., q_{n,a_1}: for each m the sum over column totals t with
/// sum_j a_j t_j = m of prod_j (c_{.,j} . x)^{t_j} / t_j!.
SubspaceBasis class_two_basis(const ExponentLadder& a, const CoefficientTable& c);
SubspaceBasis class_two_basis(const ClassTwoSpec& spec);

/// Same basis computed by peeling the last rung:
/// q_{k,m} = sum_l (c_{.,k} . x)^l / l! * q_{k-1, m - l a_k}, q_{0,m} = (c_{.,0} . x)^m / m!.
SubspaceBasis class_two_basis_recursive(const ExponentLadder& a, const CoefficientTable& c);

/// Same basis by direct enumeration of every gamma in (N^{n+1})^d with
/// tau(gamma) = m. Exponential; for cross-checks on small inputs.
SubspaceBasis class_two_basis_enumerated(const ExponentLadder& a, const CoefficientTable& c);

SubspaceBasis build_basis(const SubspaceSpec& spec);

struct DInvarianceWitness {
    std::size_t element;
    std::size_t variable;
    RPoly derivative;
};

/// Either the coefficients expressing every partial derivative in the span
/// (coefficients[element][variable][k] multiplies polys[k]) or a derivative
/// that leaves the span.
struct DInvarianceCertificate {
    bool invariant = false;
    std::vector<std::vector<std::vector<Rational>>> coefficients;
    std::optional<DInvarianceWitness> witness;
};

DInvarianceCertificate check_d_invariance(const std::vector<RPoly>& polys);
inline DInvarianceCertificate check_d_invariance(const SubspaceBasis& basis) {
    return check_d_invariance(basis.polys);
}

/// Rank of the coefficient matrix of polys in the monomial basis.
std::size_t span_dimension(const std::vector<RPoly>& polys);
inline std::size_t span_dimension(const SubspaceBasis& basis) { return span_dimension(basis.polys); }

/// Coefficient matrix with one column per polynomial and one row per monomial
/// in the union of supports (ascending GradedLexLess).
Matrix<Rational> coefficient_matrix(const std::vector<RPoly>& polys, std::vector<Monomial>* row_monomials = nullptr);

}  // namespace idealinterp
