#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "idealinterp/dinvariant.hpp"
#include "idealinterp/functionals.hpp"
#include "idealinterp/hpoly.hpp"
#include "idealinterp/linalg.hpp"
#include "idealinterp/mpoly.hpp"
#include "idealinterp/projector.hpp"
#include "idealinterp/rational.hpp"

namespace idealinterp {

using json = nlohmann::json;

/// Parses a restricted infix polynomial: integer literals, the given variable
/// names, + - * / ^ and parentheses. '/' only divides by a nonzero constant
/// and '^' takes a nonnegative integer literal. Throws ValidationError.
RPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables);
RPoly parse_polynomial(std::string_view text, std::size_t dimension);
/// Univariate polynomial in h, e.g. "h^2*(1+h)".
HPoly parse_hpoly(std::string_view text);

json to_json(const Rational& r);
json to_json(const HPoly& p);
/// Term records {exponents, coefficient} in ascending graded-lex order.
json to_json(const RPoly& p);
json to_json(const Monomial& m);

template <class T>
json to_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
json to_json(const std::vector<T>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const SubspaceSpec& spec);
json to_json(const Interpolant& interpolant);
json to_json(const RangeStabilityReport& report);
json to_json(const ConvergenceReport& report);
json to_json(const DInvarianceCertificate& cert);

/// Inputs of one interpolation problem; basis and f are optional so that
/// scheme-only commands work on partial files.
struct Problem {
    HermiteScheme scheme;
    std::optional<RangeBasis> basis;
    std::optional<RPoly> f;
    std::vector<Rational> h_values;
};

/// Rationals are accepted as strings or JSON integers; floats are rejected.
Rational rational_from_json(const json& j, const std::string& where);
/// Either an infix string or a list of {exponents, coefficient} records.
RPoly polynomial_from_json(const json& j, std::size_t dimension, const std::string& where);
SubspaceSpec subspace_from_json(const json& j, const std::string& where);

Problem problem_from_json(const json& j);
Problem load_problem(const std::filesystem::path& path);
json problem_to_json(const Problem& problem);

}  // namespace idealinterp
