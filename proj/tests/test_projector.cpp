#include <doctest.h>

#include "idealinterp/example5.hpp"
#include "idealinterp/io.hpp"
#include "idealinterp/projector.hpp"
#include "support.hpp"

using namespace idealinterp;

namespace {

RPoly P(const char* text, std::size_t d = 3) { return parse_polynomial(text, d); }
HPoly H(const char* text) { return parse_hpoly(text); }

HermiteScheme single_point(std::vector<Rational> xi) {
    const std::size_t d = xi.size();
    std::vector<SchemeEntry> entries{
        {Site(std::move(xi)), ClassOneSpec{LowerSet::validate({Monomial::one(d)}), DirectionFrame::identity(d)}}};
    return HermiteScheme(std::move(entries));
}

}  // namespace

TEST_CASE("range basis validation") {
    CHECK_THROWS_AS(RangeBasis({P("x1"), P("x1")}), ValidationError);
    CHECK_THROWS_AS(RangeBasis({P("x1"), P("x1", 2)}), ValidationError);
    const auto problem = example5_problem();
    CHECK_THROWS_AS(check_basis_shape(problem.scheme, RangeBasis({P("1"), P("x1")})), ValidationError);
    CHECK_THROWS_AS(validate_range_basis(problem.scheme,
                                         RangeBasis({P("1"), P("x3"), P("x2"), P("x1"), P("x3^2"), P("x3*x2"),
                                                     P("x3 + x2")})),
                    SingularGramError);
    CHECK_NOTHROW(validate_range_basis(problem.scheme, *problem.basis));
}

TEST_CASE("Hermite Gram system of Example 5") {
    const auto problem = example5_problem();
    const auto sys = gram_hermite(problem.scheme, *problem.basis, *problem.f);
    CHECK(sys.kind == GramKind::hermite);
    const std::vector<Rational> row4{0, 1, 0, 0, 2, 1, 1};
    for (std::size_t j = 0; j < 7; ++j) CHECK(sys.matrix(3, j) == row4[j]);
    CHECK(sys.rhs[4] == Rational(4));

    const auto one = gram_hermite(single_point({Rational(2)}), RangeBasis({P("x1 + 1", 1)}), P("x1^2", 1));
    CHECK(one.matrix.rows() == 1);
    CHECK(one.matrix(0, 0) == Rational(3));
    CHECK(one.rhs[0] == Rational(4));
}

TEST_CASE("hat Gram matrix of Example 5") {
    const auto problem = example5_problem();
    const auto hat = gram_hat_symbolic(problem.scheme, *problem.basis, *problem.f);
    const std::vector<HPoly> row6{0, HPoly::h(), H("1+h"), 1, H("h^3"), H("h^2*(1+h)"), H("h^2")};
    const std::vector<HPoly> row7{0, 1, 1, 0, H("7*h^2"), H("h*(7*h+3)"), H("3*h")};
    for (std::size_t j = 0; j < 7; ++j) {
        CHECK(hat.matrix(5, j) == row6[j]);
        CHECK(hat.matrix(6, j) == row7[j]);
    }
    // Constant basis element: first row 1 and derivative rows 0 at site 1.
    CHECK(hat.matrix(0, 0) == HPoly(1));
    for (std::size_t r = 1; r < 4; ++r) CHECK(hat.matrix(r, 0).is_zero());

    const Rational h0(1, 10);
    const auto raw = gram_lagrange(problem.scheme, *problem.basis, *problem.f, h0);
    const auto spec = specialize(hat, h0);
    CHECK(build_transform(problem.scheme).at(h0) * raw.matrix == spec.matrix);
}

TEST_CASE("exact solves of Example 5") {
    const auto problem = example5_problem();
    const auto& basis = *problem.basis;
    const auto pf = solve_exact(gram_hermite(problem.scheme, basis, *problem.f), basis);
    CHECK(to_string(pf.polynomial) == "4 - 2*x3 - 4*x1 - x3^2 + 4*x3*x1");

    const auto ph = solve_exact(gram_lagrange(problem.scheme, basis, *problem.f, Rational(1, 10)), basis);
    CHECK(ph.coefficients[1] == Rational::parse("-34949/14520"));

    const auto p100 = solve_exact(gram_lagrange(problem.scheme, basis, *problem.f, Rational(1, 100)), basis);
    CHECK(p100.coefficients[1] == Rational::parse("-2600449499/1274614950"));

    // Range elements are fixed.
    const RPoly g = P("3 - x1 + 2*x3*x2 - 1/2*x3^2");
    CHECK(solve_exact(gram_hermite(problem.scheme, basis, g), basis).polynomial == g);
    CHECK(solve_exact(gram_lagrange(problem.scheme, basis, g, Rational(1, 7)), basis).polynomial == g);

    // Idempotency.
    CHECK(solve_exact(gram_hermite(problem.scheme, basis, pf.polynomial), basis).polynomial == pf.polynomial);
    CHECK(solve_exact(gram_lagrange(problem.scheme, basis, ph.polynomial, Rational(1, 10)), basis).polynomial ==
          ph.polynomial);

    // Hat and raw systems share their solution.
    const Rational h0(1, 1000);
    CHECK(solve_exact(specialize(gram_hat_symbolic(problem.scheme, basis, *problem.f), h0), basis).coefficients ==
          solve_exact(gram_lagrange(problem.scheme, basis, *problem.f, h0), basis).coefficients);

    try {
        solve_exact(gram_lagrange(problem.scheme, basis, *problem.f, Rational(1, 2)), basis);
        FAIL("expected a singular system");
    } catch (const SingularGramError& e) {
        CHECK(e.rank() == 6);
    }
}

TEST_CASE("determinants and range stability") {
    const auto problem = example5_problem();
    const HPoly det = det_hat(problem.scheme, *problem.basis);
    CHECK(det == H("(h-1)*(2*h+1)*(2*h-1)*(1+h)^2"));
    CHECK(det.constant_term() == det_hermite(problem.scheme, *problem.basis));
    CHECK(det_hat(single_point({Rational(5), Rational(1)}), RangeBasis({P("1", 2)})) == HPoly(1));

    const auto report = range_stability(problem.scheme, *problem.basis,
                                        {Rational(1, 10), Rational(1, 100), Rational(1, 1000), Rational(1, 2),
                                         Rational(-1), Rational(1), Rational(-1, 2)});
    CHECK(report.entries[0].nonzero);
    CHECK(report.entries[1].nonzero);
    CHECK(report.entries[2].nonzero);
    for (std::size_t k = 3; k < 7; ++k) CHECK_FALSE(report.entries[k].nonzero);
    CHECK_FALSE(report.all_nonzero());
    CHECK_THROWS_AS(range_stability(problem.scheme, *problem.basis, {Rational(0)}), ValidationError);
}

TEST_CASE("residual decomposition") {
    const auto problem = example5_problem();
    const auto res = residual_decomposition(problem.scheme, *problem.basis, *problem.f);
    CHECK(res.matrix(3, 4) == HPoly::h());
    CHECK(res.matrix(0, 0).is_zero());
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) CHECK(res.matrix(i, j).constant_term().is_zero());
        CHECK(res.rhs[i].constant_term().is_zero());
    }
}

TEST_CASE("convergence study") {
    const auto problem = example5_problem();
    const auto& basis = *problem.basis;
    const auto report = convergence_study(problem.scheme, basis, *problem.f,
                                          {Rational(1, 10), Rational(1, 100), Rational(1, 1000)});
    CHECK(report.pass);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].coefficients[1] == Rational::parse("-34949/14520"));
    // Past the first decade every gap shrinks at least fivefold; the first
    // decade is still pre-asymptotic for the x3*x1 coefficient (ratio < 2).
    for (std::size_t j = 0; j < 7; ++j) CHECK(report.rows[2].gaps[j] * Rational(5) <= report.rows[1].gaps[j]);
    CHECK(report.rows[1].gaps[6] * Rational(2) > report.rows[0].gaps[6]);

    const auto with_root = convergence_study(problem.scheme, basis, *problem.f,
                                             {Rational(1, 2), Rational(1, 10), Rational(1, 100), Rational(1, 1000)});
    CHECK(with_root.rows[0].singular);
    CHECK(with_root.rows[0].rank == 6);
    CHECK(with_root.pass);

    const auto in_range = convergence_study(problem.scheme, basis, P("x3*x1 - 2"), {Rational(1, 10), Rational(1, 100)});
    for (const auto& row : in_range.rows) {
        for (const auto& g : row.gaps) CHECK(g.is_zero());
    }

    CHECK_THROWS_AS(convergence_study(problem.scheme, basis, *problem.f, {Rational(1, 100), Rational(1, 10)}),
                    ValidationError);
    CHECK_THROWS_AS(convergence_study(problem.scheme, basis, *problem.f, {Rational(0)}), ValidationError);

}

TEST_CASE("seeded mixed schemes converge from h = 1/1000 on") {
    testsupport::Rng rng(61);
    const std::vector<Rational> hs{Rational(1, 1000), Rational(1, 10000), Rational(1, 100000), Rational(1, 1000000)};
    for (int trial = 0; trial < 3; ++trial) {
        const HermiteScheme scheme = testsupport::random_mixed_scheme(rng, 2);
        const RangeBasis b = greedy_monomial_basis(scheme);
        const auto r = convergence_study(scheme, b, testsupport::random_poly(rng, 2, 5, 5), hs);
        CHECK(r.pass);
        for (std::size_t k = 1; k < r.rows.size(); ++k) {
            REQUIRE_FALSE(r.rows[k].singular);
            for (std::size_t j = 0; j < scheme.size(); ++j) {
                if (!r.rows[k - 1].gaps[j].is_zero()) CHECK(r.rows[k].gaps[j] < r.rows[k - 1].gaps[j]);
            }
        }
    }
}

TEST_CASE("greedy monomial basis") {
    const auto problem = example5_problem();
    const RangeBasis b = greedy_monomial_basis(problem.scheme);
    CHECK(b.size() == 7);
    CHECK_FALSE(det_hermite(problem.scheme, b).is_zero());
}
