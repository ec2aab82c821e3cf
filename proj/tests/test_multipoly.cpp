#include <doctest.h>

#include "idealinterp/mpoly.hpp"
#include "idealinterp/io.hpp"
#include "support.hpp"

using namespace idealinterp;

namespace {

RPoly P(const char* text, std::size_t d = 3) { return parse_polynomial(text, d); }

}  // namespace

TEST_CASE("monomial orderings") {
    GradedLexLess lex;
    CHECK(lex(Monomial{0, 0, 1}, Monomial{0, 1, 0}));
    CHECK(lex(Monomial{0, 1, 0}, Monomial{1, 0, 0}));
    CHECK(lex(Monomial{1, 0, 0}, Monomial{0, 0, 2}));
    CHECK(lex(Monomial{0, 0, 2}, Monomial{0, 1, 1}));
    CHECK(lex(Monomial{0, 1, 1}, Monomial{1, 0, 1}));
    IndexOrderLess idx;
    CHECK(idx(Monomial{0, 0, 0}, Monomial{1, 0, 0}));
    CHECK(idx(Monomial{1, 0, 0}, Monomial{0, 1, 0}));
    CHECK(idx(Monomial{0, 1, 0}, Monomial{0, 0, 1}));
    CHECK(Monomial{1, 2}.divides(Monomial{1, 3}));
    CHECK_FALSE(Monomial{1, 2}.divides(Monomial{0, 3}));
    CHECK(Monomial{2, 3}.factorial() == Rational(12));
}

TEST_CASE("sparse arithmetic and canonical printing") {
    const RPoly s = P("x1 + x2", 2);
    CHECK(s * s == P("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(P("1/2*x1^2 + x1*x2 + 1/2*x2^2", 2).scaled(Rational(2)) == s * s);
    CHECK((s + (-s)).is_zero());
    CHECK(to_string(P("1 + (1 - x1)^2 + (1 - x2)^2 + (1 - x3)^2")) ==
          "4 - 2*x3 - 2*x2 - 2*x1 + x3^2 + x2^2 + x1^2");
    CHECK(to_string(P("4 - 2*x3 - 4*x1 - x3^2 + 4*x3*x1")) == "4 - 2*x3 - 4*x1 - x3^2 + 4*x3*x1");
    CHECK(to_string(RPoly(2)) == "0");
    CHECK(to_string(P("-x1/3 + 5/2", 1)) == "5/2 - 1/3*x1");
    CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    CHECK(P("x3^2").partial(2) == P("2*x3"));
    CHECK(P("1/2*x1^2 + x1*x2 + 1/2*x2^2 + x2 + x3").partial(0) == P("x1 + x2"));
    CHECK(P("7").partial(1).is_zero());
    CHECK_THROWS_AS(P("x1").partial(3), std::out_of_range);
    CHECK(P("x1^3*x2^2").derivative(Monomial{2, 1, 0}) == P("12*x1*x2"));
}

TEST_CASE("evaluation over Q and over Q[h]") {
    const RPoly f = P("1 + (1 - x1)^2 + (1 - x2)^2 + (1 - x3)^2");
    CHECK(f(std::vector<Rational>{0, 0, 0}) == Rational(4));
    const std::vector<HPoly> pt{HPoly::h(), HPoly::h() + HPoly::h().pow(2), HPoly::h().pow(2)};
    CHECK(P("x3*x2")(pt) == HPoly{Rational(0), Rational(0), Rational(0), Rational(1), Rational(1)});
    CHECK(RPoly(3)(pt).is_zero());
    CHECK_THROWS_AS(f(std::vector<Rational>{0, 0}), std::invalid_argument);
}

TEST_CASE("differential operators") {
    CHECK(apply_diff_op(P("x1", 1), P("x1^2", 1)) == P("2*x1", 1));
    const RPoly f = P("x1^3 - 2*x1*x2*x3 + x3^4");
    CHECK(apply_diff_op(P("1"), f) == f);
    CHECK(apply_diff_op(P("x1*x3 + 2"), f) == P("-2*x2") + f.scaled(Rational(2)));
}

TEST_CASE("directional monomials induce iterated directional derivatives") {
    testsupport::Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = static_cast<std::size_t>(testsupport::uniform(rng, 1, 3));
        const DirectionFrame rho = testsupport::random_frame(rng, d);
        std::vector<unsigned> e(d);
        long budget = testsupport::uniform(rng, 0, 4);
        for (std::size_t i = 0; i < d; ++i) {
            e[i] = static_cast<unsigned>(i + 1 == d ? budget : testsupport::uniform(rng, 0, budget));
            budget -= e[i];
        }
        const Monomial alpha(e);
        const RPoly f = testsupport::random_poly(rng, d, 6, 6);
        CHECK(apply_diff_op(directional_monomial(alpha, rho), f) == testsupport::iterated_directional(f, alpha, rho));
    }
}

TEST_CASE("partials commute") {
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        const RPoly p = testsupport::random_poly(rng, d, 6, 8);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
        }
    }
}

TEST_CASE("apply_diff_op is bilinear") {
    testsupport::Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = static_cast<std::size_t>(testsupport::uniform(rng, 1, 3));
        const RPoly p1 = testsupport::random_poly(rng, d, 3, 3), p2 = testsupport::random_poly(rng, d, 3, 3);
        const RPoly f1 = testsupport::random_poly(rng, d, 5, 5), f2 = testsupport::random_poly(rng, d, 5, 5);
        const Rational a = testsupport::random_rational(rng), b = testsupport::random_rational(rng);
        CHECK(apply_diff_op(p1.scaled(a) + p2.scaled(b), f1) ==
              apply_diff_op(p1, f1).scaled(a) + apply_diff_op(p2, f1).scaled(b));
        CHECK(apply_diff_op(p1, f1.scaled(a) + f2.scaled(b)) ==
              apply_diff_op(p1, f1).scaled(a) + apply_diff_op(p1, f2).scaled(b));
    }
}

TEST_CASE("evaluation is multiplicative") {
    testsupport::Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = static_cast<std::size_t>(testsupport::uniform(rng, 1, 3));
        const RPoly p = testsupport::random_poly(rng, d, 4, 4), q = testsupport::random_poly(rng, d, 4, 4);
        std::vector<Rational> xi(d);
        for (auto& x : xi) x = testsupport::random_rational(rng);
        CHECK((p * q)(xi) == p(xi) * q(xi));
    }
}
