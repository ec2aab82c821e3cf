#include <doctest.h>

#include "idealinterp/dinvariant.hpp"
#include "idealinterp/io.hpp"
#include "support.hpp"

using namespace idealinterp;

namespace {

RPoly P(const char* text, std::size_t d) { return parse_polynomial(text, d); }

std::vector<std::vector<Rational>> table(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (long v : r) out.back().emplace_back(v);
    }
    return out;
}

ClassTwoSpec example3() {
    return ClassTwoSpec(ExponentLadder::validate({1, 2}), CoefficientTable::validate(table({{1, 0}, {1, 1}, {0, 1}})));
}

// d/dx_i q_m = sum_j c_{i,j} q_{m - a_j}, with q of negative index zero.
void check_derivative_recursion(const ClassTwoSpec& spec, const std::vector<RPoly>& q) {
    const std::size_t d = spec.c.dimension();
    for (std::size_t m = 0; m < q.size(); ++m) {
        for (std::size_t i = 0; i < d; ++i) {
            RPoly expected(d);
            for (std::size_t j = 0; j <= spec.a.n(); ++j) {
                if (spec.a[j] <= m) expected += q[m - spec.a[j]].scaled(spec.c(i, j));
            }
            CHECK(q[m].partial(i) == expected);
        }
    }
}

}  // namespace

TEST_CASE("lower set validation") {
    const auto simplex = LowerSet::validate({Monomial{0, 0, 0}, Monomial{0, 0, 1}, Monomial{1, 0, 0}, Monomial{0, 1, 0}});
    CHECK(simplex.size() == 4);
    CHECK(simplex.elements()[1] == Monomial{1, 0, 0});
    CHECK(simplex.elements()[3] == Monomial{0, 0, 1});
    CHECK(simplex.index_of(Monomial{0, 1, 0}) == 2u);
    CHECK_FALSE(simplex.index_of(Monomial{1, 1, 0}).has_value());

    CHECK(LowerSet::validate({Monomial{0, 0}}).size() == 1);

    try {
        LowerSet::validate({Monomial{0, 0}, Monomial{2, 0}});
        FAIL("expected a missing predecessor");
    } catch (const LowerSetError& e) {
        CHECK(e.element() == Monomial{2, 0});
        CHECK(e.missing() == Monomial{1, 0});
        CHECK(e.exit_code() == 1);
    }
    CHECK_THROWS_AS(LowerSet::validate({Monomial{1, 0}}), LowerSetError);
    CHECK_THROWS_AS(LowerSet::validate({}), ValidationError);
    CHECK_THROWS_AS(LowerSet::validate({Monomial{0, 0}, Monomial{0, 0, 0}}), ValidationError);
    // Duplicates collapse.
    CHECK(LowerSet::validate({Monomial{0}, Monomial{0}, Monomial{1}}).size() == 2);
}

TEST_CASE("frame, ladder and table validation") {
    CHECK_THROWS_AS(DirectionFrame::validate(table({{1, 2}, {2, 4}})), ValidationError);
    CHECK_THROWS_AS(DirectionFrame::validate(table({{1, 2}})), ValidationError);
    CHECK(DirectionFrame::validate(table({{2, 0}, {0, 3}})).dimension() == 2);

    CHECK_THROWS_AS(ExponentLadder::validate({1}), ValidationError);
    CHECK_THROWS_AS(ExponentLadder::validate({2, 3}), ValidationError);
    CHECK_THROWS_AS(ExponentLadder::validate({1, 3, 3}), ValidationError);
    CHECK_THROWS_AS(ExponentLadder::validate({1, 3, 4}), ValidationError);
    CHECK_THROWS_AS(ExponentLadder::validate({1, 1}), ValidationError);
    CHECK(ExponentLadder::validate({1, 5, 3, 2}).top() == 5u);

    CHECK_THROWS_AS(CoefficientTable::validate(table({{0, 1}, {0, 2}})), ValidationError);
    CHECK_THROWS_AS(CoefficientTable::validate(table({{1}, {0}})), ValidationError);
    CHECK_THROWS_AS(CoefficientTable::validate(table({{1, 0}, {0}})), ValidationError);
    CHECK_THROWS_AS(ClassTwoSpec(ExponentLadder::validate({1, 3, 2}), CoefficientTable::validate(table({{1, 0}}))),
                    ValidationError);
}

TEST_CASE("class one bases") {
    const auto simplex = LowerSet::validate({Monomial{0, 0, 0}, Monomial{1, 0, 0}, Monomial{0, 1, 0}, Monomial{0, 0, 1}});
    const auto b = class_one_basis(simplex, DirectionFrame::identity(3));
    REQUIRE(b.polys.size() == 4);
    CHECK(b.polys[0] == P("1", 3));
    CHECK(b.polys[1] == P("x1", 3));
    CHECK(b.polys[2] == P("x2", 3));
    CHECK(b.polys[3] == P("x3", 3));

    CHECK(class_one_basis(LowerSet::validate({Monomial{0, 0}}), DirectionFrame::validate(table({{1, 1}, {1, -1}})))
              .polys == std::vector<RPoly>{P("1", 2)});

    const auto square = LowerSet::validate({Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}, Monomial{1, 1}});
    const auto rotated = class_one_basis(square, DirectionFrame::validate(table({{1, 1}, {1, -1}})));
    // (rho_1 . x)(rho_2 . x) = (x1 + x2)(x1 - x2), expanded by hand.
    CHECK(rotated.polys ==
          std::vector<RPoly>{P("1", 2), P("x1 + x2", 2), P("x1 - x2", 2), P("x1^2 - x2^2", 2)});
}

TEST_CASE("class two bases on the worked examples") {
    const auto ex3 = class_two_basis(example3());
    CHECK(ex3.polys == std::vector<RPoly>{P("1", 3), P("x1 + x2", 3), P("1/2*x1^2 + x1*x2 + 1/2*x2^2 + x2 + x3", 3)});

    // Trivial case: only column 0 is nonzero, giving (c . x)^m / m!.
    const ClassTwoSpec trivial(ExponentLadder::validate({1, 3, 2}),
                               CoefficientTable::validate(table({{2, 0, 0}, {-1, 0, 0}})));
    const RPoly cx = P("2*x1 - x2", 2);
    const auto tb = class_two_basis(trivial);
    REQUIRE(tb.polys.size() == 4);
    CHECK(tb.polys[0] == P("1", 2));
    CHECK(tb.polys[1] == cx);
    CHECK(tb.polys[2] == cx.pow(2).scaled(Rational(1, 2)));
    CHECK(tb.polys[3] == cx.pow(3).scaled(Rational(1, 6)));

    const ClassTwoSpec ex2(ExponentLadder::validate({1, 2}), CoefficientTable::validate(table({{1, 0}, {0, 1}})));
    CHECK(class_two_basis(ex2).polys == std::vector<RPoly>{P("1", 2), P("x1", 2), P("1/2*x1^2 + x2", 2)});
}

TEST_CASE("class two constructions agree") {
    CHECK(class_two_basis_recursive(example3().a, example3().c).polys == class_two_basis(example3()).polys);
    CHECK(class_two_basis_enumerated(example3().a, example3().c).polys == class_two_basis(example3()).polys);

    testsupport::Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = static_cast<std::size_t>(testsupport::uniform(rng, 1, 3));
        const auto spec = testsupport::random_class_two(rng, d, 2, 5);
        const auto direct = class_two_basis(spec).polys;
        CHECK(class_two_basis_recursive(spec.a, spec.c).polys == direct);
        CHECK(class_two_basis_enumerated(spec.a, spec.c).polys == direct);
    }
}

TEST_CASE("class two derivative recursion, degree and support") {
    check_derivative_recursion(example3(), class_two_basis(example3()).polys);
    testsupport::Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = static_cast<std::size_t>(testsupport::uniform(rng, 1, 3));
        const auto spec = testsupport::random_class_two(rng, d);
        const auto q = class_two_basis(spec).polys;
        CHECK(q.size() == spec.a.top() + 1);
        CHECK(span_dimension(q) == q.size());
        check_derivative_recursion(spec, q);
        for (std::size_t m = 0; m < q.size(); ++m) {
            CHECK(q[m].degree() == static_cast<int>(m));
            for (std::size_t i = 0; i < d; ++i) {
                if (spec.c(i, 0).is_zero()) continue;
                std::vector<unsigned> e(d, 0);
                e[i] = static_cast<unsigned>(m);
                CHECK_FALSE(q[m].coefficient(Monomial(e)).is_zero());
            }
        }
    }
}

TEST_CASE("D-invariance certificates") {
    const auto ex3 = class_two_basis(example3());
    const auto cert = check_d_invariance(ex3);
    REQUIRE(cert.invariant);
    CHECK(cert.coefficients[2][0] == std::vector<Rational>{0, 1, 0});
    CHECK(cert.coefficients[2][1] == std::vector<Rational>{1, 1, 0});
    CHECK(cert.coefficients[2][2] == std::vector<Rational>{1, 0, 0});

    CHECK(check_d_invariance({P("1", 2), P("x1", 2), P("x2", 2)}).invariant);

    const auto bad = check_d_invariance({P("1", 2), P("x1*x2", 2)});
    CHECK_FALSE(bad.invariant);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->element == 1);
    CHECK(bad.witness->variable == 0);
    CHECK(bad.witness->derivative == P("x2", 2));

    testsupport::Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t d = static_cast<std::size_t>(testsupport::uniform(rng, 1, 3));
        CHECK(check_d_invariance(class_one_basis(testsupport::random_lower_set(rng, d, 6), testsupport::random_frame(rng, d)))
                  .invariant);
        CHECK(check_d_invariance(class_two_basis(testsupport::random_class_two(rng, d))).invariant);
    }
}

TEST_CASE("span dimension") {
    auto polys = class_two_basis(example3()).polys;
    CHECK(span_dimension(polys) == 3);
    CHECK(span_dimension({P("1", 1)}) == 1);
    polys.push_back(polys[1]);
    CHECK(span_dimension(polys) == 3);
}
