#include "idealinterp/example5.hpp"

#include <array>
#include <tuple>
#include <utility>

#include "idealinterp/errors.hpp"

namespace idealinterp {

namespace {

constexpr const char* kProblem = R"({
  "dimension": 3,
  "sites": [
    {
      "xi": ["1", "1", "1"],
      "subspace": {
        "type": "classOne",
        "delta": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "rho": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
      }
    },
    {
      "xi": ["0", "0", "0"],
      "subspace": {
        "type": "classTwo",
        "a": [1, 2],
        "c": [["1", "0"], ["1", "1"], ["0", "1"]]
      }
    }
  ],
  "basis": ["1", "x3", "x2", "x1", "x3^2", "x3*x2", "x3*x1"],
  "f": "1 + (1 - x1)^2 + (1 - x2)^2 + (1 - x3)^2",
  "h_values": ["1/10", "1/100", "1/1000"]
})";

// Published hat Gram matrix, one row per functional.
constexpr std::array<std::array<const char*, 7>, 7> kHatMatrix{{
    {"1", "1", "1", "1", "1", "1", "1"},
    {"0", "0", "0", "1", "0", "0", "1"},
    {"0", "0", "1", "0", "0", "1", "0"},
    {"0", "1", "0", "0", "2+h", "1", "1"},
    {"1", "0", "0", "0", "0", "0", "0"},
    {"0", "h", "1+h", "1", "h^3", "h^2*(1+h)", "h^2"},
    {"0", "1", "1", "0", "7*h^2", "h*(7*h+3)", "3*h"},
}};

constexpr const char* kDeterminant = "(h-1)*(2*h+1)*(2*h-1)*(1+h)^2";

constexpr const char* kHermite = "4 - 2*x3 - 4*x1 - x3^2 + 4*x3*x1";

struct LagrangeValue {
    const char* h;
    std::array<const char*, 7> coefficients;
};

constexpr std::array<LagrangeValue, 3> kLagrange{{
    {"1/10", {"4", "-34949/14520", "-439/7260", "-37867/9680", "-2303/2904", "233/1452", "7767/1936"}},
    {"1/100",
     {"4", "-2600449499/1274614950", "-46747801/2549229900", "-483294631/121391900", "-24977753/25492299",
      "722401/25492299", "9690171/2427838"}},
    {"1/1000",
     {"4", "-251000494994999/125249623999500", "-496749753001/250499247999000", "-333833081249167/83499749333000",
      "-249997752503/250499247999", "747249001/250499247999", "667833161997/166999498666"}},
}};

const RangeBasis& require_basis(const Problem& problem) {
    if (!problem.basis) throw ValidationError("problem has no range basis");
    return *problem.basis;
}

const RPoly& require_f(const Problem& problem) {
    if (!problem.f) throw ValidationError("problem has no test function f");
    return *problem.f;
}

template <class F>
ReproductionCheck run_check(std::string name, F&& body) {
    ReproductionCheck check{std::move(name), false, {}};
    try {
        std::tie(check.match, check.detail) = body();
    } catch (const Error& e) {
        if (e.error_class() == ErrorClass::validation) throw;
        check.detail = e.what();
    }
    return check;
}

std::pair<bool, std::string> compare_coefficients(const std::vector<Rational>& got,
                                                  const std::array<const char*, 7>& expected) {
    if (got.size() != expected.size()) return {false, "coefficient count " + std::to_string(got.size())};
    for (std::size_t j = 0; j < got.size(); ++j) {
        const Rational want = Rational::parse(expected[j]);
        if (got[j] != want) {
            return {false, "coefficient " + std::to_string(j + 1) + ": got " + got[j].str() + ", expected " +
                               want.str()};
        }
    }
    return {true, "7 coefficients equal"};
}

}  // namespace

const char* example5_json() { return kProblem; }

Problem example5_problem() { return problem_from_json(json::parse(kProblem)); }

bool ReproductionReport::all_match() const {
    for (const auto& c : checks) {
        if (!c.match) return false;
    }
    return !checks.empty();
}

ReproductionReport reproduce_example5(const Problem& problem) {
    const RangeBasis& basis = require_basis(problem);
    const RPoly& f = require_f(problem);
    check_basis_shape(problem.scheme, basis);
    ReproductionReport report;

    report.checks.push_back(run_check("hat-gram", [&]() -> std::pair<bool, std::string> {
        const auto sys = gram_hat_symbolic(problem.scheme, basis, f);
        if (sys.matrix.rows() != kHatMatrix.size()) return {false, "matrix size " + std::to_string(sys.matrix.rows())};
        for (std::size_t r = 0; r < kHatMatrix.size(); ++r) {
            for (std::size_t c = 0; c < kHatMatrix[r].size(); ++c) {
                const HPoly want = parse_hpoly(kHatMatrix[r][c]);
                if (sys.matrix(r, c) != want) {
                    return {false, "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): got " +
                                       sys.matrix(r, c).str() + ", expected " + want.str()};
                }
            }
        }
        return {true, "7x7 entries equal"};
    }));

    report.checks.push_back(run_check("determinant", [&]() -> std::pair<bool, std::string> {
        const HPoly got = det_hat(problem.scheme, basis);
        const HPoly want = parse_hpoly(kDeterminant);
        if (got != want) return {false, "got " + got.str() + ", expected " + want.str()};
        return {true, want.str()};
    }));

    report.checks.push_back(run_check("hermite", [&]() -> std::pair<bool, std::string> {
        const auto p = solve_exact(gram_hermite(problem.scheme, basis, f), basis);
        const RPoly want = parse_polynomial(kHermite, problem.scheme.dimension());
        if (p.polynomial != want) return {false, "got " + to_string(p.polynomial) + ", expected " + to_string(want)};
        return {true, to_string(want)};
    }));

    for (const auto& lv : kLagrange) {
        report.checks.push_back(run_check(std::string("lagrange h=") + lv.h, [&]() -> std::pair<bool, std::string> {
            const auto p = solve_exact(gram_lagrange(problem.scheme, basis, f, Rational::parse(lv.h)), basis);
            return compare_coefficients(p.coefficients, lv.coefficients);
        }));
    }
    return report;
}

json to_json(const ReproductionReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"match", c.match}, {"detail", c.detail}});
    return {{"checks", checks}, {"allMatch", report.all_match()}};
}

}  // namespace idealinterp
