#include "idealinterp/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "idealinterp/errors.hpp"

namespace idealinterp {

namespace {

// Recursive-descent parser over the grammar
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ['^' integer]
//   primary := integer | variable | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& variables)
        : text_(text), vars_(variables) {}

    RPoly parse() {
        RPoly out = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("polynomial \"" + std::string(text_) + "\" at position " + std::to_string(pos_) + ": " +
                              why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    RPoly expr() {
        RPoly out(vars_.size());
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        RPoly first = term();
        out = negate ? -first : first;
        while (true) {
            if (accept('+')) {
                out += term();
            } else if (accept('-')) {
                out -= term();
            } else {
                return out;
            }
        }
    }

    RPoly term() {
        RPoly out = unary();
        while (true) {
            if (accept('*')) {
                out = out * unary();
            } else if (accept('/')) {
                const RPoly divisor = unary();
                if (divisor.degree() > 0) fail("division by a non-constant");
                const Rational c = divisor.coefficient(Monomial::one(vars_.size()));
                if (c.is_zero()) fail("division by zero");
                out = out.scaled(c.inverse());
            } else {
                return out;
            }
        }
    }

    RPoly unary() {
        if (accept('-')) return -unary();
        return power();
    }

    RPoly power() {
        RPoly base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a nonnegative integer literal");
            if (pos_ - start > 4) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    RPoly primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            RPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return RPoly::constant(vars_.size(), Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == name) return RPoly::variable(vars_.size(), i);
            }
            pos_ = start;
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

std::string at(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

std::string at(const std::string& where, std::size_t index) { return where + "[" + std::to_string(index) + "]"; }

const json& require(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError(at(where, key) + ": missing");
    return *it;
}

const json& require_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array");
    return j;
}

unsigned unsigned_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ValidationError(where + ": expected a nonnegative integer");
    }
    return j.get<unsigned>();
}

std::vector<Rational> rational_vector(const json& j, const std::string& where) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < require_array(j, where).size(); ++i) out.push_back(rational_from_json(j[i], at(where, i)));
    return out;
}

template <class F>
auto with_location(const std::string& where, F&& fn) {
    try {
        return fn();
    } catch (const LowerSetError& e) {
        throw LowerSetError(e.element(), e.missing(), where);
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

}  // namespace

RPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    return PolyParser(text, variables).parse();
}

RPoly parse_polynomial(std::string_view text, std::size_t dimension) {
    return parse_polynomial(text, default_variable_names(dimension));
}

HPoly parse_hpoly(std::string_view text) {
    const RPoly p = parse_polynomial(text, std::vector<std::string>{"h"});
    std::vector<Rational> coeffs(p.degree() < 0 ? 0 : static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& [m, c] : p.terms()) coeffs[m[0]] = c;
    return HPoly(std::move(coeffs));
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const HPoly& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.str());
    return out;
}

json to_json(const Monomial& m) {
    json out = json::array();
    for (unsigned e : m.exponents()) out.push_back(e);
    return out;
}

json to_json(const RPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) out.push_back({{"exponents", to_json(m)}, {"coefficient", c.str()}});
    return out;
}

json to_json(const SubspaceSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ClassOneSpec>) {
                json delta = json::array();
                for (const auto& alpha : s.delta.elements()) delta.push_back(to_json(alpha));
                json rho = json::array();
                for (const auto& v : s.rho.directions()) rho.push_back(to_json(v));
                return {{"type", "classOne"}, {"delta", delta}, {"rho", rho}};
            } else {
                json c = json::array();
                for (const auto& row : s.c.rows()) c.push_back(to_json(row));
                return {{"type", "classTwo"}, {"a", s.a.values()}, {"c", c}};
            }
        },
        spec);
}

json to_json(const Interpolant& interpolant) {
    return {{"coefficients", to_json(interpolant.coefficients)},
            {"polynomial", to_json(interpolant.polynomial)},
            {"text", to_string(interpolant.polynomial)}};
}

json to_json(const RangeStabilityReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"h", e.h.str()}, {"determinant", e.determinant.str()}, {"nonzero", e.nonzero}});
    }
    return {{"determinant", to_json(report.determinant)},
            {"determinantText", report.determinant.str()},
            {"entries", entries},
            {"allNonzero", report.all_nonzero()}};
}

json to_json(const ConvergenceReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r = {{"h", row.h.str()}, {"singular", row.singular}};
        if (row.singular) {
            r["rank"] = row.rank;
        } else {
            r["coefficients"] = to_json(row.coefficients);
            r["gaps"] = to_json(row.gaps);
        }
        rows.push_back(std::move(r));
    }
    json ratios = json::array();
    for (const auto& ratio_row : report.ratios) {
        json r = json::array();
        for (const auto& v : ratio_row) r.push_back(v ? json(v->str()) : json(nullptr));
        ratios.push_back(std::move(r));
    }
    json out = {{"limit", to_json(report.limit)},
                {"rows", rows},
                {"ratios", ratios},
                {"growthConstant", report.growth_constant.str()},
                {"verdict", report.pass ? "pass" : "fail"}};
    if (report.failing_coefficient) out["failingCoefficient"] = *report.failing_coefficient + 1;
    if (report.failing_h) out["failingH"] = report.failing_h->str();
    return out;
}

json to_json(const DInvarianceCertificate& cert) {
    json out = {{"invariant", cert.invariant}};
    if (cert.invariant) {
        json table = json::array();
        for (const auto& per_element : cert.coefficients) {
            json row = json::array();
            for (const auto& per_variable : per_element) row.push_back(to_json(per_variable));
            table.push_back(std::move(row));
        }
        out["coefficients"] = std::move(table);
    } else if (cert.witness) {
        out["witness"] = {{"element", cert.witness->element + 1},
                          {"variable", cert.witness->variable + 1},
                          {"derivative", to_string(cert.witness->derivative)}};
    }
    return out;
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return with_location(where, [&] { return Rational::parse(j.get<std::string>()); });
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) throw ValidationError(where + ": float literals are not accepted; write \"p/q\"");
    throw ValidationError(where + ": expected a rational string");
}

RPoly polynomial_from_json(const json& j, std::size_t dimension, const std::string& where) {
    if (j.is_string()) return with_location(where, [&] { return parse_polynomial(j.get<std::string>(), dimension); });
    require_array(j, where);
    RPoly out(dimension);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string loc = at(where, t);
        const json& exps = require_array(require(j[t], "exponents", loc), at(loc, "exponents"));
        if (exps.size() != dimension) {
            throw ValidationError(at(loc, "exponents") + ": expected " + std::to_string(dimension) + " entries");
        }
        std::vector<unsigned> e;
        for (std::size_t i = 0; i < exps.size(); ++i) e.push_back(unsigned_from_json(exps[i], at(at(loc, "exponents"), i)));
        out.add_term(Monomial(std::move(e)), rational_from_json(require(j[t], "coefficient", loc), at(loc, "coefficient")));
    }
    return out;
}

SubspaceSpec subspace_from_json(const json& j, const std::string& where) {
    const json& type = require(j, "type", where);
    if (type == "classOne") {
        const json& delta_json = require_array(require(j, "delta", where), at(where, "delta"));
        std::vector<Monomial> delta;
        for (std::size_t k = 0; k < delta_json.size(); ++k) {
            const std::string loc = at(at(where, "delta"), k);
            std::vector<unsigned> e;
            for (std::size_t i = 0; i < require_array(delta_json[k], loc).size(); ++i) {
                e.push_back(unsigned_from_json(delta_json[k][i], at(loc, i)));
            }
            delta.emplace_back(std::move(e));
        }
        const json& rho_json = require_array(require(j, "rho", where), at(where, "rho"));
        std::vector<std::vector<Rational>> rho;
        for (std::size_t k = 0; k < rho_json.size(); ++k) rho.push_back(rational_vector(rho_json[k], at(at(where, "rho"), k)));

        LowerSet lower = with_location(at(where, "delta"), [&] { return LowerSet::validate(std::move(delta)); });
        DirectionFrame frame = with_location(at(where, "rho"), [&] { return DirectionFrame::validate(std::move(rho)); });
        if (lower.dimension() != frame.dimension()) {
            throw ValidationError(where + ": delta has arity " + std::to_string(lower.dimension()) + " but rho has " +
                                  std::to_string(frame.dimension()) + " vectors");
        }
        return ClassOneSpec{std::move(lower), std::move(frame)};
    }
    if (type == "classTwo") {
        const json& a_json = require_array(require(j, "a", where), at(where, "a"));
        std::vector<unsigned> a;
        for (std::size_t k = 0; k < a_json.size(); ++k) a.push_back(unsigned_from_json(a_json[k], at(at(where, "a"), k)));
        const json& c_json = require_array(require(j, "c", where), at(where, "c"));
        std::vector<std::vector<Rational>> c;
        for (std::size_t k = 0; k < c_json.size(); ++k) c.push_back(rational_vector(c_json[k], at(at(where, "c"), k)));
        return with_location(where, [&] {
            return ClassTwoSpec(ExponentLadder::validate(std::move(a)), CoefficientTable::validate(std::move(c)));
        });
    }
    throw ValidationError(at(where, "type") + ": expected \"classOne\" or \"classTwo\"");
}

Problem problem_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("problem: expected a JSON object");
    const std::size_t d = unsigned_from_json(require(j, "dimension", ""), "dimension");
    if (d == 0) throw ValidationError("dimension: must be positive");

    const json& sites_json = require_array(require(j, "sites", ""), "sites");
    std::vector<SchemeEntry> entries;
    for (std::size_t k = 0; k < sites_json.size(); ++k) {
        const std::string loc = at(std::string("sites"), k);
        Site site(rational_vector(require(sites_json[k], "xi", loc), at(loc, "xi")));
        if (site.dimension() != d) {
            throw ValidationError(at(loc, "xi") + ": expected " + std::to_string(d) + " coordinates");
        }
        SubspaceSpec spec = subspace_from_json(require(sites_json[k], "subspace", loc), at(loc, "subspace"));
        if (spec_arity(spec) != d) {
            throw ValidationError(at(loc, "subspace") + ": dimension " + std::to_string(spec_arity(spec)) +
                                  " differs from " + std::to_string(d));
        }
        entries.push_back(SchemeEntry{std::move(site), std::move(spec)});
    }

    Problem problem{HermiteScheme(std::move(entries)), std::nullopt, std::nullopt, {}};
    if (const auto it = j.find("basis"); it != j.end()) {
        std::vector<RPoly> polys;
        for (std::size_t k = 0; k < require_array(*it, "basis").size(); ++k) {
            polys.push_back(polynomial_from_json((*it)[k], d, at(std::string("basis"), k)));
        }
        problem.basis = RangeBasis(std::move(polys));
    }
    if (const auto it = j.find("f"); it != j.end()) problem.f = polynomial_from_json(*it, d, "f");
    if (const auto it = j.find("h_values"); it != j.end()) problem.h_values = rational_vector(*it, "h_values");
    return problem;
}

Problem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read problem file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return problem_from_json(j);
}

json problem_to_json(const Problem& problem) {
    json sites = json::array();
    for (const auto& entry : problem.scheme.entries()) {
        sites.push_back({{"xi", to_json(entry.site.coords())}, {"subspace", to_json(entry.subspace)}});
    }
    json out = {{"dimension", problem.scheme.dimension()}, {"sites", sites}};
    if (problem.basis) {
        json basis = json::array();
        for (const auto& q : problem.basis->polys()) basis.push_back(to_string(q));
        out["basis"] = basis;
    }
    if (problem.f) out["f"] = to_string(*problem.f);
    if (!problem.h_values.empty()) out["h_values"] = to_json(problem.h_values);
    return out;
}

}  // namespace idealinterp
