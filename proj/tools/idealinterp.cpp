// Command-line front end: validate problem files, print subspace bases,
// interpolate, run convergence studies, export point trajectories and
// reproduce Example 5.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idealinterp/errors.hpp"
#include "idealinterp/example5.hpp"
#include "idealinterp/io.hpp"
#include "idealinterp/projector.hpp"

using namespace idealinterp;

namespace {

struct Options {
    bool json = false;
    std::string output;
    std::string problem;
    std::string mode = "hermite";
    std::vector<std::string> h;
    std::vector<std::string> t;
};

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts, const std::string& flag) {
    std::vector<Rational> out;
    for (const auto& s : texts) {
        try {
            out.push_back(Rational::parse(s));
        } catch (const ValidationError& e) {
            throw ValidationError(flag + ": " + e.what());
        }
    }
    return out;
}

const RangeBasis& need_basis(const Problem& p) {
    if (!p.basis) throw ValidationError("basis: missing");
    check_basis_shape(p.scheme, *p.basis);
    return *p.basis;
}

const RPoly& need_f(const Problem& p) {
    if (!p.f) throw ValidationError("f: missing");
    return *p.f;
}

std::string subspace_label(const SubspaceSpec& spec) {
    return std::holds_alternative<ClassOneSpec>(spec) ? "class one" : "class two";
}

int cmd_check(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt.problem);
    json report = json::array();
    int status = 0;
    for (std::size_t k = 0; k < p.scheme.entries().size(); ++k) {
        const auto& basis = p.scheme.bases()[k];
        const auto cert = check_d_invariance(basis);
        const std::size_t dim = subspace_dimension(p.scheme.entries()[k].subspace);
        const std::size_t span = span_dimension(basis);
        const bool ok = cert.invariant && span == dim;
        if (!ok) status = 3;
        report.push_back({{"site", k + 1},
                          {"kind", subspace_label(p.scheme.entries()[k].subspace)},
                          {"dimension", dim},
                          {"span", span},
                          {"dInvariance", to_json(cert)}});
        if (!opt.json) {
            out << "site " << k + 1 << ": " << subspace_label(p.scheme.entries()[k].subspace) << ", dimension " << dim
                << ", span " << span << ", " << (cert.invariant ? "D-invariant" : "NOT D-invariant") << "\n";
            if (cert.witness) {
                out << "  derivative d/dx" << cert.witness->variable + 1 << " of element " << cert.witness->element + 1
                    << " leaves the span: " << to_string(cert.witness->derivative) << "\n";
            }
        }
    }
    const RangeBasis& basis = need_basis(p);
    const Rational det = det_hermite(p.scheme, basis);
    if (det.is_zero() && status == 0) status = 2;
    if (opt.json) {
        out << json{{"sites", report},
                    {"s", p.scheme.size()},
                    {"hermiteDeterminant", det.str()},
                    {"pass", status == 0}}
                   .dump(2)
            << "\n";
    } else {
        out << "s = " << p.scheme.size() << " conditions, basis length " << basis.size() << "\n";
        out << "det(lambda^T q) = " << det << (det.is_zero() ? " (singular)" : "") << "\n";
        out << (status == 0 ? "pass" : "fail") << "\n";
    }
    return status;
}

int cmd_basis(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt.problem);
    if (opt.json) {
        json sites = json::array();
        for (std::size_t k = 0; k < p.scheme.entries().size(); ++k) {
            json polys = json::array();
            for (const auto& q : p.scheme.bases()[k].polys) polys.push_back(to_string(q));
            sites.push_back({{"site", k + 1},
                             {"xi", to_json(p.scheme.entries()[k].site.coords())},
                             {"subspace", to_json(p.scheme.entries()[k].subspace)},
                             {"basis", polys}});
        }
        out << json{{"sites", sites}, {"s", p.scheme.size()}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t k = 0; k < p.scheme.entries().size(); ++k) {
        const auto& entry = p.scheme.entries()[k];
        out << "site " << k + 1 << " (";
        for (std::size_t i = 0; i < entry.site.dimension(); ++i) out << (i ? ", " : "") << entry.site[i];
        out << "), " << subspace_label(entry.subspace) << "\n";
        const auto& polys = p.scheme.bases()[k].polys;
        for (std::size_t j = 0; j < polys.size(); ++j) out << "  " << j + 1 << ": " << to_string(polys[j]) << "\n";
    }
    return 0;
}

int cmd_interpolate(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt.problem);
    const RangeBasis& basis = need_basis(p);
    const RPoly& f = need_f(p);
    std::string mode = opt.mode;
    if (!opt.h.empty() && mode == "hermite") mode = "lagrange";
    Interpolant result;
    json header;
    if (mode == "hermite") {
        if (!opt.h.empty()) throw ValidationError("--h is only meaningful in lagrange mode");
        result = solve_exact(gram_hermite(p.scheme, basis, f), basis);
        header = {{"mode", "hermite"}};
    } else {
        if (opt.h.size() != 1) throw ValidationError("lagrange mode needs exactly one --h value");
        const Rational h0 = parse_rationals(opt.h, "--h").front();
        result = solve_exact(gram_lagrange(p.scheme, basis, f, h0), basis);
        header = {{"mode", "lagrange"}, {"h", h0.str()}};
    }
    if (opt.json) {
        json j = to_json(result);
        j.update(header);
        out << j.dump(2) << "\n";
    } else {
        out << to_string(result.polynomial) << "\n";
    }
    return 0;
}

int cmd_converge(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt.problem);
    const RangeBasis& basis = need_basis(p);
    const RPoly& f = need_f(p);
    const std::vector<Rational> hs = opt.h.empty() ? p.h_values : parse_rationals(opt.h, "--h");
    if (hs.empty()) throw ValidationError("h_values: missing (give them in the file or with --h)");
    const auto report = convergence_study(p.scheme, basis, f, hs);
    if (opt.json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << "limit coefficients:";
        for (const auto& x : report.limit) out << " " << x;
        out << "\n";
        for (const auto& row : report.rows) {
            out << "h = " << row.h << ":";
            if (row.singular) {
                out << " singular (rank " << row.rank << " < " << p.scheme.size() << ")\n";
                continue;
            }
            out << " gaps";
            for (const auto& g : row.gaps) out << " " << g;
            out << "\n";
        }
        out << "verdict: " << (report.pass ? "pass" : "fail");
        if (report.failing_coefficient) {
            out << " (coefficient " << *report.failing_coefficient + 1;
            if (report.failing_h) out << " at h = " << *report.failing_h;
            out << ")";
        }
        out << "\n";
    }
    return report.pass ? 0 : 2;
}

int cmd_trajectories(const Options& opt, std::ostream& out) {
    const Problem p = load_problem(opt.problem);
    if (opt.t.empty()) throw ValidationError("--t: at least one value required");
    const std::vector<Rational> ts = parse_rationals(opt.t, "--t");
    const auto points = generate_points(p.scheme);
    std::vector<std::size_t> site_of;
    for (std::size_t k = 0; k < p.scheme.entries().size(); ++k) {
        const std::size_t count = subspace_dimension(p.scheme.entries()[k].subspace);
        site_of.insert(site_of.end(), count, k + 1);
    }
    const std::size_t d = p.scheme.dimension();
    if (opt.json) {
        json rows = json::array();
        for (const auto& t : ts) {
            for (std::size_t i = 0; i < points.points.size(); ++i) {
                json coords = json::array();
                for (const auto& c : points.points[i]) coords.push_back(c(t).str());
                rows.push_back({{"point", i + 1}, {"site", site_of[i]}, {"t", t.str()}, {"coordinates", coords}});
            }
        }
        out << rows.dump(2) << "\n";
        return 0;
    }
    out << "point,site,t";
    for (std::size_t i = 0; i < d; ++i) out << ",x" << i + 1;
    out << "\n";
    for (const auto& t : ts) {
        for (std::size_t i = 0; i < points.points.size(); ++i) {
            out << i + 1 << "," << site_of[i] << "," << t;
            for (const auto& c : points.points[i]) out << "," << c(t);
            out << "\n";
        }
    }
    return 0;
}

int cmd_reproduce(const Options& opt, std::ostream& out) {
    const Problem p = opt.problem.empty() ? example5_problem() : load_problem(opt.problem);
    const auto report = reproduce_example5(p);
    if (opt.json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            out << (c.match ? "match    " : "MISMATCH ") << c.name << ": " << c.detail << "\n";
        }
        out << (report.all_match() ? "all match" : "mismatch") << "\n";
    }
    return report.all_match() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hermite and perturbed Lagrange interpolation with D-invariant subspaces"};
    // "--h" is the perturbation parameter, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Emit JSON instead of text");
    app.add_option("--output", opt.output, "Write output to this file instead of stdout");

    auto* check = app.add_subcommand("check", "Validate a problem file");
    auto* basis = app.add_subcommand("basis", "Print the constructed subspace bases");
    auto* interpolate = app.add_subcommand("interpolate", "Solve the Hermite or perturbed Lagrange problem");
    auto* converge = app.add_subcommand("converge", "Compare P_h f with P f over a list of h");
    auto* trajectories = app.add_subcommand("trajectories", "Export perturbed point coordinates as CSV");
    auto* reproduce = app.add_subcommand("reproduce-example5", "Diff the Example 5 pipeline against published values");

    for (auto* sub : {check, basis, interpolate, converge, trajectories}) {
        sub->add_option("problem", opt.problem, "Problem file (JSON)")->required();
    }
    interpolate->add_option("--mode", opt.mode, "hermite or lagrange")
        ->check(CLI::IsMember({"hermite", "lagrange"}));
    interpolate->add_option("--h", opt.h, "Perturbation parameter (implies lagrange)");
    converge->add_option("--h", opt.h, "Perturbation parameters, overriding h_values");
    trajectories->add_option("--t", opt.t, "Parameter values")->required();
    reproduce->add_option("--problem", opt.problem, "Run against this problem file instead of the bundled one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::ostringstream buffer;
    int status = 0;
    try {
        if (*check) status = cmd_check(opt, buffer);
        else if (*basis) status = cmd_basis(opt, buffer);
        else if (*interpolate) status = cmd_interpolate(opt, buffer);
        else if (*converge) status = cmd_converge(opt, buffer);
        else if (*trajectories) status = cmd_trajectories(opt, buffer);
        else if (*reproduce) status = cmd_reproduce(opt, buffer);
    } catch (const Error& e) {
        std::cout << buffer.str();
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (opt.output.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(opt.output);
        if (!file) {
            std::cerr << "error: cannot write " << opt.output << "\n";
            return 1;
        }
        file << buffer.str();
    }
    return status;
}
