// boole: probability-bounds checker and Bell-effect workbench.
//
// Exit codes: 0 = consistent / no violation, 1 = inconsistent or inequality
// violated, 2 = usage or parse error.

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boole/bounds.hpp"
#include "boole/constraints.hpp"
#include "boole/errors.hpp"
#include "boole/game.hpp"
#include "boole/montecarlo.hpp"
#include "boole/polytope.hpp"
#include "boole/quantum.hpp"

using json = nlohmann::json;
using namespace boole;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

// 12 significant digits for human-readable floating values
std::string fmt_double(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t expected = 0) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto value = parse_rational(token);
        if (!value) throw CLI::ValidationError("bad rational '" + token + "'");
        values.push_back(*value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (expected && values.size() != expected)
        throw CLI::ValidationError("expected " + std::to_string(expected) + " values, got " +
                                   std::to_string(values.size()));
    return values;
}

std::vector<double> parse_double_list(const std::string& text, std::size_t expected) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            values.push_back(std::stod(token));
        } catch (const std::exception&) {
            throw CLI::ValidationError("bad number '" + token + "'");
        }
    }
    if (values.size() != expected)
        throw CLI::ValidationError("expected " + std::to_string(expected) + " values");
    return values;
}

std::vector<int> parse_int_list(const std::string& text, std::size_t expected) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            values.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw CLI::ValidationError("bad integer '" + token + "'");
        }
    }
    if (values.size() != expected)
        throw CLI::ValidationError("expected " + std::to_string(expected) + " values");
    return values;
}

// k * pi/12 rendered as 0, pi/4, 2pi/3, pi, ...
std::string grid_angle_str(int k) {
    if (k == 0) return "0";
    const int g = std::gcd(k, 12);
    const int num = k / g, den = 12 / g;
    std::string s = num == 1 ? "pi" : std::to_string(num) + "pi";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

std::string atom_str(AtomMask atom, int n) {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i)
        if (atom & (AtomMask{1} << (i - 1))) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

void print_distribution(std::ostream& out, const AtomDistribution& dist, const char* indent) {
    for (AtomMask atom = 0; atom < dist.weights().size(); ++atom) {
        const Rational& w = dist.weight(atom);
        if (w == 0) continue;
        out << indent << atom_str(atom, dist.n()) << ": " << to_string(w) << "\n";
    }
}

json distribution_json(const AtomDistribution& dist) {
    json atoms = json::array();
    for (AtomMask atom = 0; atom < dist.weights().size(); ++atom) {
        const Rational& w = dist.weight(atom);
        if (w == 0) continue;
        atoms.push_back({{"atom", atom_str(atom, dist.n())}, {"weight", to_string(w)}});
    }
    return atoms;
}

json certificate_json(const LinearInequality& cert) {
    json coeffs = json::array();
    for (std::size_t i = 0; i < cert.coefficients().size(); ++i) {
        if (cert.coefficients()[i] == 0) continue;
        std::string subset;
        for (int idx : cert.scenario().family()[i])
            subset += (subset.empty() ? "" : ",") + std::to_string(idx);
        coeffs.push_back({{"subset", subset}, {"coefficient", to_string(cert.coefficients()[i])}});
    }
    return {{"text", cert.to_string()},
            {"coefficients", coeffs},
            {"constant", to_string(cert.constant())}};
}

struct GlobalFlags {
    std::string format = "text";
    bool is_json() const { return format == "json"; }
};

// ---------------------------------------------------------------- check ----

int run_check(const std::string& path, bool show_witness, const GlobalFlags& flags) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const ParseResult parsed = parse_constraints(buffer.str());
    if (!parsed.ok()) {
        for (const Diagnostic& d : parsed.diagnostics)
            std::cerr << path << ":" << d.to_string() << "\n";
        return kExitUsage;
    }

    const ProbabilityAssignment assignment = parsed.file->to_assignment();
    const MembershipVerdict verdict = check_membership(assignment);

    if (flags.is_json()) {
        json out{{"command", "check"},
                 {"events", parsed.file->n},
                 {"verdict", verdict.inside() ? "inside" : "outside"}};
        if (verdict.inside()) {
            if (show_witness) out["witness"] = distribution_json(*verdict.witness);
        } else {
            out["certificate"] = certificate_json(*verdict.certificate);
            out["violation"] = to_string(verdict.violation);
        }
        std::cout << out.dump(2) << "\n";
    } else if (verdict.inside()) {
        std::cout << "verdict: inside\n";
        if (show_witness) {
            std::cout << "witness:\n";
            print_distribution(std::cout, *verdict.witness, "  ");
        }
    } else {
        std::cout << "verdict: outside\n";
        std::cout << "certificate: " << verdict.certificate->to_string() << "\n";
        std::cout << "violation: " << to_string(verdict.violation) << "\n";
    }
    return verdict.inside() ? kExitOk : kExitViolated;
}

// --------------------------------------------------------------- bounds ----

int run_bounds(const std::string& union_arg, const std::string& intersection_arg,
               bool with_witnesses, const GlobalFlags& flags) {
    json out{{"command", "bounds"}};
    const auto render = [&](const char* label, const BoundsReport& report) {
        if (flags.is_json()) {
            json entry{{"lower", to_string(report.interval.lower)},
                       {"upper", to_string(report.interval.upper)}};
            if (report.witnesses) {
                entry["lower_witness"] = distribution_json(report.witnesses->first);
                entry["upper_witness"] = distribution_json(report.witnesses->second);
            }
            out[label] = entry;
        } else {
            std::cout << label << ": [" << to_string(report.interval.lower) << ", "
                      << to_string(report.interval.upper) << "]\n";
            if (report.witnesses) {
                std::cout << "lower witness:\n";
                print_distribution(std::cout, report.witnesses->first, "  ");
                std::cout << "upper witness:\n";
                print_distribution(std::cout, report.witnesses->second, "  ");
            }
        }
    };

    if (!union_arg.empty()) {
        const auto marginals = parse_rational_list(union_arg);
        render("union", with_witnesses ? union_bounds_with_witnesses(marginals)
                                       : union_bounds(marginals));
    }
    if (!intersection_arg.empty()) {
        const auto marginals = parse_rational_list(intersection_arg);
        render("intersection", with_witnesses ? intersection_bounds_with_witnesses(marginals)
                                              : intersection_bounds(marginals));
    }
    if (flags.is_json()) std::cout << out.dump(2) << "\n";
    return kExitOk;
}

// ----------------------------------------------------------------- game ----

int run_game(const std::string& target_arg, const GlobalFlags& flags) {
    const auto values = parse_rational_list(target_arg, 4);
    const CorrelationTarget target{values[0], values[1], values[2], values[3]};
    const MixingSolution solution = solve_mixing(target);

    static const std::array<const char*, 4> names{"alpha", "beta", "gamma", "delta"};
    if (flags.is_json()) {
        json weights;
        for (int c = 0; c < 4; ++c)
            weights[names[static_cast<std::size_t>(c)]] =
                to_string(solution.weights[static_cast<std::size_t>(c)]);
        json negative = json::array();
        for (int c : solution.negative_components)
            negative.push_back(names[static_cast<std::size_t>(c)]);
        const json out{{"command", "game"},
                       {"target",
                        {{"same_when_equal", to_string(target.same_when_equal)},
                         {"same_ab", to_string(target.same_ab)},
                         {"same_bc", to_string(target.same_bc)},
                         {"same_ac", to_string(target.same_ac)}}},
                       {"weights", weights},
                       {"feasible", solution.feasible},
                       {"negative", negative}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "target: same(A,B) = " << to_string(target.same_ab)
                  << ", same(B,C) = " << to_string(target.same_bc)
                  << ", same(A,C) = " << to_string(target.same_ac) << "\n";
        std::cout << "classes: RRR RRS RSR RSS\n";
        std::cout << "weights:";
        for (int c = 0; c < 4; ++c)
            std::cout << (c ? ", " : " ") << names[static_cast<std::size_t>(c)] << " = "
                      << to_string(solution.weights[static_cast<std::size_t>(c)]);
        std::cout << "\n";
        if (solution.feasible) {
            std::cout << "feasible: yes\n";
        } else {
            std::cout << "infeasible:";
            bool first = true;
            for (int c : solution.negative_components) {
                std::cout << (first ? " " : ", ") << names[static_cast<std::size_t>(c)] << " = "
                          << to_string(solution.weights[static_cast<std::size_t>(c)]);
                first = false;
            }
            std::cout << "\n";
        }
    }
    return solution.feasible ? kExitOk : kExitViolated;
}

// ----------------------------------------------------------------- bell ----

void print_bell_exact(const GridAngleConfig& grid, const ChBreakdownExact& exact,
                      bool violated, const GlobalFlags& flags) {
    if (flags.is_json()) {
        const json out{{"command", "bell"},
                       {"path", "exact"},
                       {"angles",
                        {{"alpha1", grid_angle_str(grid.alpha1)},
                         {"alpha2", grid_angle_str(grid.alpha2)},
                         {"beta1", grid_angle_str(grid.beta1)},
                         {"beta2", grid_angle_str(grid.beta2)}}},
                       {"terms",
                        {{"j11", to_string(exact.j11)},
                         {"j12", to_string(exact.j12)},
                         {"j22", to_string(exact.j22)},
                         {"j21", to_string(exact.j21)},
                         {"m1", to_string(exact.m1)},
                         {"m2", to_string(exact.m2)}}},
                       {"total", to_string(exact.total)},
                       {"lower_violation", to_string(exact.lower_violation)},
                       {"upper_violation", to_string(exact.upper_violation)},
                       {"violated", violated}};
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "angles: alpha1 = " << grid_angle_str(grid.alpha1)
              << ", alpha2 = " << grid_angle_str(grid.alpha2)
              << ", beta1 = " << grid_angle_str(grid.beta1)
              << ", beta2 = " << grid_angle_str(grid.beta2) << " (exact path)\n";
    std::cout << "joint(+,+): (alpha1,beta1) = " << to_string(exact.j11)
              << ", (alpha1,beta2) = " << to_string(exact.j12)
              << ", (alpha2,beta2) = " << to_string(exact.j22)
              << ", (alpha2,beta1) = " << to_string(exact.j21) << "\n";
    std::cout << "marginals: p1(alpha1|+) = " << to_string(exact.m1)
              << ", p2(beta2|+) = " << to_string(exact.m2) << "\n";
    std::cout << "ch total: " << to_string(exact.total) << " (bounds -1 <= total <= 0)\n";
    std::cout << "lower violation: " << to_string(exact.lower_violation) << "\n";
    std::cout << "upper violation: " << to_string(exact.upper_violation) << "\n";
}

void print_bell_floating(const AngleConfig& config, const ChBreakdown& terms, bool violated,
                         const GlobalFlags& flags) {
    if (flags.is_json()) {
        const json out{{"command", "bell"},
                       {"path", "floating"},
                       {"angles",
                        {{"alpha1", config.alpha1},
                         {"alpha2", config.alpha2},
                         {"beta1", config.beta1},
                         {"beta2", config.beta2}}},
                       {"terms",
                        {{"j11", terms.j11},
                         {"j12", terms.j12},
                         {"j22", terms.j22},
                         {"j21", terms.j21},
                         {"m1", terms.m1},
                         {"m2", terms.m2}}},
                       {"total", terms.total},
                       {"lower_violation", terms.lower_violation},
                       {"upper_violation", terms.upper_violation},
                       {"violated", violated}};
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "angles: alpha1 = " << fmt_double(config.alpha1)
              << ", alpha2 = " << fmt_double(config.alpha2)
              << ", beta1 = " << fmt_double(config.beta1)
              << ", beta2 = " << fmt_double(config.beta2) << "\n";
    std::cout << "joint(+,+): (alpha1,beta1) = " << fmt_double(terms.j11)
              << ", (alpha1,beta2) = " << fmt_double(terms.j12)
              << ", (alpha2,beta2) = " << fmt_double(terms.j22)
              << ", (alpha2,beta1) = " << fmt_double(terms.j21) << "\n";
    std::cout << "marginals: p1(alpha1|+) = " << fmt_double(terms.m1)
              << ", p2(beta2|+) = " << fmt_double(terms.m2) << "\n";
    std::cout << "ch total: " << fmt_double(terms.total) << " (bounds -1 <= total <= 0)\n";
    std::cout << "lower violation: " << fmt_double(terms.lower_violation) << "\n";
    std::cout << "upper violation: " << fmt_double(terms.upper_violation) << "\n";
}

int run_bell(bool use_paper, const std::string& grid_arg, const std::string& angles_arg,
             const GlobalFlags& flags) {
    std::optional<GridAngleConfig> grid;
    AngleConfig config;
    if (use_paper) {
        grid = paper_angles();
    } else if (!grid_arg.empty()) {
        const auto k = parse_int_list(grid_arg, 4);
        grid = GridAngleConfig{k[0], k[1], k[2], k[3]};
    } else if (!angles_arg.empty()) {
        const auto a = parse_double_list(angles_arg, 4);
        config = AngleConfig{a[0], a[1], a[2], a[3]};
    } else {
        throw CLI::ValidationError("bell needs --paper-angles, --grid-angles or --angles");
    }

    if (grid) {
        config = grid->to_radians();
        if (const auto exact = ch_value_exact(*grid)) {
            const bool violated = exact->lower_violation > 0 || exact->upper_violation > 0;
            print_bell_exact(*grid, *exact, violated, flags);
            return violated ? kExitViolated : kExitOk;
        }
    }
    const ChBreakdown terms = ch_value(config);
    const bool violated = terms.lower_violation > 0 || terms.upper_violation > 0;
    print_bell_floating(config, terms, violated, flags);
    return violated ? kExitViolated : kExitOk;
}

// ----------------------------------------------------------------- scan ----

int run_scan(int steps, const std::string& output, const GlobalFlags& flags) {
    const ScanReport report = scan_ch(steps);

    std::ofstream csv(output);
    if (!csv) {
        std::cerr << "error: cannot write '" << output << "'\n";
        return kExitUsage;
    }
    write_scan_csv(report, csv);
    csv.close();

    const ScanRow& best = report.rows[report.argmax_lower];
    if (flags.is_json()) {
        const json out{{"command", "scan"},
                       {"steps", report.steps},
                       {"rows", report.rows.size()},
                       {"output", output},
                       {"max_lower_violation", report.max_lower_violation},
                       {"max_upper_violation", report.max_upper_violation},
                       {"argmax_lower",
                        {{"alpha1", best.alpha1},
                         {"alpha2", best.alpha2},
                         {"beta1", best.beta1},
                         {"beta2", best.beta2}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "rows: " << report.rows.size() << "\n";
        std::cout << "max lower violation: " << fmt_double(report.max_lower_violation)
                  << " at alpha1 = " << fmt_double(best.alpha1)
                  << ", alpha2 = " << fmt_double(best.alpha2)
                  << ", beta1 = " << fmt_double(best.beta1)
                  << ", beta2 = " << fmt_double(best.beta2) << "\n";
        std::cout << "max upper violation: " << fmt_double(report.max_upper_violation) << "\n";
        std::cout << "wrote: " << output << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------- mc ----

struct McCommon {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
};

int run_mc_ch(const McCommon& mc, const std::string& angles_arg, const GlobalFlags& flags) {
    AngleConfig config = paper_angles().to_radians();
    if (!angles_arg.empty()) {
        const auto a = parse_double_list(angles_arg, 4);
        config = AngleConfig{a[0], a[1], a[2], a[3]};
    }
    const ChEstimate est = empirical_ch(config, mc.trials, RngSpec{mc.seed, mc.stream});
    if (flags.is_json()) {
        const json out{{"command", "mc-ch"},       {"trials_per_setting", mc.trials},
                       {"seed", mc.seed},          {"stream", mc.stream},
                       {"estimate", est.estimate}, {"standard_error", est.standard_error}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "trials per setting: " << mc.trials << ", seed " << mc.seed << ", stream "
                  << mc.stream << "\n";
        std::cout << "ch estimate: " << fmt_double(est.estimate) << " +/- "
                  << fmt_double(est.standard_error) << "\n";
    }
    return kExitOk;
}

int run_mc_lhv(const McCommon& mc, const std::string& mixing_arg, const GlobalFlags& flags) {
    std::array<double, 16> mixing;
    mixing.fill(1.0 / 16.0);
    std::string label = "uniform";
    if (!mixing_arg.empty()) {
        const auto values = parse_double_list(mixing_arg, 16);
        std::copy(values.begin(), values.end(), mixing.begin());
        label = mixing_arg;
    }
    const auto counts = sample_lhv(mixing, mc.trials, RngSpec{mc.seed, mc.stream});
    const ChEstimate est = ch_from_counts(counts);
    if (flags.is_json()) {
        const json out{{"command", "mc-lhv"},
                       {"mixing", label},
                       {"trials_per_setting", mc.trials},
                       {"seed", mc.seed},
                       {"stream", mc.stream},
                       {"estimate", est.estimate},
                       {"standard_error", est.standard_error}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "mixing: " << label << "\n";
        std::cout << "trials per setting: " << mc.trials << ", seed " << mc.seed << ", stream "
                  << mc.stream << "\n";
        std::cout << "ch estimate: " << fmt_double(est.estimate) << " +/- "
                  << fmt_double(est.standard_error) << "\n";
    }
    return kExitOk;
}

int run_mc_bell_effect(const McCommon& mc, const GlobalFlags& flags) {
    const auto freqs = empirical_bell_effect(mc.trials, RngSpec{mc.seed, mc.stream});
    static const std::array<const char*, 4> labels{"same(A,A)", "same(A,B)", "same(B,C)",
                                                   "same(A,C)"};
    if (flags.is_json()) {
        json out{{"command", "mc-bell-effect"},
                 {"trials_per_pair", mc.trials},
                 {"seed", mc.seed},
                 {"stream", mc.stream}};
        for (std::size_t k = 0; k < 4; ++k) out[labels[k]] = freqs[k];
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "trials per pair: " << mc.trials << ", seed " << mc.seed << ", stream "
                  << mc.stream << "\n";
        for (std::size_t k = 0; k < 4; ++k)
            std::cout << labels[k] << " = " << fmt_double(freqs[k]) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Boole-type probability bounds, correlation-polytope membership, and the Bell effect"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string check_path;
    bool check_witness = false;
    auto* check = app.add_subcommand("check", "decide polytope membership of a constraint file");
    check->add_option("file", check_path, "constraint file")->required();
    check->add_flag("--witness", check_witness, "print the realizing distribution when inside");

    std::string bounds_union, bounds_intersection;
    bool bounds_witnesses = false;
    auto* bounds = app.add_subcommand("bounds", "best-possible union/intersection bounds");
    bounds->add_option("--union", bounds_union, "comma-separated marginals");
    bounds->add_option("--intersection", bounds_intersection, "comma-separated marginals");
    bounds->add_flag("--witnesses", bounds_witnesses, "attach attaining distributions (LP)");

    std::string game_target;
    auto* game = app.add_subcommand("game", "mixing weights for a question-game target");
    game->add_option("--target", game_target,
                     "same-when-equal,same(A,B),same(B,C),same(A,C) as rationals")
        ->required();

    bool bell_paper = false;
    std::string bell_grid, bell_angles;
    auto* bell = app.add_subcommand("bell", "evaluate the CH expression under the singlet model");
    bell->add_flag("--paper-angles", bell_paper,
                   "use the reference configuration pi/3, pi, 0, 2pi/3");
    bell->add_option("--grid-angles", bell_grid,
                     "four integers, angles in pi/12 units (exact path)");
    bell->add_option("--angles", bell_angles, "four angles in radians (floating path)");

    int scan_steps = 24;
    std::string scan_output = "ch_scan.csv";
    auto* scan = app.add_subcommand("scan", "grid scan of the CH expression");
    scan->add_option("--steps", scan_steps, "steps per angle")->capture_default_str();
    scan->add_option("--output", scan_output, "CSV output path")->capture_default_str();

    McCommon mc;
    auto* mc_cmd = app.add_subcommand("mc", "seeded Monte Carlo estimators");
    mc_cmd->require_subcommand(1);
    const auto add_mc_common = [&mc](CLI::App* sub) {
        sub->add_option("--trials", mc.trials, "trials per setting/pair")->capture_default_str();
        sub->add_option("--seed", mc.seed, "rng seed")->capture_default_str();
        sub->add_option("--stream", mc.stream, "rng stream")->capture_default_str();
    };
    std::string mc_angles;
    auto* mc_ch = mc_cmd->add_subcommand("ch", "empirical CH estimate under the singlet model");
    add_mc_common(mc_ch);
    mc_ch->add_option("--angles", mc_angles, "four angles in radians (default: reference)");
    std::string mc_mixing;
    auto* mc_lhv = mc_cmd->add_subcommand("lhv", "empirical CH of a local deterministic mixture");
    add_mc_common(mc_lhv);
    mc_lhv->add_option("--mixing", mc_mixing, "16 weights over outcome assignments");
    auto* mc_bell = mc_cmd->add_subcommand("bell-effect", "empirical question-game frequencies");
    add_mc_common(mc_bell);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(check_path, check_witness, flags);
        if (bounds->parsed()) {
            if (bounds_union.empty() && bounds_intersection.empty()) {
                std::cerr << "error: bounds needs --union and/or --intersection\n";
                return kExitUsage;
            }
            return run_bounds(bounds_union, bounds_intersection, bounds_witnesses, flags);
        }
        if (game->parsed()) return run_game(game_target, flags);
        if (bell->parsed()) return run_bell(bell_paper, bell_grid, bell_angles, flags);
        if (scan->parsed()) return run_scan(scan_steps, scan_output, flags);
        if (mc_cmd->parsed()) {
            if (mc_ch->parsed()) return run_mc_ch(mc, mc_angles, flags);
            if (mc_lhv->parsed()) return run_mc_lhv(mc, mc_mixing, flags);
            if (mc_bell->parsed()) return run_mc_bell_effect(mc, flags);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
