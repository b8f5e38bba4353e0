// Acceptance suite: one line of output per criterion, exit 0 iff every
// requested criterion passes. Run a single criterion with `acceptance <n>`.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "boole/bounds.hpp"
#include "boole/events.hpp"
#include "boole/game.hpp"
#include "boole/montecarlo.hpp"
#include "boole/polytope.hpp"
#include "boole/quantum.hpp"
#include "boole/rng.hpp"

using namespace boole;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

Rational random_unit_rational(Pcg32& rng, int max_den) {
    const int den = 1 + static_cast<int>(rng.next_u32() % static_cast<unsigned>(max_den));
    const int num = static_cast<int>(rng.next_u32() % static_cast<unsigned>(den + 1));
    return Rational(num, den);
}

AtomDistribution random_distribution(int n, Pcg32& rng) {
    std::vector<Rational> raw(std::size_t{1} << n);
    Rational total = 0;
    for (auto& w : raw) {
        w = Rational(rng.next_u32() % 100);
        total += w;
    }
    if (total == 0) return AtomDistribution::point_mass(n, 0);
    for (auto& w : raw) w /= total;
    return AtomDistribution(n, std::move(raw));
}

// --- criterion 1: game infeasibility ----------------------------------------

Outcome criterion_game() {
    const auto start = Clock::now();
    Outcome out;
    const MixingSolution s = solve_mixing(bell_effect_target());
    out.require(s.weights[0] == Rational(3, 8), "alpha != 3/8");
    out.require(s.weights[1] == Rational(3, 8), "beta != 3/8");
    out.require(s.weights[2] == Rational(-1, 8), "gamma != -1/8");
    out.require(s.weights[3] == Rational(3, 8), "delta != 3/8");
    out.require(!s.feasible, "target reported feasible");
    out.require(s.negative_components == std::vector<int>{2}, "gamma not the flagged component");
    out.require(seconds_since(start) < 1.0, "took 1 s or longer");
    return out;
}

// --- criterion 2: Bell violation --------------------------------------------

Outcome criterion_bell() {
    const auto start = Clock::now();
    Outcome out;
    const auto exact = ch_value_exact(paper_angles());
    out.require(exact.has_value(), "reference configuration missed the exact path");
    if (exact) {
        out.require(exact->total == Rational(-9, 8), "exact total != -9/8");
        out.require(exact->lower_violation == Rational(1, 8), "exact lower violation != 1/8");
    }
    const ChBreakdown f = ch_value(paper_angles().to_radians());
    out.require(std::abs(f.total - (-1.125)) < 1e-12, "floating total off by more than 1e-12");
    out.require(std::abs(f.lower_violation - 0.125) < 1e-12, "floating violation off");
    out.require(seconds_since(start) < 1.0, "took 1 s or longer");
    return out;
}

// --- criterion 3: classical bound -------------------------------------------

Outcome criterion_classical_bound() {
    Outcome out;
    for (int bits = 0; bits < 16; ++bits) {
        const auto spin_of = [&](int pos) { return bits & (1 << pos) ? Spin::Plus : Spin::Minus; };
        const ChBreakdownExact t =
            ch_deterministic({spin_of(0), spin_of(1), spin_of(2), spin_of(3)});
        out.require(t.total >= -1 && t.total <= 0,
                    "deterministic assignment " + std::to_string(bits) + " left [-1,0]");
    }
    Pcg32 rng(1001, 0);
    for (int round = 0; round < 1000; ++round) {
        std::array<Rational, 16> weights{};
        Rational total = 0;
        for (auto& w : weights) {
            w = Rational(rng.next_u32() % 12);
            total += w;
        }
        if (total == 0) {
            weights[0] = 1;
            total = 1;
        }
        for (auto& w : weights) w /= total;
        const ChBreakdownExact t = ch_mixture(weights);
        if (!(t.total >= -1 && t.total <= 0)) {
            out.fail("mixture " + std::to_string(round) + " left [-1,0]");
            break;
        }
    }
    return out;
}

// --- criterion 4: polytope rejection ----------------------------------------

Outcome criterion_polytope() {
    const auto start = Clock::now();
    Outcome out;
    const EventScenario scenario = ch_scenario();

    const auto quantum = singlet_assignment(paper_angles());
    out.require(quantum.has_value(), "no exact quantum assignment");
    if (quantum) {
        const MembershipVerdict verdict = check_membership(*quantum);
        out.require(!verdict.inside(), "quantum assignment accepted");
        if (!verdict.inside()) {
            out.require(verdict.violation == Rational(1, 8), "violation != 1/8");
            out.require(verify_certificate(*quantum, *verdict.certificate),
                        "certificate failed verification");
        }
    }

    for (const Vertex& v : enumerate_vertices(scenario)) {
        ProbabilityAssignment point(scenario, v.coordinates);
        const MembershipVerdict verdict = check_membership(point);
        if (!verdict.inside() ||
            !(assignment_from_distribution(*verdict.witness, scenario) == point)) {
            out.fail("vertex " + std::to_string(v.atom) + " not accepted with exact witness");
            break;
        }
    }

    Pcg32 rng(1004, 0);
    const auto vertices = enumerate_vertices(scenario);
    for (int round = 0; round < 1000; ++round) {
        std::vector<Rational> weights(vertices.size());
        Rational total = 0;
        for (auto& w : weights) {
            w = Rational(rng.next_u32() % 20);
            total += w;
        }
        if (total == 0) {
            weights[0] = 1;
            total = 1;
        }
        std::vector<Rational> values(scenario.size(), Rational(0));
        for (std::size_t v = 0; v < vertices.size(); ++v)
            for (std::size_t s = 0; s < scenario.size(); ++s)
                values[s] += weights[v] / total * vertices[v].coordinates[s];
        ProbabilityAssignment mixture(scenario, std::move(values));
        const MembershipVerdict verdict = check_membership(mixture);
        if (!verdict.inside() ||
            !(assignment_from_distribution(*verdict.witness, scenario) == mixture)) {
            out.fail("mixture " + std::to_string(round) + " not accepted with exact witness");
            break;
        }
    }

    out.require(seconds_since(start) < 5.0, "took 5 s or longer");
    return out;
}

// --- criterion 5: Boole tightness -------------------------------------------

Outcome criterion_tightness() {
    const auto start = Clock::now();
    Outcome out;
    Pcg32 rng(1005, 0);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng.next_u32() % 4);
        std::vector<Subset> singletons;
        std::vector<Rational> marginals;
        for (int i = 1; i <= n; ++i) {
            singletons.push_back({i});
            marginals.push_back(random_unit_rational(rng, 12));
        }
        ProbabilityAssignment constraints(EventScenario(n, singletons), marginals);

        const auto u = extremize_over_polytope(constraints, union_objective(n));
        const auto i = extremize_over_polytope(constraints, intersection_objective(n));
        if (!u.feasible() || !i.feasible()) {
            out.fail("marginal-only constraints reported infeasible (round " +
                     std::to_string(round) + ")");
            break;
        }
        if (!(*u.interval == union_bounds(marginals).interval) ||
            !(*i.interval == intersection_bounds(marginals).interval)) {
            out.fail("LP endpoints differ from formula bounds (round " + std::to_string(round) +
                     ")");
            break;
        }
    }
    out.require(seconds_since(start) < 30.0, "took 30 s or longer");
    return out;
}

// --- criterion 6: Bonferroni family -----------------------------------------

Outcome criterion_bonferroni_family() {
    Outcome out;
    for (int n = 2; n <= 4; ++n) {
        const auto family = generate_bonferroni_family(n);
        out.require(family.size() == (std::size_t{1} << n),
                    "n=" + std::to_string(n) + ": expected 2^n entries");
        for (const auto& ineq : family)
            if (!ineq.holds_on_all_atoms()) {
                out.fail("n=" + std::to_string(n) + ": a member fails on a vertex");
                break;
            }
        std::set<std::string> forms;
        for (const auto& ineq : family) forms.insert(ineq.to_string());
        if (forms.size() != family.size()) {
            // Distinctness does not hold at n = 3: complementing an index set
            // and complementing its complement produce the same checkable
            // inequality exactly when n = 3, so only 2^(n-1) = 4 distinct
            // forms exist (see README, "Bonferroni family").
            out.fail("n=" + std::to_string(n) + ": only " + std::to_string(forms.size()) +
                     " of " + std::to_string(family.size()) +
                     " canonical forms are distinct (complement pairs coincide at n=3)");
        }
    }
    const auto family3 = generate_bonferroni_family(3);
    const LinearInequality wigner(EventScenario::pairs_family(3),
                                  {0, 0, Rational(-1), Rational(-1), 1, 1}, 0);
    out.require(family3[3] == wigner.canonical(),
                "n=3 variant for {3} is not p13 + p23 - p12 <= p3");
    return out;
}

// --- criterion 7: inclusion-exclusion oracle ---------------------------------

Outcome criterion_inclusion_exclusion() {
    Outcome out;
    Pcg32 rng(1007, 0);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(rng.next_u32() % 6);
        const AtomDistribution d = random_distribution(n, rng);
        const auto a = assignment_from_distribution(d, EventScenario::full_family(n));
        Rational direct = 0;  // brute-force oracle: sum the nonempty atoms
        for (AtomMask atom = 1; atom < d.weights().size(); ++atom) direct += d.weight(atom);
        if (inclusion_exclusion_union(a) != direct) {
            out.fail("mismatch at round " + std::to_string(round));
            break;
        }
    }
    return out;
}

// --- criterion 8: Monte Carlo quantum gap ------------------------------------

Outcome criterion_mc_quantum() {
    const auto start = Clock::now();
    Outcome out;
    const RngSpec seed{1, 0};  // the documented acceptance seed
    const ChEstimate est = empirical_ch(paper_angles().to_radians(), 1000000, seed);
    out.require(std::abs(est.estimate - (-1.125)) < 0.005,
                "estimate " + std::to_string(est.estimate) + " not within 0.005 of -9/8");
    out.require(est.estimate < -1.1, "estimate not below -1.1");

    const auto freqs = empirical_bell_effect(1000000, seed);
    out.require(freqs[0] == 1.0, "same(A,A) frequency not exactly 1");
    out.require(std::abs(freqs[1] - 0.75) < 0.005, "same(A,B) off by 0.005+");
    out.require(std::abs(freqs[2] - 0.75) < 0.005, "same(B,C) off by 0.005+");
    out.require(std::abs(freqs[3] - 0.25) < 0.005, "same(A,C) off by 0.005+");
    out.require(seconds_since(start) < 30.0, "took 30 s or longer");
    return out;
}

// --- criterion 9: Monte Carlo classical ceiling -------------------------------

Outcome criterion_mc_classical() {
    Outcome out;
    Pcg32 mixer(1009, 0);
    for (int round = 0; round < 50; ++round) {
        std::array<double, 16> mixing;
        double total = 0;
        for (auto& w : mixing) {
            w = static_cast<double>(mixer.next_u32() % 1000);
            total += w;
        }
        if (total == 0) {
            mixing[0] = 1;
            total = 1;
        }
        for (auto& w : mixing) w /= total;
        const auto counts =
            sample_lhv(mixing, 1000000, RngSpec{2000 + static_cast<std::uint64_t>(round), 0});
        const ChEstimate est = ch_from_counts(counts);
        if (est.estimate < -1.02) {
            out.fail("mixing " + std::to_string(round) + " estimated " +
                     std::to_string(est.estimate) + " < -1.02");
            break;
        }
        if (est.estimate < -1.0 - 3 * est.standard_error) {
            out.fail("mixing " + std::to_string(round) + " dipped below -1 by over 3 SE");
            break;
        }
    }
    return out;
}

// --- criterion 10: CLI golden files ------------------------------------------

struct CommandResult {
    int exit_code = -1;
    std::string stdout_bytes;
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> chunk{};
    std::size_t got = 0;
    while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
        result.stdout_bytes.append(chunk.data(), got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Outcome criterion_cli_golden() {
    Outcome out;
    const std::string cli = BOOLE_CLI_PATH;
    const std::string golden = BOOLE_GOLDEN_DIR;

    const struct {
        const char* name;
        std::string command;
        std::string golden_file;
    } cases[] = {
        {"game", cli + " game --target 1,3/4,3/4,1/4", golden + "/game.out"},
        {"bell", cli + " bell --paper-angles", golden + "/bell.out"},
        {"check", cli + " check " + golden + "/game_target.constraints", golden + "/check.out"},
    };
    for (const auto& c : cases) {
        const CommandResult result = run_command(c.command + " 2>/dev/null");
        if (result.exit_code != 1) {
            out.fail(std::string(c.name) + ": exit code " + std::to_string(result.exit_code) +
                     ", expected 1");
            continue;
        }
        if (result.stdout_bytes != read_file(c.golden_file))
            out.fail(std::string(c.name) + ": output differs from " + c.golden_file);
    }
    return out;
}

// ------------------------------------------------------------------------------

struct Criterion {
    int id;
    const char* summary;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "game infeasibility: weights (3/8, 3/8, -1/8, 3/8), gamma flagged", criterion_game},
    {2, "Bell violation: CH total -9/8 exact, lower violation 1/8", criterion_bell},
    {3, "classical bound: deterministic assignments and mixtures stay in [-1, 0]",
     criterion_classical_bound},
    {4, "polytope rejection: quantum point refused with violation 1/8, vertices and mixtures "
        "accepted",
     criterion_polytope},
    {5, "Boole tightness: LP endpoints equal formula bounds on 200 marginal vectors",
     criterion_tightness},
    {6, "Bonferroni family: 2^n distinct canonical members, valid on every vertex, Wigner at "
        "S={3}",
     criterion_bonferroni_family},
    {7, "inclusion-exclusion equals brute-force atom summation on 100 distributions",
     criterion_inclusion_exclusion},
    {8, "Monte Carlo quantum gap: empirical CH near -9/8, game frequencies near target",
     criterion_mc_quantum},
    {9, "Monte Carlo classical ceiling: no LHV mixing estimates below -1.02",
     criterion_mc_classical},
    {10, "CLI golden files: game/bell/check byte-identical with exit codes 1",
     criterion_cli_golden},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) selected = std::atoi(argv[1]);

    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (selected != 0 && c.id != selected) continue;
        const Outcome outcome = c.run();
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
                  << c.summary;
        if (!outcome.pass) std::cout << " -- " << outcome.detail;
        std::cout << "\n";
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
