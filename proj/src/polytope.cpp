#include "boole/polytope.hpp"

#include <utility>

#include "boole/errors.hpp"
#include "boole/simplex.hpp"

namespace boole {

namespace {

// Equality system of the membership/extremization LP: one row per family
// subset (sum of the atom weights the subset covers) plus the normalization
// row, columns indexed by atom mask ascending.
std::pair<std::vector<std::vector<Rational>>, std::vector<Rational>> feasibility_system(
    const ProbabilityAssignment& assignment) {
    const EventScenario& scenario = assignment.scenario();
    const std::size_t num_atoms = std::size_t{1} << scenario.n();
    const auto& masks = scenario.family_masks();

    std::vector<std::vector<Rational>> a(masks.size() + 1,
                                         std::vector<Rational>(num_atoms, Rational(0)));
    std::vector<Rational> b;
    b.reserve(masks.size() + 1);
    for (std::size_t s = 0; s < masks.size(); ++s) {
        for (AtomMask atom = 0; atom < num_atoms; ++atom)
            if ((atom & masks[s]) == masks[s]) a[s][atom] = 1;
        b.push_back(assignment.values()[s]);
    }
    a.back().assign(num_atoms, Rational(1));
    b.push_back(1);
    return {std::move(a), std::move(b)};
}

AtomDistribution distribution_from_lp(int n, const std::vector<Rational>& x) {
    return AtomDistribution(n, x);
}

// Farkas row multipliers -> separating inequality over the family. The
// normalization multiplier becomes (negated) the constant.
LinearInequality certificate_from_farkas(const EventScenario& scenario,
                                         const std::vector<Rational>& farkas) {
    std::vector<Rational> coeffs(farkas.begin(), farkas.end() - 1);
    return LinearInequality(scenario, std::move(coeffs), -farkas.back()).canonical();
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const EventScenario& scenario) {
    if (scenario.n() > 20) throw SizeError("vertex enumeration supported for 1..20 events");
    const auto& masks = scenario.family_masks();
    std::vector<Vertex> vertices;
    vertices.reserve(std::size_t{1} << scenario.n());
    for (AtomMask atom : enumerate_atoms(scenario.n())) {
        Vertex v;
        v.atom = atom;
        v.coordinates.reserve(masks.size());
        for (AtomMask mask : masks)
            v.coordinates.emplace_back((atom & mask) == mask ? 1 : 0);
        vertices.push_back(std::move(v));
    }
    return vertices;
}

MembershipVerdict check_membership(const ProbabilityAssignment& assignment) {
    if (assignment.scenario().n() > 20)
        throw SizeError("membership supported for 1..20 events");
    auto [a, b] = feasibility_system(assignment);
    const std::vector<Rational> zero(a[0].size(), Rational(0));
    const LpSolution lp = minimize(a, b, zero);

    MembershipVerdict verdict;
    if (lp.status == LpStatus::Optimal) {
        verdict.status = Membership::Inside;
        verdict.witness = distribution_from_lp(assignment.scenario().n(), lp.x);
        return verdict;
    }
    verdict.status = Membership::Outside;
    verdict.certificate = certificate_from_farkas(assignment.scenario(), lp.farkas);
    verdict.violation = verdict.certificate->violation(assignment);
    return verdict;
}

bool verify_certificate(const ProbabilityAssignment& assignment,
                        const LinearInequality& certificate) {
    if (!(certificate.scenario() == assignment.scenario()))
        throw ScenarioError("certificate and assignment scenarios differ");
    if (!certificate.holds_on_all_atoms()) return false;
    return !certificate.satisfied_by(assignment);
}

LinearInequality derive_bell_wigner() {
    return complement_transform(bonferroni_inequality(3), {3}).canonical();
}

ExtremizeResult extremize_over_polytope(const ProbabilityAssignment& constraints,
                                        const std::vector<Rational>& atom_objective) {
    const int n = constraints.scenario().n();
    if (n > 20) throw SizeError("extremization supported for 1..20 events");
    const std::size_t num_atoms = std::size_t{1} << n;
    if (atom_objective.size() != num_atoms)
        throw SizeError("objective must have one entry per atom");

    auto [a, b] = feasibility_system(constraints);

    ExtremizeResult result;
    const LpSolution lo = minimize(a, b, atom_objective);
    if (lo.status == LpStatus::Infeasible) {
        result.certificate = certificate_from_farkas(constraints.scenario(), lo.farkas);
        result.violation = result.certificate->violation(constraints);
        return result;
    }
    std::vector<Rational> negated(atom_objective.size());
    for (std::size_t i = 0; i < atom_objective.size(); ++i) negated[i] = -atom_objective[i];
    const LpSolution hi = minimize(a, b, negated);
    // the feasible region is a bounded polytope, so neither solve can be unbounded
    result.interval = Interval(lo.objective, -hi.objective);
    result.minimizer = distribution_from_lp(n, lo.x);
    result.maximizer = distribution_from_lp(n, hi.x);
    return result;
}

std::vector<Rational> union_objective(int n) {
    std::vector<Rational> obj(std::size_t{1} << n, Rational(1));
    obj[0] = 0;
    return obj;
}

std::vector<Rational> intersection_objective(int n) {
    std::vector<Rational> obj(std::size_t{1} << n, Rational(0));
    obj.back() = 1;
    return obj;
}

namespace {

BoundsReport bounds_with_witnesses(const std::vector<Rational>& marginals, BoundTarget target) {
    BoundsReport report = target == BoundTarget::Union ? union_bounds(marginals)
                                                       : intersection_bounds(marginals);
    const int n = static_cast<int>(marginals.size());
    std::vector<Subset> singletons;
    for (int i = 1; i <= n; ++i) singletons.push_back({i});
    ProbabilityAssignment constraints(EventScenario(n, std::move(singletons)), marginals);
    const auto objective =
        target == BoundTarget::Union ? union_objective(n) : intersection_objective(n);
    ExtremizeResult extremes = extremize_over_polytope(constraints, objective);
    // marginal-only constraints are always realizable (independent events do
    // it), and the LP endpoints coincide with the formula interval; the
    // report keeps the formula values so the witnesses are checkable against
    // them.
    report.witnesses = std::make_pair(std::move(*extremes.minimizer),
                                      std::move(*extremes.maximizer));
    return report;
}

}  // namespace

BoundsReport union_bounds_with_witnesses(const std::vector<Rational>& marginals) {
    return bounds_with_witnesses(marginals, BoundTarget::Union);
}

BoundsReport intersection_bounds_with_witnesses(const std::vector<Rational>& marginals) {
    return bounds_with_witnesses(marginals, BoundTarget::Intersection);
}

}  // namespace boole
