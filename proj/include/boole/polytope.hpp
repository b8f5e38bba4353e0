#pragma once

#include <optional>
#include <vector>

#include "boole/bounds.hpp"
#include "boole/events.hpp"
#include "boole/inequality.hpp"

namespace boole {

/// Extreme point of the correlation polytope: the 0/1 vector a single atom
/// induces on the scenario family (entry 1 iff the atom contains every index
/// of the subset).
struct Vertex {
    AtomMask atom = 0;
    std::vector<Rational> coordinates;
};

/// One vertex per atom, atoms ascending. Throws SizeError beyond n = 20.
std::vector<Vertex> enumerate_vertices(const EventScenario& scenario);

enum class Membership { Inside, Outside };

/// Constructive answer to the consistency question: either a realizing atom
/// distribution (inside) or a separating Boole-type inequality with its
/// exact violation (outside).
struct MembershipVerdict {
    Membership status = Membership::Inside;
    std::optional<AtomDistribution> witness;
    std::optional<LinearInequality> certificate;
    Rational violation;

    bool inside() const { return status == Membership::Inside; }
};

/// Decides in exact arithmetic whether nonnegative atom weights summing to 1
/// reproduce the assignment. Outside verdicts carry a canonicalized Farkas
/// certificate that holds on every vertex and fails on the assignment by
/// exactly `violation`.
MembershipVerdict check_membership(const ProbabilityAssignment& assignment);

/// True iff the certificate holds on all 2^n vertices and fails on the
/// assignment. Throws ScenarioError on a scenario mismatch.
bool verify_certificate(const ProbabilityAssignment& assignment,
                        const LinearInequality& certificate);

/// The n = 3 Bell-type inequality p13 + p23 - p12 <= p3, derived by
/// complementing event 3 in the pairwise union bound, canonicalized.
LinearInequality derive_bell_wigner();

/// Exact extremization of a linear function of the atom weights over all
/// distributions consistent with the constraint assignment. Infeasible
/// constraint sets yield a certificate instead of an exception.
struct ExtremizeResult {
    std::optional<Interval> interval;
    std::optional<AtomDistribution> minimizer;
    std::optional<AtomDistribution> maximizer;
    std::optional<LinearInequality> certificate;
    Rational violation;

    bool feasible() const { return interval.has_value(); }
};

ExtremizeResult extremize_over_polytope(const ProbabilityAssignment& constraints,
                                        const std::vector<Rational>& atom_objective);

/// Objective vectors for the two classic targets: P(union) sums every atom
/// except the empty one, P(intersection) only the all-events atom.
std::vector<Rational> union_objective(int n);
std::vector<Rational> intersection_objective(int n);

/// Formula bounds with LP-produced attaining distributions filled in.
BoundsReport union_bounds_with_witnesses(const std::vector<Rational>& marginals);
BoundsReport intersection_bounds_with_witnesses(const std::vector<Rational>& marginals);

}  // namespace boole
