#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "boole/events.hpp"
#include "boole/inequality.hpp"

namespace boole {

enum class BoundTarget { Union, Intersection };

/// Best-possible two-sided estimate from marginals alone. Witness
/// distributions (lower-attaining, upper-attaining) are filled only by the
/// polytope module's LP path; the plain formula path leaves them empty.
struct BoundsReport {
    BoundTarget target;
    Interval interval;
    std::optional<std::pair<AtomDistribution, AtomDistribution>> witnesses;
};

/// max{p_i} <= P(A_1 u ... u A_n) <= min{1, sum p_i}.
BoundsReport union_bounds(const std::vector<Rational>& marginals);

/// max{0, sum p_i - n + 1} <= P(A_1 n ... n A_n) <= min{p_i}.
BoundsReport intersection_bounds(const std::vector<Rational>& marginals);

/// The checkable form of the pairwise union lower bound over the singles+pairs
/// family of n events:  sum p_i - sum p_ij <= 1  (the union probability it
/// bounds is itself at most 1).
LinearInequality bonferroni_inequality(int n);

/// Evaluates sum p_i - sum p_ij on an assignment over the complete
/// singles+pairs family and pairs it with the checkable inequality. Throws
/// MissingDataError listing absent singletons/pairs.
std::pair<Rational, LinearInequality> bonferroni_lower(const ProbabilityAssignment& assignment);

/// Replaces the events indexed by S with their complements inside an
/// inequality over singles and pairs, re-expressed over the original family:
/// p_i -> 1 - p_i (i in S), p_ij -> p_j - p_ij (i in S only),
/// p_ij -> 1 - p_i - p_j + p_ij (both in S). The result holds on every atom
/// distribution iff the input does; applying the same S twice is the
/// identity.
LinearInequality complement_transform(const LinearInequality& ineq, const Subset& s);

/// The pairwise bound plus its complement variants, one per subset of 1..n in
/// canonical subset order (so result[0] is the bound itself), each
/// canonicalized. 2 <= n <= 10.
///
/// Note: exactly at n = 3 complementary subsets produce identical checkable
/// forms, so the 2^n entries contain only 2^(n-1) distinct inequalities
/// there; every other n in range yields 2^n distinct forms.
std::vector<LinearInequality> generate_bonferroni_family(int n);

}  // namespace boole
