#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "boole/rational.hpp"

namespace boole {

/// Index subset of events, 1-based, strictly increasing.
using Subset = std::vector<int>;

/// Boolean atom over n events: bit i-1 set <=> event A_i occurs.
using AtomMask = std::uint64_t;

/// Orders subsets by size, then lexicographically by indices.
bool subset_less(const Subset& a, const Subset& b);

AtomMask subset_mask(const Subset& s);

/// n events together with the family of index subsets whose intersection
/// probabilities are under discussion. The family is kept canonical: subsets
/// distinct, indices strictly increasing, ordered by size then
/// lexicographically.
class EventScenario {
  public:
    EventScenario(int n, std::vector<Subset> family);

    int n() const { return n_; }
    const std::vector<Subset>& family() const { return family_; }
    const std::vector<AtomMask>& family_masks() const { return masks_; }
    std::size_t size() const { return family_.size(); }

    std::optional<std::size_t> index_of(const Subset& s) const;

    bool operator==(const EventScenario& other) const {
        return n_ == other.n_ && family_ == other.family_;
    }

    /// All 2^n - 1 nonempty subsets of 1..n.
    static EventScenario full_family(int n);
    /// All singletons and all pairs of 1..n.
    static EventScenario pairs_family(int n);

  private:
    int n_ = 0;
    std::vector<Subset> family_;
    std::vector<AtomMask> masks_;
    std::map<Subset, std::size_t> index_;
};

/// One exact probability per family subset, aligned index-for-index with
/// scenario.family(). Values are validated into [0,1].
class ProbabilityAssignment {
  public:
    ProbabilityAssignment(EventScenario scenario, std::vector<Rational> values);

    const EventScenario& scenario() const { return scenario_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& value(const Subset& s) const;

    bool operator==(const ProbabilityAssignment& other) const {
        return scenario_ == other.scenario_ && values_ == other.values_;
    }

  private:
    EventScenario scenario_;
    std::vector<Rational> values_;
};

/// Probability weights over the 2^n Boolean atoms of n events; nonnegative
/// and summing to exactly 1. The brute-force substrate everything else is
/// tested against.
class AtomDistribution {
  public:
    AtomDistribution(int n, std::vector<Rational> weights);

    int n() const { return n_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(AtomMask atom) const { return weights_[atom]; }

    /// Point mass on a single atom.
    static AtomDistribution point_mass(int n, AtomMask atom);
    /// Every atom weighted 1/2^n.
    static AtomDistribution uniform(int n);

  private:
    int n_ = 0;
    std::vector<Rational> weights_;
};

struct Interval {
    Rational lower;
    Rational upper;

    Interval(Rational lo, Rational hi);
    bool contains(const Rational& r) const { return lower <= r && r <= upper; }
    bool operator==(const Interval& other) const = default;
};

/// The 2^n atom bitmasks 0..2^n-1, ascending. Throws SizeError outside
/// 1 <= n <= 20.
std::vector<AtomMask> enumerate_atoms(int n);

/// Marginalizes atom weights onto the scenario's family: the value of subset
/// S is the total weight of atoms containing every index of S.
ProbabilityAssignment assignment_from_distribution(const AtomDistribution& dist,
                                                   const EventScenario& scenario);

/// Poincare inclusion-exclusion: sum p_i - sum p_ij + sum p_ijk - ... over a
/// full-family assignment. Throws MissingDataError (listing the absent
/// subsets) when the family is incomplete.
Rational inclusion_exclusion_union(const ProbabilityAssignment& assignment);

}  // namespace boole
