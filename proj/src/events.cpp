#include "boole/events.hpp"

#include <algorithm>
#include <sstream>

#include "boole/errors.hpp"

namespace boole {

namespace {

std::string subset_str(const Subset& s) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "}";
    return out.str();
}

}  // namespace

bool subset_less(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

AtomMask subset_mask(const Subset& s) {
    AtomMask mask = 0;
    for (int i : s) mask |= AtomMask{1} << (i - 1);
    return mask;
}

EventScenario::EventScenario(int n, std::vector<Subset> family) : n_(n), family_(std::move(family)) {
    if (n_ < 1 || n_ > 63) throw SizeError("event count must be in 1..63, got " + std::to_string(n_));
    for (const Subset& s : family_) {
        if (s.empty()) throw DomainError("family subsets must be nonempty");
        int prev = 0;
        for (int i : s) {
            if (i <= prev)
                throw DomainError("subset indices must be strictly increasing: " + subset_str(s));
            if (i > n_)
                throw DomainError("subset index " + std::to_string(i) + " exceeds event count " +
                                  std::to_string(n_));
            prev = i;
        }
    }
    std::sort(family_.begin(), family_.end(), subset_less);
    if (std::adjacent_find(family_.begin(), family_.end()) != family_.end())
        throw DomainError("family subsets must be distinct");
    masks_.reserve(family_.size());
    for (std::size_t i = 0; i < family_.size(); ++i) {
        masks_.push_back(subset_mask(family_[i]));
        index_.emplace(family_[i], i);
    }
}

std::optional<std::size_t> EventScenario::index_of(const Subset& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EventScenario EventScenario::full_family(int n) {
    if (n < 1 || n > 20) throw SizeError("full family supported for 1..20 events");
    std::vector<Subset> family;
    family.reserve((std::size_t{1} << n) - 1);
    for (AtomMask mask = 1; mask < (AtomMask{1} << n); ++mask) {
        Subset s;
        for (int i = 1; i <= n; ++i)
            if (mask & (AtomMask{1} << (i - 1))) s.push_back(i);
        family.push_back(std::move(s));
    }
    return EventScenario(n, std::move(family));
}

EventScenario EventScenario::pairs_family(int n) {
    std::vector<Subset> family;
    for (int i = 1; i <= n; ++i) family.push_back({i});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) family.push_back({i, j});
    return EventScenario(n, std::move(family));
}

ProbabilityAssignment::ProbabilityAssignment(EventScenario scenario, std::vector<Rational> values)
    : scenario_(std::move(scenario)), values_(std::move(values)) {
    if (values_.size() != scenario_.size())
        throw ScenarioError("assignment has " + std::to_string(values_.size()) +
                            " values for a family of " + std::to_string(scenario_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!in_unit_interval(values_[i]))
            throw DomainError("probability of " + subset_str(scenario_.family()[i]) +
                              " outside [0,1]: " + to_string(values_[i]));
}

const Rational& ProbabilityAssignment::value(const Subset& s) const {
    auto idx = scenario_.index_of(s);
    if (!idx) throw MissingDataError("subset " + subset_str(s) + " not in family", {s});
    return values_[*idx];
}

AtomDistribution::AtomDistribution(int n, std::vector<Rational> weights)
    : n_(n), weights_(std::move(weights)) {
    if (n_ < 1 || n_ > 20) throw SizeError("atom distributions supported for 1..20 events");
    if (weights_.size() != (std::size_t{1} << n_))
        throw SizeError("expected 2^n weights, got " + std::to_string(weights_.size()));
    Rational total = 0;
    for (const Rational& w : weights_) {
        if (w < 0) throw DomainError("atom weight negative: " + to_string(w));
        total += w;
    }
    if (total != 1) throw DomainError("atom weights sum to " + to_string(total) + ", expected 1");
}

AtomDistribution AtomDistribution::point_mass(int n, AtomMask atom) {
    std::vector<Rational> weights(std::size_t{1} << n, Rational(0));
    weights.at(atom) = 1;
    return AtomDistribution(n, std::move(weights));
}

AtomDistribution AtomDistribution::uniform(int n) {
    const std::size_t count = std::size_t{1} << n;
    std::vector<Rational> weights(count, Rational(1) / Rational(BigInt(count)));
    return AtomDistribution(n, std::move(weights));
}

Interval::Interval(Rational lo, Rational hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower > upper)
        throw DomainError("interval lower bound " + to_string(lower) + " exceeds upper bound " +
                          to_string(upper));
}

std::vector<AtomMask> enumerate_atoms(int n) {
    if (n < 1 || n > 20) throw SizeError("atom enumeration supported for 1..20 events");
    std::vector<AtomMask> atoms(std::size_t{1} << n);
    for (std::size_t a = 0; a < atoms.size(); ++a) atoms[a] = a;
    return atoms;
}

ProbabilityAssignment assignment_from_distribution(const AtomDistribution& dist,
                                                   const EventScenario& scenario) {
    if (dist.n() != scenario.n())
        throw ScenarioError("distribution over " + std::to_string(dist.n()) +
                            " events, scenario over " + std::to_string(scenario.n()));
    std::vector<Rational> values(scenario.size(), Rational(0));
    const auto& masks = scenario.family_masks();
    for (AtomMask atom = 0; atom < dist.weights().size(); ++atom) {
        const Rational& w = dist.weight(atom);
        if (w == 0) continue;
        for (std::size_t s = 0; s < masks.size(); ++s)
            if ((atom & masks[s]) == masks[s]) values[s] += w;
    }
    return ProbabilityAssignment(scenario, std::move(values));
}

Rational inclusion_exclusion_union(const ProbabilityAssignment& assignment) {
    const EventScenario& scenario = assignment.scenario();
    const std::size_t expected = (std::size_t{1} << scenario.n()) - 1;
    if (scenario.size() != expected) {
        std::vector<Subset> missing;
        const EventScenario full = EventScenario::full_family(scenario.n());
        for (const Subset& s : full.family())
            if (!scenario.index_of(s)) missing.push_back(s);
        std::ostringstream msg;
        msg << "inclusion-exclusion needs all " << expected << " nonempty subsets; missing";
        for (const Subset& s : missing) msg << " " << subset_str(s);
        throw MissingDataError(msg.str(), std::move(missing));
    }
    Rational total = 0;
    for (std::size_t i = 0; i < scenario.size(); ++i) {
        if (scenario.family()[i].size() % 2 == 1)
            total += assignment.values()[i];
        else
            total -= assignment.values()[i];
    }
    return total;
}

}  // namespace boole
