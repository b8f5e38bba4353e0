#include "boole/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "boole/errors.hpp"

namespace boole {

namespace {

void check_marginals(const std::vector<Rational>& marginals) {
    if (marginals.empty()) throw SizeError("at least one marginal required");
    for (const Rational& p : marginals)
        if (!in_unit_interval(p))
            throw DomainError("marginal outside [0,1]: " + to_string(p));
}

}  // namespace

BoundsReport union_bounds(const std::vector<Rational>& marginals) {
    check_marginals(marginals);
    Rational lo = marginals.front();
    Rational sum = 0;
    for (const Rational& p : marginals) {
        lo = std::max(lo, p);
        sum += p;
    }
    return BoundsReport{BoundTarget::Union, Interval(lo, std::min(Rational(1), sum)),
                        std::nullopt};
}

BoundsReport intersection_bounds(const std::vector<Rational>& marginals) {
    check_marginals(marginals);
    Rational hi = marginals.front();
    Rational sum = 0;
    for (const Rational& p : marginals) {
        hi = std::min(hi, p);
        sum += p;
    }
    const Rational shifted = sum - int(marginals.size()) + 1;
    const Rational lo = std::max(Rational(0), shifted);
    return BoundsReport{BoundTarget::Intersection, Interval(lo, hi), std::nullopt};
}

LinearInequality bonferroni_inequality(int n) {
    if (n < 2) throw SizeError("pairwise bound needs at least 2 events");
    EventScenario scenario = EventScenario::pairs_family(n);
    std::vector<Rational> coeffs(scenario.size());
    for (std::size_t i = 0; i < scenario.size(); ++i)
        coeffs[i] = scenario.family()[i].size() == 1 ? 1 : -1;
    return LinearInequality(std::move(scenario), std::move(coeffs), Rational(1));
}

std::pair<Rational, LinearInequality> bonferroni_lower(const ProbabilityAssignment& assignment) {
    const int n = assignment.scenario().n();
    const EventScenario pairs = EventScenario::pairs_family(n);
    std::vector<Subset> missing;
    for (const Subset& s : pairs.family())
        if (!assignment.scenario().index_of(s)) missing.push_back(s);
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "pairwise bound needs every singleton and pair; missing";
        for (const Subset& s : missing) {
            msg << " {";
            for (std::size_t i = 0; i < s.size(); ++i) msg << (i ? "," : "") << s[i];
            msg << "}";
        }
        throw MissingDataError(msg.str(), std::move(missing));
    }
    Rational value = 0;
    for (const Subset& s : pairs.family()) {
        if (s.size() == 1)
            value += assignment.value(s);
        else
            value -= assignment.value(s);
    }
    return {value, bonferroni_inequality(n)};
}

LinearInequality complement_transform(const LinearInequality& ineq, const Subset& s) {
    if (s.empty()) throw DomainError("complement subset must be nonempty");
    const EventScenario& scenario = ineq.scenario();
    for (int i : s)
        if (i < 1 || i > scenario.n())
            throw DomainError("complement index " + std::to_string(i) + " outside 1.." +
                              std::to_string(scenario.n()));
    const AtomMask smask = subset_mask(s);

    std::vector<Rational> coeffs(scenario.size(), Rational(0));
    Rational lhs_const = 0;  // constants accumulated on the left move to the right at the end

    auto add_to = [&](const Subset& target, const Rational& c) {
        auto idx = scenario.index_of(target);
        if (!idx) throw ScenarioError("substitution image not in the inequality family");
        coeffs[*idx] += c;
    };

    for (std::size_t i = 0; i < scenario.size(); ++i) {
        const Rational& c = ineq.coefficients()[i];
        if (c == 0) continue;
        const Subset& subset = scenario.family()[i];
        if (subset.size() == 1) {
            if (subset_mask(subset) & smask) {
                // p_i -> 1 - p_i
                lhs_const += c;
                coeffs[i] -= c;
            } else {
                coeffs[i] += c;
            }
        } else if (subset.size() == 2) {
            const int a = subset[0], b = subset[1];
            const bool a_in = smask & (AtomMask{1} << (a - 1));
            const bool b_in = smask & (AtomMask{1} << (b - 1));
            if (a_in && b_in) {
                // p_ij -> 1 - p_i - p_j + p_ij
                lhs_const += c;
                add_to({a}, -c);
                add_to({b}, -c);
                coeffs[i] += c;
            } else if (a_in || b_in) {
                // p_ij -> p_surviving - p_ij
                add_to({a_in ? b : a}, c);
                coeffs[i] -= c;
            } else {
                coeffs[i] += c;
            }
        } else {
            throw UnsupportedOrderError("complement transform supports only singles and pairs");
        }
    }
    return LinearInequality(scenario, std::move(coeffs), ineq.constant() - lhs_const);
}

std::vector<LinearInequality> generate_bonferroni_family(int n) {
    if (n < 2 || n > 10) throw SizeError("family generation supported for 2..10 events");
    const LinearInequality base = bonferroni_inequality(n);
    const EventScenario all_subsets = EventScenario::full_family(n);
    std::vector<Subset> subsets;
    subsets.push_back({});  // the bound itself
    for (const Subset& s : all_subsets.family()) subsets.push_back(s);
    std::vector<LinearInequality> family;
    family.reserve(subsets.size());
    for (const Subset& s : subsets) {
        if (s.empty())
            family.push_back(base.canonical());
        else
            family.push_back(complement_transform(base, s).canonical());
    }
    return family;
}

}  // namespace boole
