#include "boole/inequality.hpp"

#include <sstream>

#include "boole/errors.hpp"

namespace boole {

LinearInequality::LinearInequality(EventScenario scenario, std::vector<Rational> coefficients,
                                   Rational constant, Sense sense)
    : scenario_(std::move(scenario)),
      coefficients_(std::move(coefficients)),
      constant_(std::move(constant)) {
    if (coefficients_.size() != scenario_.size())
        throw ScenarioError("inequality has " + std::to_string(coefficients_.size()) +
                            " coefficients for a family of " + std::to_string(scenario_.size()));
    if (sense == Sense::GreaterEq) {
        for (Rational& c : coefficients_) c = -c;
        constant_ = -constant_;
    }
}

const Rational& LinearInequality::coefficient(const Subset& s) const {
    auto idx = scenario_.index_of(s);
    if (!idx) throw MissingDataError("subset not in inequality family", {s});
    return coefficients_[*idx];
}

Rational LinearInequality::lhs_value(const ProbabilityAssignment& assignment) const {
    if (!(assignment.scenario() == scenario_))
        throw ScenarioError("assignment scenario differs from inequality scenario");
    Rational total = 0;
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        total += coefficients_[i] * assignment.values()[i];
    return total;
}

bool LinearInequality::satisfied_by(const ProbabilityAssignment& assignment) const {
    return lhs_value(assignment) <= constant_;
}

Rational LinearInequality::violation(const ProbabilityAssignment& assignment) const {
    Rational excess = lhs_value(assignment) - constant_;
    return excess > 0 ? excess : Rational(0);
}

Rational LinearInequality::value_at_atom(AtomMask atom) const {
    Rational total = 0;
    const auto& masks = scenario_.family_masks();
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        if ((atom & masks[i]) == masks[i]) total += coefficients_[i];
    return total;
}

bool LinearInequality::holds_at_atom(AtomMask atom) const {
    return value_at_atom(atom) <= constant_;
}

bool LinearInequality::holds_on_all_atoms() const {
    for (AtomMask atom : enumerate_atoms(scenario_.n()))
        if (!holds_at_atom(atom)) return false;
    return true;
}

LinearInequality LinearInequality::canonical() const {
    // Positive scaling only: the half-space must not change. Scale so every
    // coefficient and the constant become coprime integers.
    BigInt den_lcm = 1;
    for (const Rational& c : coefficients_)
        if (c != 0) den_lcm = lcm(den_lcm, denominator(c));
    if (constant_ != 0) den_lcm = lcm(den_lcm, denominator(constant_));

    BigInt num_gcd = 0;
    auto fold = [&](const Rational& c) {
        if (c == 0) return;
        num_gcd = gcd(num_gcd, BigInt(numerator(c) * (den_lcm / denominator(c))));
    };
    for (const Rational& c : coefficients_) fold(c);
    fold(constant_);
    if (num_gcd == 0) return *this;  // 0 <= 0, keep as is

    const Rational scale = Rational(den_lcm) / Rational(abs(num_gcd));
    std::vector<Rational> coeffs = coefficients_;
    for (Rational& c : coeffs) c *= scale;
    return LinearInequality(scenario_, std::move(coeffs), constant_ * scale);
}

std::string LinearInequality::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const Rational& c = coefficients_[i];
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << boole::to_string(mag) << " ";
        out << "p(";
        const Subset& s = scenario_.family()[i];
        for (std::size_t k = 0; k < s.size(); ++k) out << (k ? "," : "") << s[k];
        out << ")";
    }
    if (first) out << "0";
    out << " <= " << boole::to_string(constant_);
    return out.str();
}

}  // namespace boole
