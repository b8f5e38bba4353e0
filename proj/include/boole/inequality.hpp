#pragma once

#include <string>
#include <vector>

#include "boole/events.hpp"
#include "boole/rational.hpp"

namespace boole {

enum class Sense { LessEq, GreaterEq };

/// Linear constraint over a scenario's subset probabilities,
///
///     sum_S coeff_S * p_S  <=  constant.
///
/// A GreaterEq input is negated on construction, so stored inequalities
/// always read <=. canonical() additionally rescales by the unique positive
/// rational that makes all coefficients and the constant coprime integers,
/// making equality of canonical forms an exact comparison.
class LinearInequality {
  public:
    LinearInequality(EventScenario scenario, std::vector<Rational> coefficients,
                     Rational constant, Sense sense = Sense::LessEq);

    const EventScenario& scenario() const { return scenario_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const Rational& constant() const { return constant_; }
    Sense sense() const { return Sense::LessEq; }

    const Rational& coefficient(const Subset& s) const;

    /// sum_S coeff_S * p_S for a matching assignment.
    Rational lhs_value(const ProbabilityAssignment& assignment) const;
    bool satisfied_by(const ProbabilityAssignment& assignment) const;
    /// max(0, lhs - constant).
    Rational violation(const ProbabilityAssignment& assignment) const;

    /// lhs evaluated on the 0/1 vertex induced by `atom`.
    Rational value_at_atom(AtomMask atom) const;
    bool holds_at_atom(AtomMask atom) const;
    /// True iff the inequality holds on every atom point-mass (n <= 20).
    bool holds_on_all_atoms() const;

    LinearInequality canonical() const;

    bool operator==(const LinearInequality& other) const {
        return scenario_ == other.scenario_ && coefficients_ == other.coefficients_ &&
               constant_ == other.constant_;
    }

    /// Human-readable form, terms in family order: "-p(3) - p(1,2) + p(1,3) + p(2,3) <= 0".
    std::string to_string() const;

  private:
    EventScenario scenario_;
    std::vector<Rational> coefficients_;
    Rational constant_;
};

}  // namespace boole
