#pragma once

#include <array>
#include <string>
#include <vector>

#include "boole/events.hpp"
#include "boole/rational.hpp"

namespace boole {

/// The two-participant question game: three questions, two answers, and the
/// mixing weights classical joint strategies would need to hit a same-answer
/// correlation target.

enum class Question { A, B, C };
enum class Answer { R, S };

/// Total answer mapping {A,B,C} -> {R,S}. Exactly eight exist.
struct Strategy {
    std::array<Answer, 3> answers;

    Answer answer(Question q) const { return answers[static_cast<std::size_t>(q)]; }
    Strategy complemented() const;
    std::string name() const;  // e.g. "RRS"
    bool operator==(const Strategy&) const = default;
};

/// All 8 joint strategies in table order: RRR, RRS, RSR, RSS, SRR, SRS, SSR, SSS.
std::vector<Strategy> enumerate_joint_strategies();

/// A strategy and its answer-complement give identical same/different
/// statistics, so the 8 strategies partition into 4 classes; representatives
/// answer R on question A.
struct StrategyClass {
    Strategy representative;
    std::array<Strategy, 2> members;
};

/// The four classes with representatives RRR, RRS, RSR, RSS.
std::vector<StrategyClass> reduce_strategies();

/// 1 where the representative answers the two questions identically.
struct SameResultProfile {
    int ab = 0;
    int bc = 0;
    int ac = 0;
    bool operator==(const SameResultProfile&) const = default;
};

SameResultProfile same_result_profile(const StrategyClass& cls);

/// Target same-answer frequencies. same_when_equal is the equal-question
/// frequency and must be 1: joint strategies satisfy it structurally, and
/// the class reduction presupposes it.
struct CorrelationTarget {
    Rational same_when_equal;
    Rational same_ab;
    Rational same_bc;
    Rational same_ac;
};

/// The entangled-behaviour target (1, 3/4, 3/4, 1/4).
CorrelationTarget bell_effect_target();

/// Mixing weights (alpha, beta, gamma, delta) over the four classes solving
/// the target's linear system exactly. feasible iff all weights are
/// nonnegative (they always sum to 1); negative_components indexes the
/// offending weights.
struct MixingSolution {
    std::array<Rational, 4> weights;
    bool feasible = false;
    std::vector<int> negative_components;
};

/// Solves {sum w = 1} plus the three same-answer constraints. The system
/// matrix is constant and nonsingular (determinant 2), so the solution is
/// unique for every target. Throws UnsupportedTargetError unless
/// same_when_equal == 1.
MixingSolution solve_mixing(const CorrelationTarget& target);

/// Bridges the game to the three-event pairwise scenario: under an
/// answer-symmetric model every single is 1/2 and P(same answers on X,Y) =
/// 2 p_XY, so the pair probabilities are half the target frequencies.
/// Events: 1 = A, 2 = B, 3 = C.
ProbabilityAssignment to_pairwise_assignment(const CorrelationTarget& target);

}  // namespace boole
