#include "boole/game.hpp"

#include "boole/errors.hpp"

namespace boole {

Strategy Strategy::complemented() const {
    Strategy flipped = *this;
    for (Answer& a : flipped.answers) a = a == Answer::R ? Answer::S : Answer::R;
    return flipped;
}

std::string Strategy::name() const {
    std::string s;
    for (Answer a : answers) s += a == Answer::R ? 'R' : 'S';
    return s;
}

std::vector<Strategy> enumerate_joint_strategies() {
    std::vector<Strategy> strategies;
    strategies.reserve(8);
    for (int bits = 0; bits < 8; ++bits) {
        Strategy s;
        // A is the high bit so the table reads RRR, RRS, ..., SSS
        s.answers = {bits & 4 ? Answer::S : Answer::R, bits & 2 ? Answer::S : Answer::R,
                     bits & 1 ? Answer::S : Answer::R};
        strategies.push_back(s);
    }
    return strategies;
}

std::vector<StrategyClass> reduce_strategies() {
    std::vector<StrategyClass> classes;
    classes.reserve(4);
    for (const Strategy& s : enumerate_joint_strategies()) {
        if (s.answer(Question::A) != Answer::R) continue;
        classes.push_back(StrategyClass{s, {s, s.complemented()}});
    }
    return classes;
}

SameResultProfile same_result_profile(const StrategyClass& cls) {
    const Strategy& r = cls.representative;
    SameResultProfile profile;
    profile.ab = r.answer(Question::A) == r.answer(Question::B) ? 1 : 0;
    profile.bc = r.answer(Question::B) == r.answer(Question::C) ? 1 : 0;
    profile.ac = r.answer(Question::A) == r.answer(Question::C) ? 1 : 0;
    return profile;
}

CorrelationTarget bell_effect_target() {
    return CorrelationTarget{1, Rational(3) / 4, Rational(3) / 4, Rational(1) / 4};
}

MixingSolution solve_mixing(const CorrelationTarget& target) {
    if (target.same_when_equal != 1)
        throw UnsupportedTargetError(
            "joint strategies answer equal questions equally; same_when_equal must be 1");
    for (const Rational* p : {&target.same_ab, &target.same_bc, &target.same_ac})
        if (!in_unit_interval(*p))
            throw DomainError("target frequency outside [0,1]: " + to_string(*p));

    const std::vector<StrategyClass> classes = reduce_strategies();

    // Augmented system: normalization plus one row per question pair.
    std::array<std::array<Rational, 5>, 4> m;
    for (int c = 0; c < 4; ++c) m[0][c] = 1;
    m[0][4] = 1;
    for (int c = 0; c < 4; ++c) {
        const SameResultProfile profile = same_result_profile(classes[c]);
        m[1][c] = profile.ab;
        m[2][c] = profile.bc;
        m[3][c] = profile.ac;
    }
    m[1][4] = target.same_ab;
    m[2][4] = target.same_bc;
    m[3][4] = target.same_ac;

    // Exact Gaussian elimination with partial row swaps. The coefficient
    // matrix is fixed with determinant 2, so a pivot always exists.
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        std::swap(m[col], m[pivot]);
        const Rational inv = Rational(1) / m[col][col];
        for (int j = col; j < 5; ++j) m[col][j] *= inv;
        for (int row = 0; row < 4; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational factor = m[row][col];
            for (int j = col; j < 5; ++j) m[row][j] -= factor * m[col][j];
        }
    }

    MixingSolution solution;
    solution.feasible = true;
    for (int c = 0; c < 4; ++c) {
        solution.weights[c] = m[c][4];
        if (solution.weights[c] < 0) {
            solution.feasible = false;
            solution.negative_components.push_back(c);
        }
    }
    return solution;
}

ProbabilityAssignment to_pairwise_assignment(const CorrelationTarget& target) {
    if (target.same_when_equal != 1)
        throw UnsupportedTargetError("pairwise mapping is defined for same_when_equal = 1");
    const Rational half(1, 2);
    // family order: {1},{2},{3},{1,2},{1,3},{2,3} = A, B, C, AB, AC, BC
    std::vector<Rational> values{half,
                                 half,
                                 half,
                                 target.same_ab / 2,
                                 target.same_ac / 2,
                                 target.same_bc / 2};
    return ProbabilityAssignment(EventScenario::pairs_family(3), std::move(values));
}

}  // namespace boole
