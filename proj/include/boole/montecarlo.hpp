#pragma once

#include <array>
#include <cstdint>

#include "boole/quantum.hpp"
#include "boole/rng.hpp"

namespace boole {

/// 2x2 outcome table for one measurement setting; index 0 is spin '+'.
struct SettingCounts {
    std::uint64_t trials = 0;
    std::array<std::array<std::uint64_t, 2>, 2> table{};  // [x][y]

    std::uint64_t plus_plus() const { return table[0][0]; }
    std::uint64_t row_plus() const { return table[0][0] + table[0][1]; }   // x = +
    std::uint64_t col_plus() const { return table[0][0] + table[1][0]; }   // y = +
};

/// One (alpha_i, beta_j) measurement setting, i and j in {1, 2}.
struct Setting {
    int i = 1;
    int j = 1;
};

/// Count tables for the four settings, indexed [i-1][j-1]. Merging adds
/// tables entrywise; the merge of independently sampled blocks is
/// order-independent, which is what makes block-parallel sampling exact.
struct OutcomeCounts {
    std::array<std::array<SettingCounts, 2>, 2> settings{};

    const SettingCounts& at(const Setting& s) const { return settings[s.i - 1][s.j - 1]; }
    SettingCounts& at(const Setting& s) { return settings[s.i - 1][s.j - 1]; }
    void merge(const OutcomeCounts& other);
};

/// Trials are split into fixed blocks of this many draws; block b of sub-task
/// k runs on stream  spec.stream + k * 2^20 + b. Serial and parallel
/// execution therefore produce identical counts.
inline constexpr std::uint64_t kBlockTrials = 1u << 16;
inline constexpr std::uint64_t kSubtaskStreamStride = 1u << 20;

/// i.i.d. draws from the singlet's 4-outcome distribution at one setting.
/// Sub-task index (i-1)*2 + (j-1), so sampling the four settings separately
/// with the same spec reproduces empirical_ch's counts exactly.
OutcomeCounts sample_singlet(const AngleConfig& config, const Setting& setting,
                             std::uint64_t trials, const RngSpec& rng);

struct ChEstimate {
    double estimate = 0;
    double standard_error = 0;
};

/// CH expression on empirical frequencies. Joints are (+,+) frequencies per
/// setting; m1 is the x=+ frequency of setting (1,1) and m2 the y=+ frequency
/// of setting (2,2). standard_error is the root-sum-square of the six
/// per-term binomial errors sqrt(p(1-p)/trials).
ChEstimate ch_from_counts(const OutcomeCounts& counts);

/// Samples all four settings (trials each) and evaluates ch_from_counts.
/// Requires trials >= 100.
ChEstimate empirical_ch(const AngleConfig& config, std::uint64_t trials_per_setting,
                        const RngSpec& rng);

/// Local deterministic model: each trial draws one of the 16 outcome
/// assignments (bit 0..3 => a1, a2, b1, b2; set bit = '+') from `mixing`,
/// then reads off the requested setting. Weights must be nonnegative and sum
/// to 1 (tolerance 1e-9). Settings use the same sub-task streams as
/// sample_singlet.
OutcomeCounts sample_lhv(const std::array<double, 16>& mixing, std::uint64_t trials_per_setting,
                         const RngSpec& rng);

/// Empirical same-answer frequencies of the entangled question-game model at
/// angles (A, B, C) = (0, pi/3, 2pi/3), for the pairs (A,A), (A,B), (B,C),
/// (A,C) in that order. Pair index is the sub-task index.
std::array<double, 4> empirical_bell_effect(std::uint64_t trials_per_pair, const RngSpec& rng);

}  // namespace boole
