#include "boole/montecarlo.hpp"

#include <cmath>

#include "boole/errors.hpp"

namespace boole {

namespace {

void check_setting(const Setting& s) {
    if (s.i < 1 || s.i > 2 || s.j < 1 || s.j > 2)
        throw DomainError("setting indices must be 1 or 2");
}

int subtask_index(const Setting& s) { return (s.i - 1) * 2 + (s.j - 1); }

// Runs `trials` draws in fixed-size blocks, handing each block its own
// generator per the stream contract.
template <typename PerBlock>
void for_blocks(std::uint64_t trials, const RngSpec& rng, int subtask, PerBlock&& body) {
    std::uint64_t done = 0;
    std::uint64_t block = 0;
    while (done < trials) {
        const std::uint64_t count = std::min(kBlockTrials, trials - done);
        Pcg32 gen(rng.seed,
                  rng.stream + static_cast<std::uint64_t>(subtask) * kSubtaskStreamStride + block);
        body(gen, count);
        done += count;
        ++block;
    }
}

double binomial_error(double p, double trials) { return std::sqrt(p * (1 - p) / trials); }

}  // namespace

void OutcomeCounts::merge(const OutcomeCounts& other) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            settings[i][j].trials += other.settings[i][j].trials;
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                    settings[i][j].table[x][y] += other.settings[i][j].table[x][y];
        }
}

OutcomeCounts sample_singlet(const AngleConfig& config, const Setting& setting,
                             std::uint64_t trials, const RngSpec& rng) {
    check_setting(setting);
    if (trials < 1) throw DomainError("at least one trial required");
    const double alpha = setting.i == 1 ? config.alpha1 : config.alpha2;
    const double beta = setting.j == 1 ? config.beta1 : config.beta2;

    // cumulative thresholds over (+,+), (+,-), (-,+), (-,-)
    const double pp = singlet_joint(alpha, beta, Spin::Plus, Spin::Plus);
    const double pm = singlet_joint(alpha, beta, Spin::Plus, Spin::Minus);
    const double mp = singlet_joint(alpha, beta, Spin::Minus, Spin::Plus);
    const double c1 = pp, c2 = pp + pm, c3 = pp + pm + mp;

    OutcomeCounts counts;
    SettingCounts& cell = counts.at(setting);
    cell.trials = trials;
    for_blocks(trials, rng, subtask_index(setting), [&](Pcg32& gen, std::uint64_t block_trials) {
        for (std::uint64_t t = 0; t < block_trials; ++t) {
            const double u = gen.next_double();
            if (u < c1)
                ++cell.table[0][0];
            else if (u < c2)
                ++cell.table[0][1];
            else if (u < c3)
                ++cell.table[1][0];
            else
                ++cell.table[1][1];
        }
    });
    return counts;
}

ChEstimate ch_from_counts(const OutcomeCounts& counts) {
    const auto freq = [](std::uint64_t k, std::uint64_t n) {
        return static_cast<double>(k) / static_cast<double>(n);
    };
    const SettingCounts& s11 = counts.settings[0][0];
    const SettingCounts& s12 = counts.settings[0][1];
    const SettingCounts& s21 = counts.settings[1][0];
    const SettingCounts& s22 = counts.settings[1][1];

    const double j11 = freq(s11.plus_plus(), s11.trials);
    const double j12 = freq(s12.plus_plus(), s12.trials);
    const double j22 = freq(s22.plus_plus(), s22.trials);
    const double j21 = freq(s21.plus_plus(), s21.trials);
    const double m1 = freq(s11.row_plus(), s11.trials);
    const double m2 = freq(s22.col_plus(), s22.trials);

    ChEstimate result;
    result.estimate = j11 + j12 + j22 - j21 - m1 - m2;
    double variance = 0;
    for (const auto& [p, n] :
         {std::pair{j11, s11.trials}, {j12, s12.trials}, {j22, s22.trials}, {j21, s21.trials},
          {m1, s11.trials}, {m2, s22.trials}}) {
        const double err = binomial_error(p, static_cast<double>(n));
        variance += err * err;
    }
    result.standard_error = std::sqrt(variance);
    return result;
}

ChEstimate empirical_ch(const AngleConfig& config, std::uint64_t trials_per_setting,
                        const RngSpec& rng) {
    if (trials_per_setting < 100)
        throw DomainError("empirical CH needs at least 100 trials per setting");
    OutcomeCounts counts;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            counts.merge(sample_singlet(config, Setting{i, j}, trials_per_setting, rng));
    return ch_from_counts(counts);
}

OutcomeCounts sample_lhv(const std::array<double, 16>& mixing, std::uint64_t trials_per_setting,
                         const RngSpec& rng) {
    if (trials_per_setting < 1) throw DomainError("at least one trial required");
    double total = 0;
    for (double w : mixing) {
        if (w < 0) throw DomainError("mixing weight negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw DomainError("mixing weights must sum to 1");

    std::array<double, 16> cumulative{};
    double running = 0;
    for (int k = 0; k < 16; ++k) {
        running += mixing[static_cast<std::size_t>(k)];
        cumulative[static_cast<std::size_t>(k)] = running;
    }
    cumulative[15] = 1.0;  // guard against accumulated rounding

    OutcomeCounts counts;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const Setting setting{i, j};
            SettingCounts& cell = counts.at(setting);
            cell.trials = trials_per_setting;
            for_blocks(trials_per_setting, rng, subtask_index(setting),
                       [&](Pcg32& gen, std::uint64_t block_trials) {
                           for (std::uint64_t t = 0; t < block_trials; ++t) {
                               const double u = gen.next_double();
                               int assignment = 15;
                               for (int k = 0; k < 16; ++k)
                                   if (u < cumulative[static_cast<std::size_t>(k)]) {
                                       assignment = k;
                                       break;
                                   }
                               // bits: a1, a2, b1, b2; set = '+'
                               const int a_bit = setting.i == 1 ? 0 : 1;
                               const int b_bit = setting.j == 1 ? 2 : 3;
                               const int x = assignment & (1 << a_bit) ? 0 : 1;
                               const int y = assignment & (1 << b_bit) ? 0 : 1;
                               ++cell.table[static_cast<std::size_t>(x)]
                                            [static_cast<std::size_t>(y)];
                           }
                       });
        }
    return counts;
}

std::array<double, 4> empirical_bell_effect(std::uint64_t trials_per_pair, const RngSpec& rng) {
    if (trials_per_pair < 1) throw DomainError("at least one trial required");
    const double a = kBellEffectAngleA;
    const double b = bell_effect_angle_b();
    const double c = bell_effect_angle_c();
    const std::array<std::pair<double, double>, 4> pairs{
        std::pair{a, a}, {a, b}, {b, c}, {a, c}};

    std::array<double, 4> frequencies{};
    for (int k = 0; k < 4; ++k) {
        const double p_same = bell_effect_same_prob(pairs[static_cast<std::size_t>(k)].first,
                                                    pairs[static_cast<std::size_t>(k)].second);
        std::uint64_t same = 0;
        for_blocks(trials_per_pair, rng, k, [&](Pcg32& gen, std::uint64_t block_trials) {
            for (std::uint64_t t = 0; t < block_trials; ++t)
                if (gen.next_double() < p_same) ++same;
        });
        frequencies[static_cast<std::size_t>(k)] =
            static_cast<double>(same) / static_cast<double>(trials_per_pair);
    }
    return frequencies;
}

}  // namespace boole
