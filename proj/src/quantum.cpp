#include "boole/quantum.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "boole/errors.hpp"

namespace boole {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void check_angle(double angle) {
    if (!(angle >= 0.0 && angle <= kTwoPi))
        throw DomainError("angle outside [0, 2pi]: " + std::to_string(angle));
}

template <typename T>
void finish(ChTerms<T>& terms) {
    terms.total = terms.j11 + terms.j12 + terms.j22 - terms.j21 - terms.m1 - terms.m2;
    const T lower = T(-1) - terms.total;
    terms.lower_violation = lower > T(0) ? lower : T(0);
    terms.upper_violation = terms.total > T(0) ? terms.total : T(0);
}

}  // namespace

double singlet_joint(double alpha, double beta, Spin x, Spin y) {
    check_angle(alpha);
    check_angle(beta);
    const double s = std::sin((alpha - beta) / 2);
    if (x == y) return 0.5 * s * s;
    const double c = std::cos((alpha - beta) / 2);
    return 0.5 * c * c;
}

double singlet_marginal(double angle, Spin) {
    check_angle(angle);
    return 0.5;
}

ChBreakdown ch_value(const AngleConfig& config, const JointFn& joint, const MarginalFn& marginal) {
    ChBreakdown terms;
    terms.j11 = joint(config.alpha1, config.beta1, Spin::Plus, Spin::Plus);
    terms.j12 = joint(config.alpha1, config.beta2, Spin::Plus, Spin::Plus);
    terms.j22 = joint(config.alpha2, config.beta2, Spin::Plus, Spin::Plus);
    terms.j21 = joint(config.alpha2, config.beta1, Spin::Plus, Spin::Plus);
    terms.m1 = marginal(config.alpha1, Spin::Plus);
    terms.m2 = marginal(config.beta2, Spin::Plus);
    finish(terms);
    return terms;
}

ChBreakdown ch_value(const AngleConfig& config) {
    return ch_value(
        config, [](double a, double b, Spin x, Spin y) { return singlet_joint(a, b, x, y); },
        [](double angle, Spin s) { return singlet_marginal(angle, s); });
}

AngleConfig GridAngleConfig::to_radians() const {
    const double unit = std::numbers::pi / 12;
    return AngleConfig{alpha1 * unit, alpha2 * unit, beta1 * unit, beta2 * unit};
}

GridAngleConfig paper_angles() { return GridAngleConfig{4, 12, 0, 8}; }

std::optional<Rational> exact_cos_pi12(int k) {
    int m = k % 24;
    if (m < 0) m += 24;
    switch (m) {
        case 0: return Rational(1);
        case 4: return Rational(1, 2);
        case 6: return Rational(0);
        case 8: return Rational(-1, 2);
        case 12: return Rational(-1);
        case 16: return Rational(-1, 2);
        case 18: return Rational(0);
        case 20: return Rational(1, 2);
        default: return std::nullopt;  // irrational on the rest of the grid
    }
}

std::optional<Rational> singlet_joint_exact(int k_alpha, int k_beta, Spin x, Spin y) {
    if (k_alpha < 0 || k_alpha > 24 || k_beta < 0 || k_beta > 24)
        throw DomainError("grid angle index outside 0..24");
    const auto cosine = exact_cos_pi12(k_alpha - k_beta);
    if (!cosine) return std::nullopt;
    // sin^2(d/2) = (1 - cos d)/2, cos^2(d/2) = (1 + cos d)/2
    if (x == y) return (1 - *cosine) / 4;
    return (1 + *cosine) / 4;
}

std::optional<ChBreakdownExact> ch_value_exact(const GridAngleConfig& config) {
    ChBreakdownExact terms;
    const auto j11 = singlet_joint_exact(config.alpha1, config.beta1, Spin::Plus, Spin::Plus);
    const auto j12 = singlet_joint_exact(config.alpha1, config.beta2, Spin::Plus, Spin::Plus);
    const auto j22 = singlet_joint_exact(config.alpha2, config.beta2, Spin::Plus, Spin::Plus);
    const auto j21 = singlet_joint_exact(config.alpha2, config.beta1, Spin::Plus, Spin::Plus);
    if (!j11 || !j12 || !j22 || !j21) return std::nullopt;
    terms.j11 = *j11;
    terms.j12 = *j12;
    terms.j22 = *j22;
    terms.j21 = *j21;
    terms.m1 = Rational(1, 2);
    terms.m2 = Rational(1, 2);
    finish(terms);
    return terms;
}

ChBreakdownExact ch_deterministic(const std::array<Spin, 4>& outcomes) {
    const auto ind = [](Spin s) { return Rational(s == Spin::Plus ? 1 : 0); };
    const Spin a1 = outcomes[0], a2 = outcomes[1], b1 = outcomes[2], b2 = outcomes[3];
    ChBreakdownExact terms;
    terms.j11 = ind(a1) * ind(b1);
    terms.j12 = ind(a1) * ind(b2);
    terms.j22 = ind(a2) * ind(b2);
    terms.j21 = ind(a2) * ind(b1);
    terms.m1 = ind(a1);
    terms.m2 = ind(b2);
    finish(terms);
    return terms;
}

ChBreakdownExact ch_mixture(const std::array<Rational, 16>& weights) {
    Rational total = 0;
    for (const Rational& w : weights) {
        if (w < 0) throw DomainError("mixture weight negative: " + to_string(w));
        total += w;
    }
    if (total != 1) throw DomainError("mixture weights sum to " + to_string(total));

    ChBreakdownExact terms;
    for (int bits = 0; bits < 16; ++bits) {
        if (weights[bits] == 0) continue;
        const auto spin_of = [&](int pos) { return bits & (1 << pos) ? Spin::Plus : Spin::Minus; };
        const ChBreakdownExact one =
            ch_deterministic({spin_of(0), spin_of(1), spin_of(2), spin_of(3)});
        terms.j11 += weights[bits] * one.j11;
        terms.j12 += weights[bits] * one.j12;
        terms.j22 += weights[bits] * one.j22;
        terms.j21 += weights[bits] * one.j21;
        terms.m1 += weights[bits] * one.m1;
        terms.m2 += weights[bits] * one.m2;
    }
    finish(terms);
    return terms;
}

ScanReport scan_ch(int steps_per_angle) {
    if (steps_per_angle < 2) throw SizeError("scan needs at least 2 steps per angle");
    ScanReport report;
    report.steps = steps_per_angle;
    const std::size_t steps = static_cast<std::size_t>(steps_per_angle);
    report.rows.reserve(steps * steps * steps * steps);

    std::vector<double> angles(steps);
    for (std::size_t k = 0; k < steps; ++k)
        angles[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(steps_per_angle);

    for (int k1 = 0; k1 < steps_per_angle; ++k1)
        for (int k2 = 0; k2 < steps_per_angle; ++k2)
            for (int k3 = 0; k3 < steps_per_angle; ++k3)
                for (int k4 = 0; k4 < steps_per_angle; ++k4) {
                    ScanRow row;
                    row.k = {k1, k2, k3, k4};
                    row.alpha1 = angles[static_cast<std::size_t>(k1)];
                    row.alpha2 = angles[static_cast<std::size_t>(k2)];
                    row.beta1 = angles[static_cast<std::size_t>(k3)];
                    row.beta2 = angles[static_cast<std::size_t>(k4)];
                    const ChBreakdown terms =
                        ch_value(AngleConfig{row.alpha1, row.alpha2, row.beta1, row.beta2});
                    row.value = terms.total;
                    row.lower_violation = terms.lower_violation;
                    row.upper_violation = terms.upper_violation;
                    const std::size_t index = report.rows.size();
                    report.rows.push_back(row);
                    if (row.lower_violation > report.max_lower_violation) {
                        report.max_lower_violation = row.lower_violation;
                        report.argmax_lower = index;
                    }
                    if (row.upper_violation > report.max_upper_violation) {
                        report.max_upper_violation = row.upper_violation;
                        report.argmax_upper = index;
                    }
                }
    return report;
}

namespace {

// shortest round-trip decimal form, stable across platforms
std::string csv_double(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

}  // namespace

void write_scan_csv(const ScanReport& report, std::ostream& out) {
    out << "alpha1,alpha2,beta1,beta2,ch_value,lower_violation,upper_violation\n";
    for (const ScanRow& row : report.rows)
        out << csv_double(row.alpha1) << "," << csv_double(row.alpha2) << ","
            << csv_double(row.beta1) << "," << csv_double(row.beta2) << ","
            << csv_double(row.value) << "," << csv_double(row.lower_violation) << ","
            << csv_double(row.upper_violation) << "\n";
}

double bell_effect_same_prob(double theta_i, double theta_j) {
    check_angle(theta_i);
    check_angle(theta_j);
    const double c = std::cos((theta_i - theta_j) / 2);
    return c * c;
}

double bell_effect_angle_b() { return std::numbers::pi / 3; }
double bell_effect_angle_c() { return 2 * std::numbers::pi / 3; }

EventScenario ch_scenario() {
    return EventScenario(4, {{1}, {2}, {3}, {4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

std::optional<ProbabilityAssignment> singlet_assignment(const GridAngleConfig& config) {
    const auto exact = ch_value_exact(config);
    if (!exact) return std::nullopt;
    const Rational half(1, 2);
    // family order: {1},{2},{3},{4},{1,3},{1,4},{2,3},{2,4}
    std::vector<Rational> values{half,       half,       half,       half,
                                 exact->j11, exact->j12, exact->j21, exact->j22};
    return ProbabilityAssignment(ch_scenario(), std::move(values));
}

}  // namespace boole
