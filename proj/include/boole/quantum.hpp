#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <functional>
#include <optional>
#include <vector>

#include "boole/events.hpp"
#include "boole/rational.hpp"

namespace boole {

/// Measurement directions for the two-setting/two-outcome experiment,
/// radians in [0, 2pi].
struct AngleConfig {
    double alpha1 = 0;
    double alpha2 = 0;
    double beta1 = 0;
    double beta2 = 0;
};

enum class Spin { Plus, Minus };

/// Singlet joint statistics: equal spins (1/2)sin^2((alpha-beta)/2), opposite
/// spins (1/2)cos^2((alpha-beta)/2). Throws DomainError outside [0, 2pi].
double singlet_joint(double alpha, double beta, Spin x, Spin y);

/// Every single-spin probability of the singlet is 1/2, independent of angle
/// and spin (rotational symmetry). Same domain check as singlet_joint.
double singlet_marginal(double angle, Spin spin);

/// The six summands of the two-sided CH expression
///   -1 <= j11 + j12 + j22 - j21 - m1 - m2 <= 0
/// with j_ik the (+,+) joint probability at (alpha_i, beta_k), m1 = p1(alpha1|+),
/// m2 = p2(beta2|+).
template <typename T>
struct ChTerms {
    T j11{}, j12{}, j22{}, j21{};
    T m1{}, m2{};
    T total{};
    T lower_violation{};  // max(0, -1 - total)
    T upper_violation{};  // max(0, total)
};

using ChBreakdown = ChTerms<double>;
using ChBreakdownExact = ChTerms<Rational>;

using JointFn = std::function<double(double, double, Spin, Spin)>;
using MarginalFn = std::function<double(double, Spin)>;

/// CH expression under arbitrary joint/marginal models (floating path).
ChBreakdown ch_value(const AngleConfig& config, const JointFn& joint, const MarginalFn& marginal);
/// CH expression under the singlet model.
ChBreakdown ch_value(const AngleConfig& config);

/// Angles on the pi/12 grid: angle = k*pi/12 with k in [0, 24].
struct GridAngleConfig {
    int alpha1 = 0;
    int alpha2 = 0;
    int beta1 = 0;
    int beta2 = 0;
    AngleConfig to_radians() const;
};

/// The violating configuration (pi/3, pi, 0, 2pi/3) as grid indices.
GridAngleConfig paper_angles();

/// cos(k*pi/12) when it is rational (k mod 24 in {0,4,6,8,12,16,18,20}),
/// nullopt otherwise (Niven: no other rational values exist on this grid).
std::optional<Rational> exact_cos_pi12(int k);

/// Exact singlet joint probability for grid angles whose difference has
/// rational cosine; nullopt otherwise.
std::optional<Rational> singlet_joint_exact(int k_alpha, int k_beta, Spin x, Spin y);

/// Exact-path CH expression; present only when all four angle differences
/// land on rational cosines. Covers the reference configuration.
std::optional<ChBreakdownExact> ch_value_exact(const GridAngleConfig& config);

/// CH expression for one deterministic outcome assignment (a1, a2, b1, b2),
/// joints and marginals read off as 0/1 indicators. Always lands in [-1, 0].
ChBreakdownExact ch_deterministic(const std::array<Spin, 4>& outcomes);

/// CH expression for a convex mixture of the 16 deterministic assignments
/// (index bit i set <=> outcome i is Plus, bit order a1, a2, b1, b2).
ChBreakdownExact ch_mixture(const std::array<Rational, 16>& weights);

/// Grid scan of the CH expression under the singlet model.
struct ScanRow {
    std::array<int, 4> k{};  // grid indices of (alpha1, alpha2, beta1, beta2)
    double alpha1 = 0, alpha2 = 0, beta1 = 0, beta2 = 0;
    double value = 0;
    double lower_violation = 0;
    double upper_violation = 0;
};

struct ScanReport {
    int steps = 0;
    std::vector<ScanRow> rows;  // row-major over (alpha1, alpha2, beta1, beta2)
    std::size_t argmax_lower = 0;
    std::size_t argmax_upper = 0;
    double max_lower_violation = 0;
    double max_upper_violation = 0;
};

/// Evaluates ch_value on the uniform grid {2 pi k / steps}^4. Rows are in
/// grid-index order; argmax ties resolve to the first row.
ScanReport scan_ch(int steps_per_angle);

/// CSV serialization of a scan, header
/// "alpha1,alpha2,beta1,beta2,ch_value,lower_violation,upper_violation",
/// values in shortest round-trip form.
void write_scan_csv(const ScanReport& report, std::ostream& out);

/// Same-answer probability cos^2((theta_i - theta_j)/2) of the entangled
/// model behind the question game; with experiment angles A = 0, B = pi/3,
/// C = 2pi/3 it realizes the target (1, 3/4, 3/4, 1/4).
double bell_effect_same_prob(double theta_i, double theta_j);

/// Fixed experiment angles of the same-answer model.
inline constexpr double kBellEffectAngleA = 0.0;
double bell_effect_angle_b();  // pi/3
double bell_effect_angle_c();  // 2pi/3

/// Four events a1, a2, b1, b2 (1..4) with the four cross pairs {a_i, b_j}.
EventScenario ch_scenario();

/// Exact singlet assignment over ch_scenario() — singles 1/2, cross pairs
/// from the exact path; present only when the config is exactly evaluable.
std::optional<ProbabilityAssignment> singlet_assignment(const GridAngleConfig& config);

}  // namespace boole
