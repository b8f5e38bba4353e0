#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "boole/errors.hpp"
#include "boole/quantum.hpp"
#include "boole/rng.hpp"

using namespace boole;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;
}  // namespace

TEST_CASE("singlet joint probabilities") {
    // equal settings never give equal results
    CHECK(singlet_joint(1.0, 1.0, Spin::Plus, Spin::Plus) == 0.0);
    CHECK(singlet_joint(1.0, 1.0, Spin::Minus, Spin::Minus) == 0.0);
    CHECK(singlet_joint(kPi, 0.0, Spin::Plus, Spin::Plus) == doctest::Approx(0.5).epsilon(kTol));

    // four outcomes always sum to 1
    Pcg32 rng(41, 0);
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.next_double() * 2 * kPi;
        const double b = rng.next_double() * 2 * kPi;
        const double sum = singlet_joint(a, b, Spin::Plus, Spin::Plus) +
                           singlet_joint(a, b, Spin::Plus, Spin::Minus) +
                           singlet_joint(a, b, Spin::Minus, Spin::Plus) +
                           singlet_joint(a, b, Spin::Minus, Spin::Minus);
        CHECK(std::abs(sum - 1.0) < kTol);
        // marginal consistency
        const double row = singlet_joint(a, b, Spin::Plus, Spin::Plus) +
                           singlet_joint(a, b, Spin::Plus, Spin::Minus);
        CHECK(std::abs(row - singlet_marginal(a, Spin::Plus)) < kTol);
    }

    CHECK(singlet_marginal(0.0, Spin::Plus) == 0.5);
    CHECK(singlet_marginal(kPi, Spin::Minus) == 0.5);
    CHECK_THROWS_AS(singlet_joint(-0.1, 0.0, Spin::Plus, Spin::Plus), DomainError);
    CHECK_THROWS_AS(singlet_marginal(7.0, Spin::Plus), DomainError);
}

TEST_CASE("exact grid cosines") {
    CHECK(*exact_cos_pi12(0) == 1);
    CHECK(*exact_cos_pi12(4) == Rational(1, 2));
    CHECK(*exact_cos_pi12(6) == 0);
    CHECK(*exact_cos_pi12(12) == -1);
    CHECK(*exact_cos_pi12(-4) == Rational(1, 2));
    CHECK(!exact_cos_pi12(1));
    CHECK(!exact_cos_pi12(2));
    CHECK(!exact_cos_pi12(3));

    // exact values agree with the floating model wherever both exist
    for (int ka = 0; ka <= 24; ++ka)
        for (int kb = 0; kb <= 24; ++kb) {
            const auto exact = singlet_joint_exact(ka, kb, Spin::Plus, Spin::Plus);
            if (!exact) continue;
            const double approx =
                singlet_joint(ka * kPi / 12, kb * kPi / 12, Spin::Plus, Spin::Plus);
            CHECK(std::abs(static_cast<double>(*exact) - approx) < kTol);
        }
}

TEST_CASE("CH value at the reference configuration") {
    const GridAngleConfig grid = paper_angles();

    SUBCASE("exact path") {
        const auto exact = ch_value_exact(grid);
        REQUIRE(exact);
        CHECK(exact->j11 == Rational(1, 8));
        CHECK(exact->j12 == Rational(1, 8));
        CHECK(exact->j22 == Rational(1, 8));
        CHECK(exact->j21 == Rational(1, 2));
        CHECK(exact->m1 == Rational(1, 2));
        CHECK(exact->m2 == Rational(1, 2));
        CHECK(exact->total == Rational(-9, 8));
        CHECK(exact->lower_violation == Rational(1, 8));
        CHECK(exact->upper_violation == 0);
    }
    SUBCASE("floating path within 1e-12") {
        const ChBreakdown terms = ch_value(grid.to_radians());
        CHECK(std::abs(terms.total - (-9.0 / 8.0)) < kTol);
        CHECK(std::abs(terms.lower_violation - 1.0 / 8.0) < kTol);
    }
    SUBCASE("equal angles sit on the lower boundary") {
        const ChBreakdown terms = ch_value(AngleConfig{1.0, 1.0, 1.0, 1.0});
        CHECK(std::abs(terms.total - (-1.0)) < kTol);
        CHECK(terms.lower_violation < kTol);
        CHECK(terms.upper_violation == 0.0);
    }
    SUBCASE("a configuration off the rational grid has no exact value") {
        CHECK(!ch_value_exact(GridAngleConfig{1, 12, 0, 8}));
    }
}

TEST_CASE("deterministic assignments stay in [-1, 0] exactly") {
    for (int bits = 0; bits < 16; ++bits) {
        const auto spin_of = [&](int pos) { return bits & (1 << pos) ? Spin::Plus : Spin::Minus; };
        const ChBreakdownExact terms =
            ch_deterministic({spin_of(0), spin_of(1), spin_of(2), spin_of(3)});
        CHECK(terms.total >= -1);
        CHECK(terms.total <= 0);
        CHECK(terms.lower_violation == 0);
        CHECK(terms.upper_violation == 0);
    }
}

TEST_CASE("mixtures of deterministic assignments stay in [-1, 0] exactly") {
    Pcg32 rng(43, 0);
    for (int round = 0; round < 200; ++round) {
        std::array<Rational, 16> weights{};
        Rational total = 0;
        for (auto& w : weights) {
            w = Rational(rng.next_u32() % 10);
            total += w;
        }
        if (total == 0) {
            weights[0] = 1;
            total = 1;
        }
        for (auto& w : weights) w /= total;
        const ChBreakdownExact terms = ch_mixture(weights);
        CHECK(terms.total >= -1);
        CHECK(terms.total <= 0);
    }
    CHECK_THROWS_AS(ch_mixture(std::array<Rational, 16>{}), DomainError);
}

TEST_CASE("scan over the angle grid") {
    SUBCASE("steps=2 evaluates the full grid") {
        const ScanReport report = scan_ch(2);
        CHECK(report.rows.size() == 16);
        // all angles in {0, pi}: every difference is 0 or pi
        for (const ScanRow& row : report.rows) {
            CHECK(row.value <= 0.0 + kTol);
            CHECK(row.value >= -1.0 - kTol);
        }
        CHECK(report.max_lower_violation < kTol);
    }
    SUBCASE("steps=24 contains the reference configuration and a 1/8 violation") {
        const ScanReport report = scan_ch(24);
        CHECK(report.rows.size() == 24u * 24 * 24 * 24);
        // row order is grid-index order
        const std::size_t index = ((4u * 24 + 12) * 24 + 0) * 24 + 8;
        const ScanRow& row = report.rows[index];
        CHECK(row.k == std::array<int, 4>{4, 12, 0, 8});
        CHECK(std::abs(row.value - (-9.0 / 8.0)) < kTol);
        CHECK(report.max_lower_violation >= 1.0 / 8.0 - kTol);
        // the argmax row actually attains the reported maximum
        CHECK(report.rows[report.argmax_lower].lower_violation == report.max_lower_violation);
    }
    SUBCASE("step count validation") { CHECK_THROWS_AS(scan_ch(1), SizeError); }
    SUBCASE("CSV serialization") {
        const ScanReport report = scan_ch(2);
        std::ostringstream csv;
        write_scan_csv(report, csv);
        std::istringstream lines(csv.str());
        std::string line;
        REQUIRE(std::getline(lines, line));
        CHECK(line == "alpha1,alpha2,beta1,beta2,ch_value,lower_violation,upper_violation");
        std::size_t rows = 0;
        double last_value = 1;
        while (std::getline(lines, line)) {
            ++rows;
            // every data line has 7 comma-separated fields that round-trip
            std::istringstream fields(line);
            std::string field;
            int count = 0;
            while (std::getline(fields, field, ',')) {
                last_value = std::stod(field);
                ++count;
            }
            CHECK(count == 7);
        }
        CHECK(rows == report.rows.size());
        CHECK(last_value == report.rows.back().upper_violation);
    }
}

TEST_CASE("same-answer model of the question game") {
    CHECK(bell_effect_same_prob(0.0, 0.0) == 1.0);
    CHECK(bell_effect_same_prob(0.0, bell_effect_angle_b()) ==
          doctest::Approx(0.75).epsilon(kTol));
    CHECK(bell_effect_same_prob(0.0, bell_effect_angle_c()) ==
          doctest::Approx(0.25).epsilon(kTol));
    CHECK(bell_effect_same_prob(bell_effect_angle_b(), bell_effect_angle_c()) ==
          doctest::Approx(0.75).epsilon(kTol));
    CHECK_THROWS_AS(bell_effect_same_prob(-1.0, 0.0), DomainError);
}

TEST_CASE("exact singlet assignment over the CH scenario") {
    const auto assignment = singlet_assignment(paper_angles());
    REQUIRE(assignment);
    CHECK(assignment->scenario() == ch_scenario());
    CHECK(assignment->value({1}) == Rational(1, 2));
    CHECK(assignment->value({1, 3}) == Rational(1, 8));
    CHECK(assignment->value({1, 4}) == Rational(1, 8));
    CHECK(assignment->value({2, 3}) == Rational(1, 2));
    CHECK(assignment->value({2, 4}) == Rational(1, 8));
    CHECK(!singlet_assignment(GridAngleConfig{1, 0, 0, 0}));
}
