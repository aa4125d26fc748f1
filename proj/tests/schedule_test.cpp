#include "eqaoa/errors.hpp"
#include "eqaoa/schedule.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace eqaoa;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(IterationCount, TableOneSizes) {
    EXPECT_EQ(iteration_count(20, 2280, ScheduleVariant::full), 158);
    EXPECT_EQ(iteration_count(20, 2280, ScheduleVariant::reduced), 111);
    EXPECT_EQ(iteration_count(2, 2, ScheduleVariant::full), 2);
}

TEST(IterationCount, NaturalLogIsSwitchable) {
    // 20 ln(2280) / sqrt 2 = 109.35
    EXPECT_EQ(iteration_count(20, 2280, ScheduleVariant::full, LogBase::natural),
              110);
}

TEST(IterationCount, AllPresetCells) {
    // ceil(20 log2(m) / sqrt 2) and ceil(20 log2(m / 10) / sqrt 2)
    EXPECT_EQ(iteration_count(20, 4560, ScheduleVariant::full), 172);
    EXPECT_EQ(iteration_count(20, 570, ScheduleVariant::reduced), 83);
    EXPECT_EQ(iteration_count(20, 1140, ScheduleVariant::reduced), 97);
    EXPECT_EQ(iteration_count(20, 4560, ScheduleVariant::reduced), 125);
}

TEST(IterationCount, Errors) {
    EXPECT_THROW(iteration_count(20, 1, ScheduleVariant::full), DomainError);
    EXPECT_THROW(iteration_count(0, 10, ScheduleVariant::full), DomainError);
    // 2m/n = 1 leaves no iterations
    EXPECT_THROW(iteration_count(20, 10, ScheduleVariant::reduced), DomainError);
}

TEST(GammaSchedule, LiteralExamples) {
    const Schedule s = make_schedule(20, 2280, ScheduleVariant::full,
                                     GammaForm::literal);
    EXPECT_DOUBLE_EQ(gamma_schedule(1, 20, 2280, s), kPi);
    EXPECT_DOUBLE_EQ(gamma_schedule(8, 20, 2280, s), 2 * kPi);
    EXPECT_DOUBLE_EQ(s.gamma_at(158), 23 * kPi); // floor(22.34) + 1
}

TEST(GammaSchedule, OddExamples) {
    const Schedule s =
        make_schedule(20, 2280, ScheduleVariant::full, GammaForm::odd);
    EXPECT_DOUBLE_EQ(s.gamma_at(8), kPi);
    EXPECT_DOUBLE_EQ(s.gamma_at(15), 3 * kPi);
    // t reaches floor(log2 m) = 11 at p_max
    EXPECT_DOUBLE_EQ(s.gamma_at(158), 23 * kPi);
}

TEST(GammaSchedule, ReducedOddRampsToTMax) {
    const Schedule s =
        make_schedule(20, 2280, ScheduleVariant::reduced, GammaForm::odd);
    ASSERT_EQ(s.p_max, 111);
    // t_max = ceil(log2(2 * 2280 * 20)) = 17
    EXPECT_DOUBLE_EQ(s.gamma_at(1), kPi);
    EXPECT_DOUBLE_EQ(s.gamma_at(111), 35 * kPi);
}

TEST(GammaSchedule, ReducedLiteralIsUnchangedFormula) {
    const Schedule s =
        make_schedule(20, 2280, ScheduleVariant::reduced, GammaForm::literal);
    for (int p = 1; p <= s.p_max; ++p) {
        EXPECT_EQ(s.gamma_at(p), (std::floor(2 * std::numbers::sqrt2 * p / 20) + 1) * kPi);
    }
}

TEST(GammaSchedule, Properties) {
    for (const int m : {570, 2280, 4560}) {
        for (const auto variant : {ScheduleVariant::full, ScheduleVariant::reduced}) {
            const Schedule lit = make_schedule(20, m, variant, GammaForm::literal);
            const Schedule odd = make_schedule(20, m, variant, GammaForm::odd);
            for (int p = 1; p <= lit.p_max; ++p) {
                if (p > 1) {
                    EXPECT_GE(lit.gamma_at(p), lit.gamma_at(p - 1));
                }
                const double k = odd.gamma_at(p) / kPi;
                EXPECT_NEAR(k, std::round(k), 1e-12);
                EXPECT_EQ(static_cast<long>(std::round(k)) % 2, 1);
            }
        }
    }
}

TEST(GammaSchedule, OutOfRange) {
    const Schedule s = make_schedule(4, 16, ScheduleVariant::full, GammaForm::odd);
    EXPECT_THROW(s.gamma_at(0), DomainError);
    EXPECT_THROW(s.gamma_at(s.p_max + 1), DomainError);
}

TEST(BetaDefault, Examples) {
    EXPECT_DOUBLE_EQ(beta_default(20), 0.05);
    EXPECT_DOUBLE_EQ(beta_default(1), 1.0);
    EXPECT_DOUBLE_EQ(beta_default(4), 0.25);
    EXPECT_THROW(beta_default(0), DomainError);
}

TEST(CustomSchedule, ExplicitValues) {
    const Schedule s = custom_schedule({0.5, 1.5}, 0.1);
    EXPECT_EQ(s.p_max, 2);
    EXPECT_EQ(s.gamma_at(2), 1.5);
    EXPECT_THROW(custom_schedule({}, 0.1), DomainError);
}

TEST(ScheduleNames, RoundTrip) {
    EXPECT_EQ(parse_variant(to_string(ScheduleVariant::reduced)),
              ScheduleVariant::reduced);
    EXPECT_EQ(parse_gamma_form("odd"), GammaForm::odd);
    EXPECT_EQ(parse_log_base("e"), LogBase::natural);
    EXPECT_THROW(parse_log_base("10"), DomainError);
}
