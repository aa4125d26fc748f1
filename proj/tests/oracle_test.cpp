#include "eqaoa/errors.hpp"
#include "eqaoa/oracle.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace eqaoa;
using eqaoa::testing::random_instance;
using eqaoa::testing::random_reals;

TEST(DenseEvolution, ZeroScheduleIsUniform) {
    const StateVector psi =
        dense_evolution(std::vector<double>(16, 0.3), custom_schedule({0.0}, 0.0), 4);
    for (std::size_t z = 0; z < 16; ++z) {
        EXPECT_NEAR(psi[z].real(), 0.25, 1e-15);
        EXPECT_NEAR(psi[z].imag(), 0.0, 1e-15);
    }
}

TEST(DenseEvolution, SinglePhaseFlip) {
    const StateVector psi = dense_evolution(
        std::vector<double>{0, 1}, custom_schedule({std::numbers::pi}, 0.0), 1);
    EXPECT_NEAR(psi[0].real(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(psi[1].real(), -std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(psi[1].imag(), 0.0, 1e-15);
}

TEST(DenseEvolution, NormPreservedAndSizeCapped) {
    Rng rng(1);
    const auto diag = random_reals(6, rng, 0.0, 1.0);
    const Schedule s = make_schedule(6, 30, ScheduleVariant::full, GammaForm::odd);
    EXPECT_NEAR(dense_evolution(diag, s, 6).norm_squared(), 1.0, 1e-10);
    EXPECT_THROW(dense_evolution(std::vector<double>(512), s, 9), SizeError);
    EXPECT_THROW(dense_evolution(std::vector<double>(8), s, 2), ShapeError);
}

TEST(DenseOperator, Unitarity) {
    Rng rng(2);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_LE(dense_mixer_operator(n, 2.0 * rng.uniform()).unitarity_error(),
                  1e-10);
        const auto diag = random_reals(n, rng);
        EXPECT_LE(dense_phase_operator(diag, 9.0).unitarity_error(), 1e-10);
        const auto product = dense_mixer_operator(n, 0.2) *
                             dense_phase_operator(diag, 3.0);
        EXPECT_LE(product.unitarity_error(), 1e-10);
    }
}

TEST(DenseOperator, KronOfXRotationsIsTransverseField) {
    // <11|U_B|00> = (-i sin b)^2
    const double b = 0.4;
    const auto u = dense_mixer_operator(2, b);
    EXPECT_NEAR(u(3, 0).real(), -std::sin(b) * std::sin(b), 1e-15);
    EXPECT_NEAR(u(1, 1).real(), std::cos(b) * std::cos(b), 1e-15);
}

TEST(ExhaustiveMax, Examples) {
    const auto constant = exhaustive_max(std::vector<double>(8, 4.0));
    EXPECT_EQ(constant.value, 4.0);
    EXPECT_EQ(constant.argmax.size(), 8U);

    const auto ties = exhaustive_max(std::vector<double>{0, 3, 3, 1});
    EXPECT_EQ(ties.value, 3.0);
    EXPECT_EQ(ties.argmax, (std::vector<BasisIndex>{1, 2}));
}

TEST(ExhaustiveMax, AgreesWithSecondScan) {
    Rng rng(3);
    const auto v = eqaoa::testing::random_integers(10, rng, 5);
    const auto r = exhaustive_max(v);
    EXPECT_EQ(r.value, *std::max_element(v.begin(), v.end()));
    EXPECT_EQ(static_cast<std::size_t>(std::count(v.begin(), v.end(), r.value)),
              r.argmax.size());
    for (const auto z : r.argmax) {
        EXPECT_EQ(v[z], r.value);
    }
}

TEST(ClauseCountCheck, Examples) {
    Clause3 c;
    c.vars = {0, 1, 2};
    c.positive = {true, true, true};
    const SatInstance inst{3, {c}};
    EXPECT_EQ(clause_count_check(inst, 0), 0);
    EXPECT_EQ(clause_count_check(inst, 4), 1);

    Rng rng(4);
    const auto r = random_instance(6, 30, rng);
    int total = 0;
    for (BasisIndex z = 0; z < 64; ++z) {
        total += clause_count_check(r, z);
    }
    EXPECT_EQ(total, 30 * 56);
}
