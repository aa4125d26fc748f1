#include "eqaoa/errors.hpp"
#include "eqaoa/hamiltonian.hpp"
#include "eqaoa/oracle.hpp"
#include "eqaoa/problems.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace eqaoa;
using eqaoa::testing::random_instance;
using eqaoa::testing::random_integers;
using eqaoa::testing::random_reals;

namespace {

Clause3 clause(int a, bool pa, int b, bool pb, int c, bool pc) {
    Clause3 cl;
    cl.vars = {a, b, c};
    cl.positive = {pa, pb, pc};
    return cl;
}

// All eight sign patterns on variables (0, 1, 2): every assignment violates
// exactly one clause.
SatInstance all_patterns_instance() {
    SatInstance inst;
    inst.n = 3;
    for (unsigned s = 0; s < 8; ++s) {
        inst.clauses.push_back(clause(0, s & 1, 1, s & 2, 2, s & 4));
    }
    return inst;
}

} // namespace

TEST(SatDiagonal, SinglePositiveClause) {
    SatInstance inst{3, {clause(0, true, 1, true, 2, true)}};
    const auto d = build_sat_diagonal(inst);
    EXPECT_EQ(d.values, (std::vector<double>{0, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(SatDiagonal, MatchesNaiveClauseCount) {
    Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const SatInstance inst = random_instance(6, 30, rng);
        const auto d = build_sat_diagonal(inst);
        for (BasisIndex z = 0; z < 64; ++z) {
            ASSERT_EQ(d.values[z], clause_count_check(inst, z)) << "z=" << z;
        }
    }
}

TEST(SatDiagonal, MeanIsSevenEighthsOfM) {
    Rng rng(32);
    for (const int n : {3, 5, 9}) {
        const SatInstance inst = random_instance(n, 40, rng);
        const auto d = build_sat_diagonal(inst);
        double sum = 0.0;
        for (const double v : d.values) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 40.0);
            sum += v;
        }
        EXPECT_EQ(sum, 40.0 * 7.0 / 8.0 * static_cast<double>(d.values.size()));
    }
}

TEST(SatDiagonal, PlantedAssignmentScoresM) {
    const auto planted = generate_planted_sat({10, 200, GeneratorMode::planted, 5});
    const auto d = build_sat_diagonal(planted.instance);
    EXPECT_EQ(d.values[planted.planted], 200.0);
}

TEST(SatDiagonal, RejectsInvalidInstances) {
    EXPECT_THROW(build_sat_diagonal(SatInstance{3, {}}), DomainError);
    EXPECT_THROW(build_sat_diagonal(SatInstance{3, {clause(0, 1, 0, 1, 2, 1)}}),
                 DomainError);
    EXPECT_THROW(build_sat_diagonal(SatInstance{3, {clause(0, 1, 1, 1, 3, 1)}}),
                 DomainError);
}

TEST(Normalize, SatisfiableInstance) {
    const auto planted = generate_planted_sat({8, 60, GeneratorMode::planted, 2});
    const auto nd = normalize(build_sat_diagonal(planted.instance), 60);
    EXPECT_EQ(nd.c_max, 1.0);
    EXPECT_EQ(nd.delta_c, 0.0);
    EXPECT_TRUE(nd.satisfiable());
    EXPECT_EQ(nd.c_lim, 1.0);
}

TEST(Normalize, UnsatisfiableInstance) {
    const auto nd = normalize(build_sat_diagonal(all_patterns_instance()), 8);
    EXPECT_DOUBLE_EQ(nd.c_max, 7.0 / 8.0);
    EXPECT_DOUBLE_EQ(nd.delta_c, 1.0 / 8.0);
    EXPECT_FALSE(nd.satisfiable());
}

TEST(Normalize, SinglePeak) {
    const auto nd = normalize({2, {0, 0, 0, 5}}, 5);
    EXPECT_EQ(nd.values, (std::vector<double>{0, 0, 0, 1}));
    EXPECT_THROW(normalize({2, {0, 0, 0, 5}}, 0), DomainError);
    EXPECT_THROW(normalize({2, {0, 0, 0, 5}}, -1), DomainError);
    EXPECT_THROW(normalize({2, {0, 0, 0}}, 1), ShapeError);
}

TEST(ProjectorCoefficients, BasisElement) {
    // diag of p_j for j = 0b0110 at n = 4
    std::vector<double> v(16);
    for (BasisIndex z = 0; z < 16; ++z) {
        v[z] = eval_projector(0b0110, z);
    }
    const auto h = projector_coefficients({4, v});
    ASSERT_EQ(h.size(), 1U);
    EXPECT_EQ(h.coefficient(0b0110), 1.0);
}

TEST(ProjectorCoefficients, ConstantAndAnd) {
    const auto c = projector_coefficients({3, std::vector<double>(8, 2.5)});
    ASSERT_EQ(c.size(), 1U);
    EXPECT_EQ(c.coefficient(0), 2.5);

    const auto a = projector_coefficients({2, {0, 0, 0, 1}});
    ASSERT_EQ(a.size(), 1U);
    EXPECT_EQ(a.coefficient(0b11), 1.0);
}

TEST(ProjectorCoefficients, SatisfiesSubsetSumDefinition) {
    Rng rng(40);
    const auto values = random_reals(6, rng);
    const auto h = projector_coefficients({6, values});
    for (BasisIndex z = 0; z < 64; ++z) {
        double sum = 0.0;
        for (Mask j = 0; j < 64; ++j) {
            if ((j & z) == j) {
                sum += h.coefficient(j);
            }
        }
        EXPECT_NEAR(sum, values[z], 1e-12);
    }
}

TEST(ProjectorCoefficients, RoundTrip) {
    Rng rng(41);
    for (int n = 1; n <= 10; ++n) {
        const auto ints = random_integers(n, rng, 1000);
        EXPECT_EQ(projector_diagonal(projector_coefficients({n, ints})).values,
                  ints);
        const auto reals = random_reals(n, rng);
        const auto back = projector_diagonal(projector_coefficients({n, reals}));
        for (std::size_t z = 0; z < reals.size(); ++z) {
            EXPECT_NEAR(back.values[z], reals[z], 1e-12);
        }
    }
}

TEST(ProjectorCoefficients, SizeLimit) {
    DiagonalObjective big{25, {}};
    big.values.resize(dimension(25));
    EXPECT_THROW(projector_coefficients(big), SizeError);
}

TEST(WalshCoefficients, ZAndProjectorOnQubitZero) {
    const auto z = walsh_coefficients({2, {1, -1, 1, -1}});
    ASSERT_EQ(z.size(), 1U);
    EXPECT_EQ(z.coefficient(0b01), 1.0);

    const auto p = walsh_coefficients({2, {0, 1, 0, 1}});
    ASSERT_EQ(p.size(), 2U);
    EXPECT_EQ(p.coefficient(0), 0.5);
    EXPECT_EQ(p.coefficient(0b01), -0.5);
}

TEST(WalshCoefficients, SatisfiesCharacterExpansion) {
    Rng rng(42);
    const auto values = random_reals(5, rng);
    const auto w = walsh_coefficients({5, values});
    for (BasisIndex z = 0; z < 32; ++z) {
        double sum = 0.0;
        for (Mask j = 0; j < 32; ++j) {
            sum += w.coefficient(j) * ((popcount(j & z) & 1) ? -1.0 : 1.0);
        }
        EXPECT_NEAR(sum, values[z], 1e-12);
    }
}

TEST(WalshCoefficients, RoundTrip) {
    Rng rng(43);
    for (int n = 1; n <= 10; ++n) {
        const auto ints = random_integers(n, rng, 1000);
        EXPECT_EQ(walsh_diagonal(walsh_coefficients({n, ints})).values, ints);
        const auto reals = random_reals(n, rng);
        const auto back = walsh_diagonal(walsh_coefficients({n, reals}));
        for (std::size_t z = 0; z < reals.size(); ++z) {
            EXPECT_NEAR(back.values[z], reals[z], 1e-12);
        }
    }
}

TEST(BasisChange, ProjectorToWalshMatchesDirectTransform) {
    Rng rng(44);
    for (int n = 1; n <= 10; ++n) {
        const auto values = random_reals(n, rng);
        const auto via_p = projector_to_walsh(projector_coefficients({n, values}));
        const auto direct = walsh_coefficients({n, values});
        const auto a = via_p.dense();
        const auto b = direct.dense();
        for (std::size_t j = 0; j < a.size(); ++j) {
            EXPECT_NEAR(a[j], b[j], 1e-12) << "n=" << n << " j=" << j;
        }
    }
}

TEST(Layer, MisObjectives) {
    Graph g{5, {}};
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    EXPECT_EQ(layer(projector_coefficients(mis_diagonal(g, MisVariant::standard))), 1);
    EXPECT_EQ(layer(projector_coefficients(mis_diagonal(g, MisVariant::plus))), 2);
}

TEST(Layer, SatObjectivesAreThree) {
    SatInstance single{4, {clause(0, true, 2, false, 3, true)}};
    const auto h = projector_coefficients(build_sat_diagonal(single));
    EXPECT_EQ(layer(h), 3);
    // the single weight-3 term of one clause is -(+-1)
    EXPECT_EQ(std::abs(h.coefficient(0b1101)), 1.0);

    Rng rng(45);
    for (int trial = 0; trial < 10; ++trial) {
        const SatInstance inst = random_instance(7, 25, rng);
        EXPECT_EQ(layer(projector_coefficients(build_sat_diagonal(inst))), 3);
    }
}

TEST(Layer, EmptyIsDomainError) {
    EXPECT_THROW(layer(ProjectorHamiltonian(3, {})), DomainError);
}

TEST(EvalProjector, Examples) {
    EXPECT_EQ(eval_projector(0, 0b1011), 1);
    EXPECT_EQ(eval_projector(0b1011, 0b1111), 1);
    EXPECT_EQ(eval_projector(0b101, 0b100), 0);
}

TEST(EvalProjector, EqualsProductOfSelectedBits) {
    for (int n = 1; n <= 6; ++n) {
        const Mask dim = dimension(n);
        for (Mask j = 0; j < dim; ++j) {
            for (BasisIndex z = 0; z < dim; ++z) {
                int product = 1;
                for (int i = 0; i < n; ++i) {
                    if ((j >> i) & 1) {
                        product *= static_cast<int>((z >> i) & 1);
                    }
                }
                ASSERT_EQ(eval_projector(j, z), product);
            }
        }
    }
}

TEST(GroverDiagonal, Examples) {
    const std::vector<BasisIndex> zero{0};
    auto g = grover_diagonal(2, zero);
    EXPECT_EQ(g.values, (std::vector<double>{1, 0, 0, 0}));
    EXPECT_EQ(g.c_max, 1.0);
    EXPECT_EQ(g.delta_c, 0.0);

    const std::vector<BasisIndex> two{1, 2};
    EXPECT_EQ(grover_diagonal(2, two).values, (std::vector<double>{0, 1, 1, 0}));

    const std::vector<BasisIndex> all{0, 1, 2, 3};
    EXPECT_EQ(grover_diagonal(2, all).values, std::vector<double>(4, 1.0));

    EXPECT_THROW(grover_diagonal(2, std::vector<BasisIndex>{}), DomainError);
    EXPECT_THROW(grover_diagonal(2, std::vector<BasisIndex>{4}), IndexError);
}

TEST(MaskTerms, DropsZerosAndChecksRange) {
    ProjectorHamiltonian h(3, {{1, 0.0}, {2, 0.5}});
    EXPECT_EQ(h.size(), 1U);
    EXPECT_THROW(ProjectorHamiltonian(3, {{8, 1.0}}), IndexError);
}
