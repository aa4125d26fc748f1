#pragma once

#include "eqaoa/hamiltonian.hpp"
#include "eqaoa/rng.hpp"
#include "eqaoa/schedule.hpp"
#include "eqaoa/statevector.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace eqaoa {

struct RunConfig {
    Schedule schedule;
    bool record_expectation = false;
    // Argmax set of the objective; its total probability is tracked.
    std::vector<BasisIndex> target;
    MixerForm mixer = MixerForm::direct;
};

struct TrajectoryPoint {
    int p = 0;
    double gamma_s = 0.0;
    double target_probability = 0.0;
    std::optional<double> expectation;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    double max_target_probability = 0.0;
};

/**
 * Standard QAOA: from |s>, for p = 1..p_max apply e^{-i gamma_p H_C} and
 * then e^{-i beta sum X}. The target probability (and optionally <H_C>) is
 * recorded after each iteration.
 */
Trajectory run_standard(const NormalizedDiagonal &diag, const RunConfig &config);

/**
 * Enhanced QAOA: the phase separator is the product of controlled phase
 * gates e^{-i gamma_s gamma_j p_j}. They commute, so their joint action is
 * the diagonal D(z) = sum_{j subset of z} gamma_j, materialized once.
 */
Trajectory run_enhanced(const ProjectorHamiltonian &h, const RunConfig &config);

/// Final state of the standard loop (no recording).
StateVector evolve_standard(std::span<const double> diag,
                            const Schedule &schedule,
                            MixerForm mixer = MixerForm::direct);

/// Final state of the enhanced loop (no recording).
StateVector evolve_enhanced(const ProjectorHamiltonian &h,
                            const Schedule &schedule,
                            MixerForm mixer = MixerForm::direct);

/// Rescales coefficients so that sum_j |gamma_j| = 1.
ProjectorHamiltonian normalize_abs(const ProjectorHamiltonian &h);

/// Multiplies every coefficient by `factor`.
ProjectorHamiltonian scaled(const ProjectorHamiltonian &h, double factor);

/**
 * Measurement-driven reweighting: e_j is the fraction of samples z with
 * j subset of z, and the new coefficients are e_j^alpha gamma_j rescaled
 * to sum_j |gamma_j| = 1 (0^0 = 1).
 *
 * Throws DomainError for alpha < 0 or no samples, and DegeneracyError
 * when every reweighted coefficient vanishes.
 */
ProjectorHamiltonian update_parameters(const ProjectorHamiltonian &h,
                                       std::span<const BasisIndex> samples,
                                       double alpha);

/// Draws `shots` computational-basis measurement outcomes.
std::vector<BasisIndex> sample_measurements(const StateVector &state,
                                            std::size_t shots, Rng &rng);

} // namespace eqaoa
