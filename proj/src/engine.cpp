#include "eqaoa/engine.hpp"

#include "eqaoa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace eqaoa {

namespace {

using IterationHook =
    std::function<void(int p, double gamma_s, const StateVector &state)>;

void check_schedule(const Schedule &schedule) {
    if (schedule.p_max < 1) {
        throw DomainError("schedule needs p_max >= 1");
    }
    if (!(schedule.beta > 0.0) && schedule.gamma_form != GammaForm::custom) {
        throw DomainError("schedule needs beta > 0");
    }
}

StateVector evolve(const PhaseDiagonal &phases, const Schedule &schedule,
                   MixerForm mixer, const IterationHook &hook) {
    check_schedule(schedule);
    StateVector state = init_uniform(phases.num_qubits());
    for (int p = 1; p <= schedule.p_max; ++p) {
        const double gamma = schedule.gamma_at(p);
        phases.apply(state, gamma);
        apply_mixer(state, schedule.beta, mixer);
        if (hook) {
            hook(p, gamma, state);
        }
    }
    return state;
}

Trajectory record(const PhaseDiagonal &phases, const RunConfig &config) {
    if (config.target.empty()) {
        throw DomainError("run needs a nonempty target set");
    }
    Trajectory trajectory;
    trajectory.points.reserve(static_cast<std::size_t>(config.schedule.p_max));
    evolve(phases, config.schedule, config.mixer,
           [&](int p, double gamma, const StateVector &state) {
               TrajectoryPoint point;
               point.p = p;
               point.gamma_s = gamma;
               point.target_probability =
                   probability_mass(state, config.target);
               if (config.record_expectation) {
                   point.expectation = expectation(state, phases.values());
               }
               trajectory.max_target_probability = std::max(
                   trajectory.max_target_probability, point.target_probability);
               trajectory.points.push_back(point);
           });
    return trajectory;
}

PhaseDiagonal enhanced_phases(const ProjectorHamiltonian &h) {
    if (h.empty()) {
        throw DomainError("enhanced run needs at least one projector term");
    }
    return PhaseDiagonal(projector_diagonal(h).values);
}

} // namespace

Trajectory run_standard(const NormalizedDiagonal &diag,
                        const RunConfig &config) {
    return record(PhaseDiagonal(diag.values), config);
}

Trajectory run_enhanced(const ProjectorHamiltonian &h, const RunConfig &config) {
    return record(enhanced_phases(h), config);
}

StateVector evolve_standard(std::span<const double> diag,
                            const Schedule &schedule, MixerForm mixer) {
    return evolve(PhaseDiagonal(std::vector<double>(diag.begin(), diag.end())),
                  schedule, mixer, {});
}

StateVector evolve_enhanced(const ProjectorHamiltonian &h,
                            const Schedule &schedule, MixerForm mixer) {
    return evolve(enhanced_phases(h), schedule, mixer, {});
}

ProjectorHamiltonian normalize_abs(const ProjectorHamiltonian &h) {
    double total = 0.0;
    for (const auto &[mask, c] : h.terms()) {
        total += std::abs(c);
    }
    if (!(total > 0.0)) {
        throw DegeneracyError("cannot normalize a Hamiltonian with no weight");
    }
    return scaled(h, 1.0 / total);
}

ProjectorHamiltonian scaled(const ProjectorHamiltonian &h, double factor) {
    std::map<Mask, double> terms;
    for (const auto &[mask, c] : h.terms()) {
        terms.emplace_hint(terms.end(), mask, c * factor);
    }
    return ProjectorHamiltonian(h.num_qubits(), std::move(terms));
}

ProjectorHamiltonian update_parameters(const ProjectorHamiltonian &h,
                                       std::span<const BasisIndex> samples,
                                       double alpha) {
    if (!(alpha >= 0.0)) {
        throw DomainError("adjusting factor alpha must be >= 0");
    }
    if (samples.empty()) {
        throw DomainError("parameter update needs at least one sample");
    }
    std::map<Mask, double> terms;
    double total = 0.0;
    for (const auto &[mask, c] : h.terms()) {
        std::size_t hits = 0;
        for (const BasisIndex z : samples) {
            hits += static_cast<std::size_t>(eval_projector(mask, z));
        }
        const double e = static_cast<double>(hits) /
                         static_cast<double>(samples.size());
        const double updated = std::pow(e, alpha) * c;
        total += std::abs(updated);
        terms.emplace_hint(terms.end(), mask, updated);
    }
    if (!(total > 0.0)) {
        throw DegeneracyError(
            "samples annihilated every projector term of the update");
    }
    for (auto &[mask, c] : terms) {
        c /= total;
    }
    return ProjectorHamiltonian(h.num_qubits(), std::move(terms));
}

std::vector<BasisIndex> sample_measurements(const StateVector &state,
                                            std::size_t shots, Rng &rng) {
    const auto amps = state.amplitudes();
    std::vector<double> cumulative(amps.size());
    double running = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
        running += std::norm(amps[z]);
        cumulative[z] = running;
    }
    std::vector<BasisIndex> out;
    out.reserve(shots);
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * running;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        out.push_back(static_cast<BasisIndex>(
            std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                     static_cast<std::ptrdiff_t>(amps.size()) - 1)));
    }
    return out;
}

} // namespace eqaoa
