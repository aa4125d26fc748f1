#pragma once

#include "eqaoa/bits.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eqaoa {

using Complex = std::complex<double>;

// Tolerance on |<psi|psi> - 1| accepted by the StateVector constructor.
inline constexpr double kNormTolerance = 1e-9;

/**
 * Dense 2^n-amplitude pure state with little-endian qubit order
 * (qubit i is bit i of the basis index).
 *
 * The evolution primitives below mutate a state in place and return it.
 */
class StateVector {
  public:
    // Throws SizeError for n outside [1, kMaxQubits], ShapeError when the
    // amplitude count is not 2^n and DomainError when not unit norm.
    StateVector(int n, std::vector<Complex> amplitudes);

    int num_qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }

    const Complex &operator[](std::size_t z) const { return amps_[z]; }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> mutable_amplitudes() { return amps_; }

    double norm_squared() const;

  private:
    int n_;
    std::vector<Complex> amps_;
};

// |s> = H^n |0...0>: every amplitude 2^(-n/2).
StateVector init_uniform(int n);

StateVector basis_state(int n, BasisIndex z);

// e^{-i angle value} -- the single definition used by every diagonal
// phase path so table-driven and direct evaluation agree bit for bit.
inline Complex phase_factor(double angle, double value) {
    const double a = -angle * value;
    return {std::cos(a), std::sin(a)};
}

// Plain complex product; skips the NaN/Inf recovery path of operator*.
inline Complex multiply(const Complex &a, const Complex &b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

// amplitudes[z] *= e^{-i angle diag[z]}.
StateVector &apply_diagonal_phase(StateVector &state,
                                  std::span<const double> diag, double angle);

enum class MixerForm {
    direct,              // per-qubit 2x2 rotations
    hadamard_conjugated, // H^n . diag(e^{-i beta (n - 2|z|)}) . H^n
};

// state <- e^{-i beta sum_j X_j} state.
StateVector &apply_mixer(StateVector &state, double beta,
                         MixerForm form = MixerForm::direct);

// state <- H^{(x)n} state.
StateVector &apply_hadamard_all(StateVector &state);

// sum_z diag[z] |amplitudes[z]|^2.
double expectation(const StateVector &state, std::span<const double> diag);

// sum of |amplitudes[z]|^2 over the given (distinct) indices.
double probability_mass(const StateVector &state,
                        std::span<const BasisIndex> indices);

/**
 * A diagonal prepared for repeated phase application.
 *
 * Objectives built from clause counts take only a handful of distinct
 * values, so the phase is evaluated once per distinct value and gathered
 * through a level index. Diagonals with many distinct values fall back to
 * direct evaluation. Both paths produce identical results to
 * apply_diagonal_phase.
 */
class PhaseDiagonal {
  public:
    explicit PhaseDiagonal(std::vector<double> values);

    int num_qubits() const { return n_; }
    std::span<const double> values() const { return values_; }
    bool tabulated() const { return !levels_.empty(); }

    void apply(StateVector &state, double angle) const;

  private:
    int n_;
    std::vector<double> values_;
    std::vector<double> levels_;
    std::vector<std::uint32_t> level_of_;
};

} // namespace eqaoa
