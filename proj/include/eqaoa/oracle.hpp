#pragma once

// Brute-force references. Nothing here calls into the evolution engine or
// the statevector kernels; every operator is built as an explicit matrix.

#include "eqaoa/hamiltonian.hpp"
#include "eqaoa/schedule.hpp"
#include "eqaoa/statevector.hpp"

#include <span>
#include <vector>

namespace eqaoa {

inline constexpr int kMaxOracleQubits = 8;

// Dense row-major 2^n x 2^n complex matrix.
class DenseOperator {
  public:
    DenseOperator(int n, std::vector<Complex> entries);

    static DenseOperator identity(int n);
    static DenseOperator diagonal(int n, std::span<const Complex> entries);
    // e^{-i beta X} on one qubit.
    static DenseOperator x_rotation(double beta);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return dim_; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * dim_ + c];
    }

    DenseOperator kron(const DenseOperator &rhs) const;
    DenseOperator operator*(const DenseOperator &rhs) const;
    std::vector<Complex> apply(std::span<const Complex> v) const;

    // max |(U U^dagger - I)_{rc}|.
    double unitarity_error() const;

  private:
    int n_;
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// U_C(gamma) = diag(e^{-i gamma diag[z]}).
DenseOperator dense_phase_operator(std::span<const double> diag, double gamma);

/// U_B(beta) as the n-fold Kronecker power of e^{-i beta X}.
DenseOperator dense_mixer_operator(int n, double beta);

/// Reference realization of the standard QAOA state for n <= 8.
StateVector dense_evolution(std::span<const double> diag,
                            const Schedule &schedule, int n);

struct MaxResult {
    double value = 0.0;
    std::vector<BasisIndex> argmax; // ascending, ties included
};

MaxResult exhaustive_max(std::span<const double> diag);

/// Satisfied clause count of z, evaluated literal by literal.
int clause_count_check(const SatInstance &instance, BasisIndex z);

} // namespace eqaoa
