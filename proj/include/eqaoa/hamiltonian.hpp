#pragma once

#include "eqaoa/bits.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace eqaoa {

// Largest n accepted by the O(n 2^n) basis transforms.
inline constexpr int kMaxTransformQubits = 24;

/// Disjunction of three literals over distinct variables.
struct Clause3 {
    std::array<int, 3> vars{};
    /// true: literal is x, satisfied when the bit is 1; false: literal is !x.
    std::array<bool, 3> positive{};

    bool satisfied_by(BasisIndex z) const {
        for (int k = 0; k < 3; ++k) {
            if (((z >> vars[k]) & 1U) == (positive[k] ? 1U : 0U)) {
                return true;
            }
        }
        return false;
    }

    /// The single assignment of (vars[0], vars[1], vars[2]) that violates
    /// the clause, packed with vars[k] at bit k.
    unsigned forbidden_pattern() const {
        return (positive[0] ? 0U : 1U) | (positive[1] ? 0U : 2U) |
               (positive[2] ? 0U : 4U);
    }

    bool operator==(const Clause3 &) const = default;
};

struct SatInstance {
    int n = 0;
    std::vector<Clause3> clauses;

    std::size_t m() const { return clauses.size(); }
    bool operator==(const SatInstance &) const = default;
};

// Throws DomainError unless every clause has three distinct variables in
// [0, n), m >= 1 and 3 <= n <= kMaxQubits.
void validate(const SatInstance &instance);

/// H_C = diag{C(z)} over all 2^n assignments.
struct DiagonalObjective {
    int n = 0;
    std::vector<double> values;
};

/// A diagonal scaled so that the normalization ceiling C_lim is 1.
struct NormalizedDiagonal {
    int n = 0;
    std::vector<double> values;
    double c_lim = 1.0;
    double c_max = 0.0;
    // c_lim - c_max; exactly zero iff the raw maximum reached the divisor.
    double delta_c = 0.0;

    bool satisfiable() const { return delta_c == 0.0; }
};

// Sparse coefficient map over n-bit masks with zero entries removed.
class MaskTerms {
  public:
    MaskTerms() = default;
    MaskTerms(int n, std::map<Mask, double> terms);

    int num_qubits() const { return n_; }
    const std::map<Mask, double> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Coefficient of `mask`, 0 when absent.
    double coefficient(Mask mask) const;

    // Dense 2^n array of the coefficients.
    std::vector<double> dense() const;

  private:
    int n_ = 0;
    std::map<Mask, double> terms_;
};

/// sum_j gamma_j p_j, p_j = tensor product of P = diag{0,1} on the qubits of j.
class ProjectorHamiltonian : public MaskTerms {
    using MaskTerms::MaskTerms;
};

/// sum_j theta_j w_j, w_j = tensor product of Z on the qubits of j.
class WalshHamiltonian : public MaskTerms {
    using MaskTerms::MaskTerms;
};

/**
 * C(z) = number of clauses satisfied by z.
 *
 * Starts every entry at m and, per clause, decrements only the 2^(n-3)
 * indices carrying the clause's forbidden pattern.
 */
DiagonalObjective build_sat_diagonal(const SatInstance &instance);

/// Divides by `divisor` (m for SAT). c_max and delta_c come from the raw
/// maximum so the satisfiability test is exact on integer objectives.
NormalizedDiagonal normalize(const DiagonalObjective &diag, double divisor);

/// Coefficients c_j with diag[z] = sum_{j subset of z} c_j.
ProjectorHamiltonian projector_coefficients(const DiagonalObjective &diag);

/// Inverse of projector_coefficients: D(z) = sum_{j subset of z} c_j.
DiagonalObjective projector_diagonal(const ProjectorHamiltonian &h);

/// Coefficients theta_j with diag[z] = sum_j theta_j (-1)^{|j & z|}.
WalshHamiltonian walsh_coefficients(const DiagonalObjective &diag);

DiagonalObjective walsh_diagonal(const WalshHamiltonian &w);

/// Rewrites every p_j as prod_{i in j} (I - Z_i)/2 and collects Walsh terms.
WalshHamiltonian projector_to_walsh(const ProjectorHamiltonian &h);

/// Max popcount over stored masks (number of control bits of the widest
/// controlled phase gate).
int layer(const ProjectorHamiltonian &h);

/// <z|p_j|z>.
constexpr int eval_projector(Mask j, BasisIndex z) {
    return is_subset(j, z) ? 1 : 0;
}

/// 1 on every marked state, 0 elsewhere.
NormalizedDiagonal grover_diagonal(int n, std::span<const BasisIndex> marked);

} // namespace eqaoa
