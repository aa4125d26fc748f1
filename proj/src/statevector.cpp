#include "eqaoa/statevector.hpp"

#include "eqaoa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eqaoa {

namespace {

// Qubits handled per cache-resident sweep and the contiguous run length
// used when the sweep's qubits are not the lowest ones.
constexpr int kGroupBits = 8;
constexpr int kTileBits = 3;

// Fixed partition of reductions; partial sums are combined in index order
// so results do not depend on how chunks are scheduled.
constexpr std::size_t kReduceChunk = std::size_t{1} << 12;

void check_qubits(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(n) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

void check_length(const StateVector &state, std::size_t len,
                  const char *what) {
    if (len != state.size()) {
        throw ShapeError(std::string(what) + " has length " +
                         std::to_string(len) + ", expected " +
                         std::to_string(state.size()));
    }
}

/*
 * Apply the same 2x2 pair operation to qubits [q0, q0 + k) of a 2^n array.
 * The index space is walked in sub-cubes of 2^k x 2^t elements (t low
 * contiguous bits, t <= q0) so every qubit of the group is processed while
 * the sub-cube is in cache.
 */
template <typename PairOp>
void sweep_group(Complex *data, int n, int q0, int k, int t, PairOp op) {
    const std::size_t tile = std::size_t{1} << t;
    const int mid_bits = q0 - t;
    const std::size_t mid_mask = (std::size_t{1} << mid_bits) - 1;
    const std::size_t outer = std::size_t{1} << (n - k - t);
    const std::size_t half = std::size_t{1} << (k - 1);

    for (std::size_t r = 0; r < outer; ++r) {
        const std::size_t base =
            ((r & mid_mask) << t) | ((r >> mid_bits) << (q0 + k));
        for (int b = 0; b < k; ++b) {
            const std::size_t stride = std::size_t{1} << (q0 + b);
            const std::size_t low = (std::size_t{1} << b) - 1;
            for (std::size_t h = 0; h < half; ++h) {
                // insert a zero at bit b of the in-group coordinate
                const std::size_t g = ((h & ~low) << 1) | (h & low);
                Complex *p0 = data + base + (g << q0);
                Complex *p1 = p0 + stride;
                for (std::size_t i = 0; i < tile; ++i) {
                    op(p0[i], p1[i]);
                }
            }
        }
    }
}

template <typename PairOp> void sweep_all(StateVector &state, PairOp op) {
    const int n = state.num_qubits();
    Complex *data = state.mutable_amplitudes().data();
    for (int q0 = 0; q0 < n; q0 += kGroupBits) {
        const int k = std::min(kGroupBits, n - q0);
        const int t = std::min(kTileBits, q0);
        sweep_group(data, n, q0, k, t, op);
    }
}

} // namespace

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    check_qubits(n);
    if (amps_.size() != dimension(n)) {
        throw ShapeError("amplitude count " + std::to_string(amps_.size()) +
                         " is not 2^" + std::to_string(n));
    }
    const double norm = norm_squared();
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
        throw DomainError("state norm^2 " + std::to_string(norm) +
                          " is not 1");
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (std::size_t c = 0; c < amps_.size(); c += kReduceChunk) {
        const std::size_t end = std::min(amps_.size(), c + kReduceChunk);
        double partial = 0.0;
        for (std::size_t z = c; z < end; ++z) {
            partial += std::norm(amps_[z]);
        }
        total += partial;
    }
    return total;
}

StateVector init_uniform(int n) {
    check_qubits(n);
    const double amp = std::exp2(-0.5 * n);
    return StateVector(n, std::vector<Complex>(dimension(n), Complex{amp, 0.0}));
}

StateVector basis_state(int n, BasisIndex z) {
    check_qubits(n);
    if (z >= dimension(n)) {
        throw IndexError("basis index " + std::to_string(z) +
                         " out of range for " + std::to_string(n) +
                         " qubits");
    }
    std::vector<Complex> amps(dimension(n));
    amps[z] = 1.0;
    return StateVector(n, std::move(amps));
}

StateVector &apply_diagonal_phase(StateVector &state,
                                  std::span<const double> diag, double angle) {
    check_length(state, diag.size(), "diagonal");
    if (!std::isfinite(angle)) {
        throw DomainError("phase angle is not finite");
    }
    auto amps = state.mutable_amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z) {
        amps[z] = multiply(amps[z], phase_factor(angle, diag[z]));
    }
    return state;
}

StateVector &apply_mixer(StateVector &state, double beta, MixerForm form) {
    if (!std::isfinite(beta)) {
        throw DomainError("mixer angle is not finite");
    }
    if (form == MixerForm::hadamard_conjugated) {
        const int n = state.num_qubits();
        apply_hadamard_all(state);
        auto amps = state.mutable_amplitudes();
        for (std::size_t z = 0; z < amps.size(); ++z) {
            amps[z] = multiply(amps[z], phase_factor(beta, n - 2.0 * popcount(z)));
        }
        return apply_hadamard_all(state);
    }

    const double c = std::cos(beta);
    const double s = std::sin(beta);
    // [[c, -is], [-is, c]]
    sweep_all(state, [c, s](Complex &a0, Complex &a1) {
        const double r0 = a0.real(), i0 = a0.imag();
        const double r1 = a1.real(), i1 = a1.imag();
        a0 = Complex{c * r0 + s * i1, c * i0 - s * r1};
        a1 = Complex{c * r1 + s * i0, c * i1 - s * r0};
    });
    return state;
}

StateVector &apply_hadamard_all(StateVector &state) {
    const double r = std::sqrt(0.5);
    sweep_all(state, [r](Complex &a0, Complex &a1) {
        const Complex u = a0;
        a0 = r * (u + a1);
        a1 = r * (u - a1);
    });
    return state;
}

double expectation(const StateVector &state, std::span<const double> diag) {
    check_length(state, diag.size(), "diagonal");
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (std::size_t c = 0; c < amps.size(); c += kReduceChunk) {
        const std::size_t end = std::min(amps.size(), c + kReduceChunk);
        double partial = 0.0;
        for (std::size_t z = c; z < end; ++z) {
            partial += diag[z] * std::norm(amps[z]);
        }
        total += partial;
    }
    return total;
}

double probability_mass(const StateVector &state,
                        std::span<const BasisIndex> indices) {
    double total = 0.0;
    for (const BasisIndex z : indices) {
        if (z >= state.size()) {
            throw IndexError("basis index " + std::to_string(z) +
                             " out of range");
        }
        total += std::norm(state[z]);
    }
    return total;
}

PhaseDiagonal::PhaseDiagonal(std::vector<double> values)
    : n_(std::countr_zero(values.size())), values_(std::move(values)) {
    if (values_.empty() || !std::has_single_bit(values_.size())) {
        throw ShapeError("diagonal length " + std::to_string(values_.size()) +
                         " is not a power of two");
    }
    check_qubits(n_);

    std::vector<double> levels(values_);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    // Gathering only pays off while the level table stays small.
    if (levels.size() > std::max<std::size_t>(values_.size() / 16, 1)) {
        return;
    }
    levels_ = std::move(levels);
    level_of_.resize(values_.size());
    for (std::size_t z = 0; z < values_.size(); ++z) {
        const auto it =
            std::lower_bound(levels_.begin(), levels_.end(), values_[z]);
        level_of_[z] = static_cast<std::uint32_t>(it - levels_.begin());
    }
}

void PhaseDiagonal::apply(StateVector &state, double angle) const {
    if (!tabulated()) {
        apply_diagonal_phase(state, values_, angle);
        return;
    }
    check_length(state, values_.size(), "diagonal");
    if (!std::isfinite(angle)) {
        throw DomainError("phase angle is not finite");
    }
    std::vector<Complex> table(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        table[l] = phase_factor(angle, levels_[l]);
    }
    auto amps = state.mutable_amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z) {
        amps[z] = multiply(amps[z], table[level_of_[z]]);
    }
}

} // namespace eqaoa
