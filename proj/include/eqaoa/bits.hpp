#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace eqaoa {

// Computational basis index. Bit i holds the value of qubit i.
using BasisIndex = std::uint64_t;
// Bit mask selecting a subset of qubits (the j of a projector p_j).
using Mask = std::uint64_t;

inline constexpr int kMaxQubits = 26;

constexpr std::size_t dimension(int n) { return std::size_t{1} << n; }

constexpr int popcount(std::uint64_t x) { return std::popcount(x); }

// True when every qubit selected by `j` is 1 in `z`.
constexpr bool is_subset(Mask j, BasisIndex z) { return (j & z) == j; }

// In-place unnormalized Walsh-Hadamard butterfly over a 2^n array.
template <typename T> void fwht(std::span<T> a) {
    const std::size_t dim = a.size();
    for (std::size_t half = 1; half < dim; half <<= 1) {
        for (std::size_t base = 0; base < dim; base += 2 * half) {
            for (std::size_t i = base; i < base + half; ++i) {
                const T u = a[i];
                const T v = a[i + half];
                a[i] = u + v;
                a[i + half] = u - v;
            }
        }
    }
}

// Subset-sum (zeta) transform: a[z] <- sum over j subset of z of a[j].
template <typename T> void subset_zeta(std::span<T> a) {
    const std::size_t dim = a.size();
    for (std::size_t bit = 1; bit < dim; bit <<= 1) {
        for (std::size_t z = 0; z < dim; ++z) {
            if (z & bit) {
                a[z] += a[z ^ bit];
            }
        }
    }
}

// Inverse of subset_zeta (Moebius transform over the subset lattice).
template <typename T> void subset_moebius(std::span<T> a) {
    const std::size_t dim = a.size();
    for (std::size_t bit = 1; bit < dim; bit <<= 1) {
        for (std::size_t z = 0; z < dim; ++z) {
            if (z & bit) {
                a[z] -= a[z ^ bit];
            }
        }
    }
}

} // namespace eqaoa
