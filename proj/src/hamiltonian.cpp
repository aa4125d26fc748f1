#include "eqaoa/hamiltonian.hpp"

#include "eqaoa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace eqaoa {

namespace {

void check_transform_size(int n) {
    if (n < 1 || n > kMaxTransformQubits) {
        throw SizeError("basis transform needs 1 <= n <= " +
                        std::to_string(kMaxTransformQubits) + ", got " +
                        std::to_string(n));
    }
}

void check_diagonal(const DiagonalObjective &diag) {
    if (diag.n < 1 || diag.n > kMaxQubits) {
        throw SizeError("diagonal qubit count " + std::to_string(diag.n) +
                        " out of range");
    }
    if (diag.values.size() != dimension(diag.n)) {
        throw ShapeError("diagonal has " + std::to_string(diag.values.size()) +
                         " entries, expected 2^" + std::to_string(diag.n));
    }
}

std::map<Mask, double> sparse(const std::vector<double> &dense) {
    std::map<Mask, double> terms;
    for (std::size_t j = 0; j < dense.size(); ++j) {
        if (dense[j] != 0.0) {
            terms.emplace_hint(terms.end(), j, dense[j]);
        }
    }
    return terms;
}

// Spread the low bits of r over the zero positions left by three sorted
// distinct bit positions.
inline std::size_t insert_three_zeros(std::size_t r,
                                      const std::array<int, 3> &sorted) {
    for (const int v : sorted) {
        const std::size_t low = (std::size_t{1} << v) - 1;
        r = ((r & ~low) << 1) | (r & low);
    }
    return r;
}

} // namespace

void validate(const SatInstance &instance) {
    if (instance.n < 3 || instance.n > kMaxQubits) {
        throw DomainError("3-SAT needs 3 <= n <= " +
                          std::to_string(kMaxQubits) + ", got " +
                          std::to_string(instance.n));
    }
    if (instance.clauses.empty()) {
        throw DomainError("instance has no clauses");
    }
    for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
        const auto &v = instance.clauses[c].vars;
        for (const int x : v) {
            if (x < 0 || x >= instance.n) {
                throw DomainError("clause " + std::to_string(c) +
                                  " references variable " + std::to_string(x) +
                                  " outside [0, " +
                                  std::to_string(instance.n) + ")");
            }
        }
        if (v[0] == v[1] || v[0] == v[2] || v[1] == v[2]) {
            throw DomainError("clause " + std::to_string(c) +
                              " repeats a variable");
        }
    }
}

MaskTerms::MaskTerms(int n, std::map<Mask, double> terms)
    : n_(n), terms_(std::move(terms)) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(n) + " out of range");
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first >= dimension(n)) {
            throw IndexError("mask " + std::to_string(it->first) +
                             " has bits beyond qubit " +
                             std::to_string(n - 1));
        }
        it = it->second == 0.0 ? terms_.erase(it) : std::next(it);
    }
}

double MaskTerms::coefficient(Mask mask) const {
    const auto it = terms_.find(mask);
    return it == terms_.end() ? 0.0 : it->second;
}

std::vector<double> MaskTerms::dense() const {
    std::vector<double> out(dimension(n_), 0.0);
    for (const auto &[mask, c] : terms_) {
        out[mask] = c;
    }
    return out;
}

DiagonalObjective build_sat_diagonal(const SatInstance &instance) {
    validate(instance);
    const int n = instance.n;
    const std::size_t dim = dimension(n);
    const std::size_t free_count = dim >> 3;

    std::vector<std::int32_t> counts(dim,
                                     static_cast<std::int32_t>(instance.m()));
    for (const Clause3 &clause : instance.clauses) {
        std::array<int, 3> sorted = clause.vars;
        std::sort(sorted.begin(), sorted.end());
        std::size_t fixed = 0;
        const unsigned pattern = clause.forbidden_pattern();
        for (int k = 0; k < 3; ++k) {
            if (pattern & (1U << k)) {
                fixed |= std::size_t{1} << clause.vars[k];
            }
        }
        for (std::size_t r = 0; r < free_count; ++r) {
            --counts[insert_three_zeros(r, sorted) | fixed];
        }
    }
    return {n, std::vector<double>(counts.begin(), counts.end())};
}

NormalizedDiagonal normalize(const DiagonalObjective &diag, double divisor) {
    check_diagonal(diag);
    if (!(divisor > 0.0)) {
        throw DomainError("normalization divisor must be positive");
    }
    const double raw_max =
        *std::max_element(diag.values.begin(), diag.values.end());
    if (raw_max > divisor) {
        throw DomainError("objective maximum " + std::to_string(raw_max) +
                          " exceeds the normalization ceiling " +
                          std::to_string(divisor));
    }
    NormalizedDiagonal out;
    out.n = diag.n;
    out.values.resize(diag.values.size());
    std::transform(diag.values.begin(), diag.values.end(), out.values.begin(),
                   [divisor](double v) { return v / divisor; });
    out.c_max = raw_max / divisor;
    out.delta_c = (divisor - raw_max) / divisor;
    return out;
}

ProjectorHamiltonian projector_coefficients(const DiagonalObjective &diag) {
    check_diagonal(diag);
    check_transform_size(diag.n);
    std::vector<double> a = diag.values;
    subset_moebius(std::span<double>(a));
    return ProjectorHamiltonian(diag.n, sparse(a));
}

DiagonalObjective projector_diagonal(const ProjectorHamiltonian &h) {
    check_transform_size(h.num_qubits());
    std::vector<double> a = h.dense();
    subset_zeta(std::span<double>(a));
    return {h.num_qubits(), std::move(a)};
}

WalshHamiltonian walsh_coefficients(const DiagonalObjective &diag) {
    check_diagonal(diag);
    check_transform_size(diag.n);
    std::vector<double> a = diag.values;
    fwht(std::span<double>(a));
    const double scale = std::exp2(-diag.n);
    for (double &x : a) {
        x *= scale;
    }
    return WalshHamiltonian(diag.n, sparse(a));
}

DiagonalObjective walsh_diagonal(const WalshHamiltonian &w) {
    check_transform_size(w.num_qubits());
    std::vector<double> a = w.dense();
    fwht(std::span<double>(a));
    return {w.num_qubits(), std::move(a)};
}

WalshHamiltonian projector_to_walsh(const ProjectorHamiltonian &h) {
    // p_j = 2^{-|j|} sum_{k subset of j} (-1)^{|k|} w_k
    std::map<Mask, double> acc;
    for (const auto &[j, c] : h.terms()) {
        const double weight = c * std::exp2(-popcount(j));
        Mask k = j;
        while (true) {
            acc[k] += (popcount(k) & 1) ? -weight : weight;
            if (k == 0) {
                break;
            }
            k = (k - 1) & j;
        }
    }
    return WalshHamiltonian(h.num_qubits(), std::move(acc));
}

int layer(const ProjectorHamiltonian &h) {
    if (h.empty()) {
        throw DomainError("layer of an empty Hamiltonian is undefined");
    }
    int d = 0;
    for (const auto &[mask, c] : h.terms()) {
        d = std::max(d, popcount(mask));
    }
    return d;
}

NormalizedDiagonal grover_diagonal(int n, std::span<const BasisIndex> marked) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(n) + " out of range");
    }
    if (marked.empty()) {
        throw DomainError("Grover diagonal needs at least one marked state");
    }
    NormalizedDiagonal out;
    out.n = n;
    out.values.assign(dimension(n), 0.0);
    for (const BasisIndex z : marked) {
        if (z >= dimension(n)) {
            throw IndexError("marked index " + std::to_string(z) +
                             " out of range");
        }
        out.values[z] = 1.0;
    }
    out.c_max = 1.0;
    out.delta_c = 0.0;
    return out;
}

} // namespace eqaoa
