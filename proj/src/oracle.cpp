#include "eqaoa/oracle.hpp"

#include "eqaoa/errors.hpp"

#include <algorithm>
#include <cmath>

namespace eqaoa {

namespace {

void check_oracle_size(int n) {
    if (n < 0 || n > kMaxOracleQubits) {
        throw SizeError("dense oracle supports n <= " +
                        std::to_string(kMaxOracleQubits) + ", got " +
                        std::to_string(n));
    }
}

} // namespace

DenseOperator::DenseOperator(int n, std::vector<Complex> entries)
    : n_(n), dim_(std::size_t{1} << n), entries_(std::move(entries)) {
    check_oracle_size(n);
    if (entries_.size() != dim_ * dim_) {
        throw ShapeError("dense operator needs " + std::to_string(dim_ * dim_) +
                         " entries");
    }
}

DenseOperator DenseOperator::identity(int n) {
    check_oracle_size(n);
    const std::size_t d = std::size_t{1} << n;
    std::vector<Complex> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        e[i * d + i] = 1.0;
    }
    return DenseOperator(n, std::move(e));
}

DenseOperator DenseOperator::diagonal(int n, std::span<const Complex> entries) {
    check_oracle_size(n);
    const std::size_t d = std::size_t{1} << n;
    if (entries.size() != d) {
        throw ShapeError("diagonal operator needs " + std::to_string(d) +
                         " entries");
    }
    std::vector<Complex> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        e[i * d + i] = entries[i];
    }
    return DenseOperator(n, std::move(e));
}

DenseOperator DenseOperator::x_rotation(double beta) {
    const Complex c{std::cos(beta), 0.0};
    const Complex s{0.0, -std::sin(beta)};
    return DenseOperator(1, {c, s, s, c});
}

DenseOperator DenseOperator::kron(const DenseOperator &rhs) const {
    const std::size_t d = dim_ * rhs.dim_;
    std::vector<Complex> e(d * d);
    for (std::size_t r1 = 0; r1 < dim_; ++r1) {
        for (std::size_t c1 = 0; c1 < dim_; ++c1) {
            const Complex a = (*this)(r1, c1);
            for (std::size_t r2 = 0; r2 < rhs.dim_; ++r2) {
                for (std::size_t c2 = 0; c2 < rhs.dim_; ++c2) {
                    e[(r1 * rhs.dim_ + r2) * d + (c1 * rhs.dim_ + c2)] =
                        a * rhs(r2, c2);
                }
            }
        }
    }
    return DenseOperator(n_ + rhs.n_, std::move(e));
}

DenseOperator DenseOperator::operator*(const DenseOperator &rhs) const {
    if (rhs.dim_ != dim_) {
        throw ShapeError("operator dimensions differ");
    }
    std::vector<Complex> e(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = (*this)(r, k);
            for (std::size_t c = 0; c < dim_; ++c) {
                e[r * dim_ + c] += a * rhs(k, c);
            }
        }
    }
    return DenseOperator(n_, std::move(e));
}

std::vector<Complex> DenseOperator::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) {
        throw ShapeError("vector length does not match operator");
    }
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double DenseOperator::unitarity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += (*this)(r, k) * std::conj((*this)(c, k));
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

DenseOperator dense_phase_operator(std::span<const double> diag, double gamma) {
    std::vector<Complex> e(diag.size());
    for (std::size_t z = 0; z < diag.size(); ++z) {
        e[z] = std::exp(Complex{0.0, -gamma * diag[z]});
    }
    const int n = std::countr_zero(diag.size());
    return DenseOperator::diagonal(n, e);
}

DenseOperator dense_mixer_operator(int n, double beta) {
    check_oracle_size(n);
    DenseOperator u = DenseOperator::identity(0);
    const DenseOperator x = DenseOperator::x_rotation(beta);
    for (int q = 0; q < n; ++q) {
        u = u.kron(x);
    }
    return u;
}

StateVector dense_evolution(std::span<const double> diag,
                            const Schedule &schedule, int n) {
    check_oracle_size(n);
    if (n < 1) {
        throw SizeError("dense evolution needs n >= 1");
    }
    const std::size_t d = std::size_t{1} << n;
    if (diag.size() != d) {
        throw ShapeError("diagonal length does not match n");
    }
    std::vector<Complex> psi(d, Complex{1.0 / std::sqrt(static_cast<double>(d)), 0.0});
    const DenseOperator mixer = dense_mixer_operator(n, schedule.beta);
    for (int p = 1; p <= schedule.p_max; ++p) {
        psi = dense_phase_operator(diag, schedule.gamma_at(p)).apply(psi);
        psi = mixer.apply(psi);
    }
    return StateVector(n, std::move(psi));
}

MaxResult exhaustive_max(std::span<const double> diag) {
    MaxResult out;
    if (diag.empty()) {
        throw ShapeError("exhaustive_max of an empty diagonal");
    }
    out.value = diag[0];
    for (const double v : diag) {
        out.value = std::max(out.value, v);
    }
    for (std::size_t z = 0; z < diag.size(); ++z) {
        if (diag[z] == out.value) {
            out.argmax.push_back(z);
        }
    }
    return out;
}

int clause_count_check(const SatInstance &instance, BasisIndex z) {
    int count = 0;
    for (const Clause3 &clause : instance.clauses) {
        bool satisfied = false;
        for (int k = 0; k < 3; ++k) {
            const bool bit = (z >> clause.vars[k]) & 1U;
            satisfied = satisfied || (clause.positive[k] ? bit : !bit);
        }
        count += satisfied ? 1 : 0;
    }
    return count;
}

} // namespace eqaoa
