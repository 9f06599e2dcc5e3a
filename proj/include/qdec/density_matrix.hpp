#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qdec/complex_matrix.hpp"
#include "qdec/errors.hpp"

namespace qdec {

// Validation tolerance scales with the largest entry so lab-scale operators
// (entries ~1e6 rad/s) are not rejected for ordinary roundoff. For unit-scale
// matrices this reduces to the absolute tolerance.
inline double scaled_tol(double tol, const complex_matrix& m) {
    return tol * std::max(1.0, m.max_abs());
}

// Hermitian operator in angular-frequency units (rad/s, hbar = 1).
class hermitian_operator {
public:
    explicit hermitian_operator(complex_matrix m, double tol = 1e-12) : m_(std::move(m)) {
        if (!m_.all_finite())
            throw invariant_error("hermitian_operator: non-finite entries");
        if (m_.hermiticity_defect() > scaled_tol(tol, m_))
            throw not_hermitian_error("hermitian_operator: matrix is not Hermitian");
    }

    std::size_t dim() const noexcept { return m_.dim(); }
    const complex_matrix& mat() const noexcept { return m_; }
    const complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
    complex_matrix m_;
};

// Unit-trace Hermitian state. Positivity is not enforced here; it is a
// separate diagnostic (see positivity_defect) because the q-propagator is
// not proven completely positive.
class density_matrix {
public:
    explicit density_matrix(complex_matrix m, double tol = 1e-12) : m_(std::move(m)) {
        if (!m_.all_finite())
            throw invariant_error("density_matrix: non-finite entries");
        if (m_.hermiticity_defect() > scaled_tol(tol, m_))
            throw not_hermitian_error("density_matrix: matrix is not Hermitian");
        const complex tr = m_.trace();
        if (std::abs(tr - complex(1.0, 0.0)) > tol)
            throw invariant_error("density_matrix: trace is not 1");
    }

    // Classical mixture in the computational basis. Weights are normalized,
    // so truncated distributions (mass 1 - eps) are accepted.
    static density_matrix diagonal(const std::vector<double>& weights) {
        double sum = 0.0;
        for (double w : weights) {
            if (w < 0.0)
                throw invariant_error("density_matrix::diagonal: negative weight");
            sum += w;
        }
        if (sum <= 0.0)
            throw invariant_error("density_matrix::diagonal: zero total weight");
        complex_matrix m(weights.size());
        for (std::size_t i = 0; i < weights.size(); ++i) m(i, i) = weights[i] / sum;
        return density_matrix(std::move(m));
    }

    static density_matrix pure(const std::vector<complex>& psi) {
        double norm2 = 0.0;
        for (const auto& a : psi) norm2 += std::norm(a);
        if (norm2 <= 0.0)
            throw invariant_error("density_matrix::pure: zero state vector");
        complex_matrix m(psi.size());
        for (std::size_t r = 0; r < psi.size(); ++r)
            for (std::size_t c = 0; c < psi.size(); ++c)
                m(r, c) = psi[r] * std::conj(psi[c]) / norm2;
        return density_matrix(std::move(m));
    }

    std::size_t dim() const noexcept { return m_.dim(); }
    const complex_matrix& mat() const noexcept { return m_; }
    const complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    double purity() const {
        double p = 0.0;
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t c = 0; c < dim(); ++c)
                p += std::norm(m_(r, c));
        return p;
    }

private:
    complex_matrix m_;
};

} // namespace qdec
