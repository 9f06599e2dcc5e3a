#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qdec/errors.hpp"

namespace qdec {

using complex = std::complex<double>;

// Dense square complex matrix, row-major. Carrier for density operators
// and Hamiltonians on small truncated Hilbert spaces.
class complex_matrix {
public:
    complex_matrix() = default;

    explicit complex_matrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    complex_matrix(std::size_t dim, std::initializer_list<complex> entries)
        : dim_(dim), a_(entries) {
        if (a_.size() != dim * dim)
            throw invariant_error("complex_matrix: entry count does not match dim*dim");
    }

    static complex_matrix identity(std::size_t dim) {
        complex_matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    complex& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const complex& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    complex trace() const {
        complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    complex_matrix adjoint() const {
        complex_matrix m(dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c)
                m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    // max |a_rc - conj(a_cr)|
    double hermiticity_defect() const {
        double m = 0.0;
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = r; c < dim_; ++c)
                m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return m;
    }

    bool all_finite() const {
        for (const auto& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    friend complex_matrix operator+(const complex_matrix& a, const complex_matrix& b) {
        complex_matrix r(a.dim_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }

    friend complex_matrix operator-(const complex_matrix& a, const complex_matrix& b) {
        complex_matrix r(a.dim_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }

    friend complex_matrix operator*(complex s, const complex_matrix& a) {
        complex_matrix r(a.dim_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
        return r;
    }

    friend complex_matrix operator*(const complex_matrix& a, const complex_matrix& b) {
        const std::size_t d = a.dim_;
        complex_matrix r(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                const complex aik = a(i, k);
                if (aik == complex(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < d; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

private:
    std::size_t dim_ = 0;
    std::vector<complex> a_;
};

inline double max_abs_diff(const complex_matrix& a, const complex_matrix& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

inline complex_matrix kron(const complex_matrix& a, const complex_matrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    complex_matrix r(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    r(i * db + k, j * db + l) = a(i, j) * b(k, l);
    return r;
}

inline complex_matrix commutator(const complex_matrix& a, const complex_matrix& b) {
    return a * b - b * a;
}

} // namespace qdec
