#ifndef CHANNELSCOPE_MATRIX_HPP
#define CHANNELSCOPE_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace chs {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions stay tiny (<= ~10),
/// so everything is kept simple and value-semantic.
class CMat {
public:
    CMat() = default;
    explicit CMat(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static CMat identity(std::size_t dim) {
        CMat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMat zero(std::size_t dim) { return CMat(dim); }

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    CMat& operator+=(const CMat& o) {
        check_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        check_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMat& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(cplx s, CMat a) { return a *= s; }

    friend CMat operator*(const CMat& a, const CMat& b) {
        a.check_dim(b);
        const std::size_t n = a.dim_;
        CMat c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    CMat adjoint() const {
        CMat r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMat transpose() const {
        CMat r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Largest |M - M^dagger| entry; 0 for exactly Hermitian input.
    double hermiticity_defect() const {
        double m = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    /// (M + M^dagger)/2
    CMat hermitized() const {
        CMat r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
        return r;
    }

private:
    void check_dim(const CMat& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

inline CMat kron(const CMat& a, const CMat& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    CMat c(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return c;
}

/// |v><w| for column vectors v, w of equal length.
inline CMat outer(const std::vector<cplx>& v, const std::vector<cplx>& w) {
    if (v.size() != w.size()) throw std::invalid_argument("outer: length mismatch");
    CMat m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

inline CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

}  // namespace chs

#endif
