#include "quadralg/cube.hpp"

#include <stdexcept>

namespace quadralg {

bool BilinearOp::isZero() const {
    for (const auto& x : c_)
        if (!x.isZero()) return false;
    return true;
}

BilinearOp BilinearOp::operator+(const BilinearOp& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("cube: dim mismatch in +");
    BilinearOp r(dim_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

BilinearOp BilinearOp::operator-(const BilinearOp& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("cube: dim mismatch in -");
    BilinearOp r(dim_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

BilinearOp BilinearOp::operator-() const {
    BilinearOp r(dim_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Vec BilinearOp::eval(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("cube: eval size mismatch");
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].isZero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].isZero()) continue;
            const Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) r[k] += f * at(i, j, k);
        }
    }
    return r;
}

Matrix BilinearOp::lmat(std::size_t s) const {
    Matrix m(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t j = 0; j < dim_; ++j) m.at(k, j) = at(s, j, k);
    return m;
}

Matrix BilinearOp::rmat(std::size_t t) const {
    Matrix m(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t i = 0; i < dim_; ++i) m.at(k, i) = at(i, t, k);
    return m;
}

Matrix BilinearOp::lmatOf(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("cube: lmatOf size mismatch");
    Matrix m(dim_, dim_);
    for (std::size_t s = 0; s < dim_; ++s) {
        if (x[s].isZero()) continue;
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t j = 0; j < dim_; ++j) m.at(k, j) += x[s] * at(s, j, k);
    }
    return m;
}

Matrix BilinearOp::rmatOf(const Vec& y) const {
    if (y.size() != dim_) throw std::invalid_argument("cube: rmatOf size mismatch");
    Matrix m(dim_, dim_);
    for (std::size_t t = 0; t < dim_; ++t) {
        if (y[t].isZero()) continue;
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t i = 0; i < dim_; ++i) m.at(k, i) += y[t] * at(i, t, k);
    }
    return m;
}

}  // namespace quadralg
