#pragma once

#include <cstddef>
#include <vector>

#include "quadralg/linalg.hpp"

namespace quadralg {

// Structure constants of one bilinear product on a based space:
// e_i * e_j = sum_k c[i][j][k] e_k.
class BilinearOp {
public:
    BilinearOp() : dim_(0) {}
    explicit BilinearOp(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    bool isZero() const;
    bool operator==(const BilinearOp& o) const = default;

    BilinearOp operator+(const BilinearOp& o) const;
    BilinearOp operator-(const BilinearOp& o) const;
    BilinearOp operator-() const;

    Vec eval(const Vec& x, const Vec& y) const;

    // Left multiplication by e_s: L(e_s)[k][j] = c[s][j][k].
    Matrix lmat(std::size_t s) const;
    // Right multiplication by e_t: R(e_t)[k][i] = c[i][t][k].
    Matrix rmat(std::size_t t) const;

    // Left/right multiplication by an arbitrary element.
    Matrix lmatOf(const Vec& x) const;
    Matrix rmatOf(const Vec& y) const;

private:
    std::size_t dim_;
    std::vector<Rational> c_;
};

}  // namespace quadralg
