#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quadralg/rational.hpp"

namespace quadralg {

using Vec = std::vector<Rational>;

Vec vecZero(std::size_t n);
Vec vecAdd(const Vec& a, const Vec& b);
Vec vecSub(const Vec& a, const Vec& b);
Vec vecScale(const Rational& c, const Vec& a);
bool vecIsZero(const Vec& a);

// Dense row-major matrix over exact rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool isZero() const;
    Matrix transpose() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    friend Matrix operator*(const Rational& c, const Matrix& m);
    bool operator==(const Matrix& o) const = default;

    Vec apply(const Vec& v) const;  // matrix * column vector

    // Exact determinant, square matrices only. Denominators are cleared per
    // row, then the integer part runs fraction-free (Bareiss), so no rational
    // arithmetic happens inside the elimination.
    Rational det() const;

    std::size_t rank() const;
    std::optional<Matrix> inverse() const;

    // One solution of (*this) x = b, or nullopt if the system is
    // inconsistent. Free variables are pinned to zero.
    std::optional<Vec> solve(const Vec& b) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Linear map between based spaces; column j of `m` is the image of the j-th
// source basis vector.
struct LinearMap {
    std::size_t srcDim = 0;
    std::size_t dstDim = 0;
    Matrix m;

    Vec apply(const Vec& v) const { return m.apply(v); }
};

// Transpose: the induced map between dual spaces, in dual bases.
LinearMap dualMap(const LinearMap& f);

// Entry-wise transpose of a family of square matrices (a representation by
// left/right multiplications turns into its dual action).
std::vector<Matrix> dualRep(const std::vector<Matrix>& rep);

struct BilinearForm {
    std::size_t dim = 0;
    Matrix gram;

    Rational eval(const Vec& u, const Vec& v) const;
    bool nondegenerate() const { return !gram.det().isZero(); }
    bool symmetric() const { return gram == gram.transpose(); }
    bool skew() const { return gram == -gram.transpose(); }
};

// True iff the span of `vectors` pairs to zero with itself under `form`.
// Checked on all ordered pairs of the spanning set; bilinearity carries the
// conclusion to the whole span.
bool isIsotropic(const BilinearForm& form, const std::vector<Vec>& vectors);

}  // namespace quadralg
