#include "quadralg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace quadralg {

Vec vecZero(std::size_t n) { return Vec(n); }

Vec vecAdd(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vecSub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vecScale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vecIsZero(const Vec& a) {
    for (const auto& x : a)
        if (!x.isZero()) return false;
    return true;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool Matrix::isZero() const {
    for (const auto& x : a_)
        if (!x.isZero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix: shape mismatch in +");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix: shape mismatch in -");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: shape mismatch in *");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix: apply size mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Rational Matrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix: det of non-square");
    const std::size_t n = rows_;
    if (n == 0) return Rational(1);

    // Clear denominators row by row; det = integer det / product of scalers.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class d = at(i, j).den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = at(i, j).num() * (l / at(i, j).den());
        scale *= l;
    }

    // Bareiss fraction-free elimination; every division below is exact.
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    mpq_class q(sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]), scale);
    q.canonicalize();
    return Rational(q);
}

namespace {

// Gauss-Jordan over rationals. Returns pivot column per row (npos-terminated)
// after reducing `m` in place to RREF.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).isZero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(row, j));
        const Rational inv = m.at(row, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).isZero()) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return rref(m).size();
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix: inverse of non-square");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("matrix: solve size mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
    Vec x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

LinearMap dualMap(const LinearMap& f) {
    return LinearMap{f.dstDim, f.srcDim, f.m.transpose()};
}

std::vector<Matrix> dualRep(const std::vector<Matrix>& rep) {
    std::vector<Matrix> out;
    out.reserve(rep.size());
    for (const auto& m : rep) out.push_back(m.transpose());
    return out;
}

Rational BilinearForm::eval(const Vec& u, const Vec& v) const {
    if (u.size() != dim || v.size() != dim)
        throw std::invalid_argument("form: eval size mismatch");
    Rational s;
    for (std::size_t i = 0; i < dim; ++i) {
        if (u[i].isZero()) continue;
        for (std::size_t j = 0; j < dim; ++j) s += u[i] * gram.at(i, j) * v[j];
    }
    return s;
}

bool isIsotropic(const BilinearForm& form, const std::vector<Vec>& vectors) {
    for (const auto& u : vectors)
        for (const auto& v : vectors)
            if (!form.eval(u, v).isZero()) return false;
    return true;
}

}  // namespace quadralg
