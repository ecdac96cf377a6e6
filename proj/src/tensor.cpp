#include "quadralg/tensor.hpp"

#include <stdexcept>

namespace quadralg {

TensorElement twist(const TensorElement& r) {
    return TensorElement{r.dim, r.coeffs.transpose()};
}

MapOfTensor mapOfTensor(const TensorElement& r) {
    MapOfTensor out;
    out.t = LinearMap{r.dim, r.dim, r.coeffs};
    auto inv = r.coeffs.inverse();
    out.invertible = inv.has_value();
    if (inv) out.omega = BilinearForm{r.dim, *inv};
    return out;
}

Tensor3 Tensor3::zeroCube(std::size_t dim) {
    Tensor3 t;
    t.dim = dim;
    t.unitLeg = 0;
    t.cube.assign(dim * dim * dim, Rational(0));
    return t;
}

bool Tensor3::isZero() const {
    if (unitLeg != 0) return emb.isZero();
    for (const auto& x : cube)
        if (!x.isZero()) return false;
    return true;
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    if (dim != o.dim || unitLeg != 0 || o.unitLeg != 0)
        throw std::invalid_argument("tensor3: + needs full cubes of equal dim");
    Tensor3 r = *this;
    for (std::size_t i = 0; i < cube.size(); ++i) r.cube[i] = cube[i] + o.cube[i];
    return r;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    if (dim != o.dim || unitLeg != 0 || o.unitLeg != 0)
        throw std::invalid_argument("tensor3: - needs full cubes of equal dim");
    Tensor3 r = *this;
    for (std::size_t i = 0; i < cube.size(); ++i) r.cube[i] = cube[i] - o.cube[i];
    return r;
}

Tensor3 Tensor3::operator-() const {
    if (unitLeg != 0) {
        Tensor3 r = *this;
        r.emb = -emb;
        return r;
    }
    Tensor3 r = *this;
    for (std::size_t i = 0; i < cube.size(); ++i) r.cube[i] = -cube[i];
    return r;
}

Tensor3 legEmbed(const TensorElement& r, Placement where) {
    Tensor3 t;
    t.dim = r.dim;
    switch (where) {
        case Placement::Legs12: t.unitLeg = 3; break;
        case Placement::Legs13: t.unitLeg = 2; break;
        case Placement::Legs23: t.unitLeg = 1; break;
    }
    t.emb = r.coeffs;
    return t;
}

namespace {

// Coefficient of an embedded tensor at (leg a -> index ia, leg b -> index ib),
// where {a, b} are its two non-unit legs. `emb` rows follow the smaller leg.
const Rational& embAt(const Tensor3& t, int legA, std::size_t ia, int legB,
                      std::size_t ib) {
    return legA < legB ? t.emb.at(ia, ib) : t.emb.at(ib, ia);
}

}  // namespace

Tensor3 legProduct(const Tensor3& u, const Tensor3& v, const BilinearOp& op) {
    if (u.dim != v.dim || op.dim() != u.dim)
        throw std::invalid_argument("legProduct: dimension mismatch");
    if (u.unitLeg == 0 || v.unitLeg == 0)
        throw std::invalid_argument("legProduct: factor occupies more than two legs");
    if (u.unitLeg == v.unitLeg)
        throw std::invalid_argument("legProduct: factors share their unit leg");

    const int U = u.unitLeg, V = v.unitLeg;
    const int s = 6 - U - V;  // the one leg where both factors are non-unit
    const std::size_t d = u.dim;
    Tensor3 out = Tensor3::zeroCube(d);

    // Contributions: u's entry on the shared leg multiplies v's entry there
    // (u on the left); u's remaining entry lands on leg V, v's on leg U.
    std::size_t idx[3];
    for (std::size_t m = 0; m < d; ++m)           // u's entry on leg V
        for (std::size_t i = 0; i < d; ++i) {     // u's entry on the shared leg
            const Rational& uc = embAt(u, s, i, V, m);
            if (uc.isZero()) continue;
            for (std::size_t n = 0; n < d; ++n)       // v's entry on leg U
                for (std::size_t j = 0; j < d; ++j) { // v's entry on the shared leg
                    const Rational& vc = embAt(v, s, j, U, n);
                    if (vc.isZero()) continue;
                    const Rational f = uc * vc;
                    for (std::size_t k = 0; k < d; ++k) {
                        const Rational& c = op.at(i, j, k);
                        if (c.isZero()) continue;
                        idx[s - 1] = k;
                        idx[U - 1] = n;
                        idx[V - 1] = m;
                        out.at(idx[0], idx[1], idx[2]) += f * c;
                    }
                }
        }
    return out;
}

Tensor3 applyLeg(const Tensor3& t, int leg, const Matrix& m) {
    if (t.unitLeg != 0) throw std::invalid_argument("applyLeg: needs a full cube");
    if (leg < 1 || leg > 3) throw std::invalid_argument("applyLeg: leg out of range");
    if (m.rows() != t.dim || m.cols() != t.dim)
        throw std::invalid_argument("applyLeg: matrix shape mismatch");
    const std::size_t d = t.dim;
    Tensor3 out = Tensor3::zeroCube(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = t.at(i, j, k);
                if (c.isZero()) continue;
                for (std::size_t p = 0; p < d; ++p) {
                    const Rational& mc = leg == 1   ? m.at(p, i)
                                         : leg == 2 ? m.at(p, j)
                                                    : m.at(p, k);
                    if (mc.isZero()) continue;
                    if (leg == 1)
                        out.at(p, j, k) += mc * c;
                    else if (leg == 2)
                        out.at(i, p, k) += mc * c;
                    else
                        out.at(i, j, p) += mc * c;
                }
            }
    return out;
}

}  // namespace quadralg
