#include "quadralg/bialgebra.hpp"

#include <stdexcept>

namespace quadralg {

namespace {

Vec basis(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = Rational(1);
    return v;
}

Vec flat(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

Vec flatCube(const Tensor3& t) { return t.cube; }

void requireMat(Report& rep, const std::string& tag, std::vector<std::size_t> index,
                const Matrix& lhs, const Matrix& rhs) {
    Matrix d = lhs - rhs;
    if (!d.isZero()) rep.flag(tag, std::move(index), flat(d));
}

// Value of a co-operation at an arbitrary element.
Matrix comultOf(const std::vector<Matrix>& fam, const Vec& x) {
    Matrix m(x.size(), x.size());
    for (std::size_t s = 0; s < x.size(); ++s)
        if (!x[s].isZero()) m = m + x[s] * fam[s];
    return m;
}

// (gamma (x) 1) applied to the 2-tensor with coefficient matrix m.
Tensor3 applyFirst(const std::vector<const std::vector<Matrix>*>& fams,
                   const Matrix& m) {
    const std::size_t n = m.rows();
    Tensor3 out = Tensor3::zeroCube(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j).isZero()) continue;
            for (const auto* fam : fams) {
                const Matrix& g = (*fam)[i];
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        if (!g.at(p, q).isZero())
                            out.at(p, q, j) += m.at(i, j) * g.at(p, q);
            }
        }
    return out;
}

// (1 (x) gamma) applied to the same.
Tensor3 applySecond(const std::vector<const std::vector<Matrix>*>& fams,
                    const Matrix& m) {
    const std::size_t n = m.rows();
    Tensor3 out = Tensor3::zeroCube(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j).isZero()) continue;
            for (const auto* fam : fams) {
                const Matrix& g = (*fam)[j];
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        if (!g.at(p, q).isZero())
                            out.at(i, p, q) += m.at(i, j) * g.at(p, q);
            }
        }
    return out;
}

}  // namespace

QuadriAlgebra dualQuadriOfCoalgebra(const QuadriCoalgebra& c) {
    const std::size_t n = c.dim;
    QuadriAlgebra q;
    q.dim = n;
    q.nw = BilinearOp(n);
    q.ne = BilinearOp(n);
    q.sw = BilinearOp(n);
    q.se = BilinearOp(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                q.nw.at(i, j, k) = c.alpha[k].at(i, j);
                q.ne.at(i, j, k) = c.beta[k].at(i, j);
                q.sw.at(i, j, k) = c.alphaT[k].at(i, j);
                q.se.at(i, j, k) = c.betaT[k].at(i, j);
            }
    return q;
}

QuadriCoalgebra coalgebraOfDualQuadri(const QuadriAlgebra& q) {
    const std::size_t n = q.dim;
    QuadriCoalgebra c;
    c.dim = n;
    c.alpha.assign(n, Matrix(n, n));
    c.beta.assign(n, Matrix(n, n));
    c.alphaT.assign(n, Matrix(n, n));
    c.betaT.assign(n, Matrix(n, n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                c.alpha[k].at(i, j) = q.nw.at(i, j, k);
                c.beta[k].at(i, j) = q.ne.at(i, j, k);
                c.alphaT[k].at(i, j) = q.sw.at(i, j, k);
                c.betaT[k].at(i, j) = q.se.at(i, j, k);
            }
    return c;
}

Report checkQuadriCoalgebra(const QuadriCoalgebra& c) {
    Report rep;
    const std::size_t n = c.dim;
    const auto* a = &c.alpha;
    const auto* b = &c.beta;
    const auto* at = &c.alphaT;
    const auto* bt = &c.betaT;
    for (std::size_t s = 0; s < n; ++s) {
        const Matrix& A = c.alpha[s];
        const Matrix& B = c.beta[s];
        const Matrix& At = c.alphaT[s];
        const Matrix& Bt = c.betaT[s];
        const Tensor3 r1 = applyFirst({a}, A) - applySecond({a, b, at, bt}, A);
        const Tensor3 r2 = applyFirst({b}, A) - applySecond({a, at}, B);
        const Tensor3 r3 = applyFirst({a, b}, B) - applySecond({b, bt}, B);
        const Tensor3 r4 = applyFirst({at}, A) - applySecond({a, b}, At);
        const Tensor3 r5 = applyFirst({bt}, A) - applySecond({a}, Bt);
        const Tensor3 r6 = applyFirst({at, bt}, B) - applySecond({b}, Bt);
        const Tensor3 r7 = applyFirst({a, at}, At) - applySecond({at, bt}, At);
        const Tensor3 r8 = applyFirst({b, bt}, At) - applySecond({at}, Bt);
        const Tensor3 r9 = applyFirst({a, b, at, bt}, Bt) - applySecond({bt}, Bt);
        const Tensor3* rs[9] = {&r1, &r2, &r3, &r4, &r5, &r6, &r7, &r8, &r9};
        for (int m = 0; m < 9; ++m)
            if (!rs[m]->isZero())
                rep.flag("coalg.r" + std::to_string(m + 1), {s}, flatCube(*rs[m]));
    }
    return rep;
}

Report checkBialgebraCompat(const QuadriBialgebra& qb) {
    Report rep;
    const QuadriAlgebra& q = qb.algebra;
    const QuadriCoalgebra& c = qb.coalgebra;
    if (q.dim != c.dim) throw std::invalid_argument("bialgebra: dims disagree");
    const std::size_t n = q.dim;
    const DerivedOps ops = derivedOps(q);

    auto co = [&](const std::vector<Matrix>& fam, const Vec& v) {
        return comultOf(fam, v);
    };

    for (std::size_t i = 0; i < n; ++i) {
        const Vec xi = basis(n, i);
        const Matrix Ai = c.alpha[i], Bi = c.beta[i], Ati = c.alphaT[i],
                     Bti = c.betaT[i];
        const Matrix Lse_i = q.se.lmat(i), Lne_i = q.ne.lmat(i),
                     Lsw_i = q.sw.lmat(i), Lwedge_i = ops.wedge.lmat(i),
                     Lvee_i = ops.vee.lmat(i), Lsucc_i = ops.succ.lmat(i),
                     Lprec_i = ops.prec.lmat(i);
        const Matrix Rnw_i = q.nw.rmat(i), Rsw_i = q.sw.rmat(i),
                     Rprec_i = ops.prec.rmat(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec yj = basis(n, j);
            const Matrix Aj = c.alpha[j], Bj = c.beta[j], Atj = c.alphaT[j],
                         Btj = c.betaT[j];
            const Matrix Rwedge_j = ops.wedge.rmat(j), Rprec_j = ops.prec.rmat(j),
                         Rnw_j = q.nw.rmat(j), Rsw_j = q.sw.rmat(j),
                         Rvee_j = ops.vee.rmat(j), Rsucc_j = ops.succ.rmat(j),
                         Rne_j = q.ne.rmat(j);
            const Matrix Lsucc_j = ops.succ.lmat(j), Lne_j = q.ne.lmat(j),
                         Lse_j = q.se.lmat(j), Lsw_j = q.sw.lmat(j),
                         Lvee_j = ops.vee.lmat(j), Lprec_j = ops.prec.lmat(j);

            const Vec star_ij = ops.star.eval(xi, yj);
            const Vec wedge_ij = ops.wedge.eval(xi, yj);
            const Vec vee_ij = ops.vee.eval(xi, yj);
            const Vec succ_ij = ops.succ.eval(xi, yj);
            const Vec prec_ij = ops.prec.eval(xi, yj);
            const Vec sw_ij = q.sw.eval(xi, yj);
            const Vec ne_ij = q.ne.eval(xi, yj);

            requireMat(rep, "compat.c1", {i, j}, co(c.alphaT, star_ij),
                       Rwedge_j * Ati + Atj * Lsucc_i.transpose());
            requireMat(rep, "compat.c2", {i, j}, co(c.beta, star_ij),
                       Rprec_j * Bi + Bj * Lvee_i.transpose());
            requireMat(rep, "compat.c3", {i, j},
                       co(c.alpha, wedge_ij) + co(c.alphaT, wedge_ij),
                       Rwedge_j * (Ai + Ati) + Atj * Lne_i.transpose());
            requireMat(rep, "compat.c4", {i, j},
                       co(c.beta, wedge_ij) + co(c.betaT, wedge_ij),
                       Rnw_j * (Bi + Bti) + Btj * Lwedge_i.transpose());
            requireMat(rep, "compat.c5", {i, j},
                       co(c.beta, vee_ij) + co(c.betaT, vee_ij),
                       (Bj + Btj) * Lvee_i.transpose() + Rsw_j * Bi);
            requireMat(rep, "compat.c6", {i, j},
                       co(c.alpha, vee_ij) + co(c.alphaT, vee_ij),
                       (Aj + Atj) * Lse_i.transpose() + Rvee_j * Ai);
            requireMat(rep, "compat.c7", {i, j},
                       co(c.alpha, succ_ij) + co(c.beta, succ_ij),
                       (Aj + Bj) * Lse_i.transpose() + Rsucc_j * Ai);
            requireMat(rep, "compat.c8", {i, j},
                       co(c.alphaT, succ_ij) + co(c.betaT, succ_ij),
                       (Atj + Btj) * Lsucc_i.transpose() + Rne_j * Ati);
            requireMat(rep, "compat.c9", {i, j},
                       co(c.alpha, prec_ij) + co(c.beta, prec_ij),
                       Rprec_j * (Ai + Bi) + Bj * Lsw_i.transpose());
            requireMat(rep, "compat.c10", {i, j},
                       co(c.alphaT, prec_ij) + co(c.betaT, prec_ij),
                       Rnw_j * (Ati + Bti) + Btj * Lprec_i.transpose());
            requireMat(rep, "compat.c11", {i, j},
                       Bi.transpose() * Lsucc_j.transpose() -
                           Rwedge_j * Bi.transpose(),
                       Atj * Rprec_i.transpose() - Lvee_i * Atj);
            requireMat(rep, "compat.c12", {i, j},
                       (Aj + Atj) * Rnw_i.transpose() - Lvee_i * (Aj + Atj),
                       Bi.transpose() * Lne_j.transpose() -
                           Rvee_j * Bti.transpose());
            requireMat(rep, "compat.c13", {i, j},
                       Rwedge_j * (Bi.transpose() + Bti.transpose()) -
                           (Bi.transpose() + Bti.transpose()) * Lse_j.transpose(),
                       Lwedge_i * Aj - Atj * Rsw_i.transpose());
            requireMat(rep, "compat.c14", {i, j},
                       (Aj.transpose() + Bj.transpose()) * Lsucc_i.transpose() -
                           Rnw_i * (Aj.transpose() + Bj.transpose()),
                       Bti * Rsucc_j.transpose() - Lsw_j * Ati);
            requireMat(rep, "compat.c15", {i, j},
                       (Atj.transpose() + Btj.transpose()) * Lse_i.transpose() -
                           Rprec_i * (Atj.transpose() + Btj.transpose()),
                       Bi * Rne_j.transpose() - Lprec_j * Ai);
            requireMat(rep, "compat.c16", {i, j},
                       co(c.alpha, sw_ij) + co(c.alphaT, sw_ij) +
                           co(c.beta, sw_ij) + co(c.betaT, sw_ij),
                       Rsw_j * (Ai + Bi) + (Bj + Btj) * Lsw_i.transpose());
            requireMat(rep, "compat.c17", {i, j},
                       co(c.alpha, ne_ij) + co(c.beta, ne_ij) +
                           co(c.alphaT, ne_ij) + co(c.betaT, ne_ij),
                       Rne_j * (Ai + Ati) + (Atj + Btj) * Lne_i.transpose());
            requireMat(rep, "compat.c18", {i, j},
                       Lsw_j * (Ai + Ati) +
                           (Aj.transpose() + Bj.transpose()) * Lne_i.transpose(),
                       Rsw_i * (Atj.transpose() + Btj.transpose()) +
                           (Bi + Bti) * Rne_j.transpose());
        }
    }
    return rep;
}

QuadriCoalgebra coboundaryComults(const QuadriAlgebra& q, const TensorElement& r) {
    if (r.dim != q.dim) throw std::invalid_argument("coboundary: tensor dim mismatch");
    const std::size_t n = q.dim;
    const DerivedOps ops = derivedOps(q);
    const Matrix& rho = r.coeffs;
    QuadriCoalgebra c;
    c.dim = n;
    for (std::size_t s = 0; s < n; ++s) {
        c.alpha.push_back(-(rho * q.se.lmat(s).transpose()) + ops.star.rmat(s) * rho);
        c.beta.push_back(rho * ops.vee.lmat(s).transpose() - ops.prec.rmat(s) * rho);
        c.alphaT.push_back(rho * ops.succ.lmat(s).transpose() -
                           ops.wedge.rmat(s) * rho);
        c.betaT.push_back(-(rho * ops.star.lmat(s).transpose()) + q.nw.rmat(s) * rho);
    }
    return c;
}

QTensors qTensors(const QuadriAlgebra& q, const TensorElement& r) {
    if (r.dim != q.dim) throw std::invalid_argument("q tensors: dim mismatch");
    const DerivedOps ops = derivedOps(q);
    const Tensor3 r12 = legEmbed(r, Placement::Legs12);
    const Tensor3 r13 = legEmbed(r, Placement::Legs13);
    const Tensor3 r23 = legEmbed(r, Placement::Legs23);
    QTensors t;
    t.q11 = legProduct(r23, r12, ops.wedge) - legProduct(r13, r23, ops.succ) +
            legProduct(r12, r13, q.sw);
    t.q12 = legProduct(r23, r12, ops.vee) - legProduct(r12, r13, ops.prec) +
            legProduct(r13, r23, q.ne);
    t.q21 = legProduct(r12, r13, ops.wedge) - legProduct(r23, r12, ops.succ) -
            legProduct(r13, r23, q.sw);
    t.q22 = legProduct(r12, r13, ops.vee) + legProduct(r13, r23, ops.prec) +
            legProduct(r23, r12, q.ne);
    t.q31 = legProduct(r13, r23, ops.wedge) + legProduct(r12, r13, ops.succ) +
            legProduct(r23, r12, q.sw);
    t.q32 = legProduct(r13, r23, ops.vee) - legProduct(r23, r12, ops.prec) -
            legProduct(r12, r13, q.ne);
    return t;
}

Report checkCoboundaryCoalgebra(const QuadriAlgebra& q, const TensorElement& r) {
    Report rep;
    const QTensors t = qTensors(q, r);
    const DerivedOps ops = derivedOps(q);
    const Tensor3 d1 = t.q12 - t.q31;
    const Tensor3 d5 = t.q21 + t.q32;
    const Tensor3 d9 = t.q31 + t.q32;
    for (std::size_t s = 0; s < q.dim; ++s) {
        const Matrix Lse = q.se.lmat(s), Lvee = ops.vee.lmat(s),
                     Lsucc = ops.succ.lmat(s), Lstar = ops.star.lmat(s);
        const Matrix Rstar = ops.star.rmat(s), Rprec = ops.prec.rmat(s),
                     Rwedge = ops.wedge.rmat(s), Rnw = q.nw.rmat(s);
        const Tensor3 c1 = applyLeg(d1, 3, Lse) - applyLeg(d1, 1, Rstar);
        const Tensor3 c2 = applyLeg(t.q12, 3, Lse) - applyLeg(t.q12, 1, Rprec);
        const Tensor3 c3 = applyLeg(t.q31, 3, Lvee) - applyLeg(t.q31, 1, Rprec);
        const Tensor3 c4 = applyLeg(t.q21, 3, Lse) - applyLeg(t.q21, 1, Rwedge);
        const Tensor3 c5 = applyLeg(d5, 3, Lse) - applyLeg(d5, 1, Rnw);
        const Tensor3 c6 = applyLeg(t.q32, 3, Lvee) - applyLeg(t.q32, 1, Rnw);
        const Tensor3 c7 = applyLeg(t.q22, 3, Lsucc) - applyLeg(t.q22, 1, Rwedge);
        const Tensor3 c8 = applyLeg(t.q11, 3, Lsucc) - applyLeg(t.q11, 1, Rnw);
        const Tensor3 c9 = applyLeg(d9, 3, Lstar) - applyLeg(d9, 1, Rnw);
        const Tensor3* cs[9] = {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8, &c9};
        for (int m = 0; m < 9; ++m)
            if (!cs[m]->isZero())
                rep.flag("cobound.c" + std::to_string(m + 1), {s}, flatCube(*cs[m]));
    }
    return rep;
}

Report checkQEquation(const QuadriAlgebra& q, const TensorElement& r) {
    Report rep;
    const QTensors t = qTensors(q, r);
    if (!t.q11.isZero()) rep.flag("qeq.q11", {}, flatCube(t.q11));
    if (!t.q12.isZero()) rep.flag("qeq.q12", {}, flatCube(t.q12));
    rep.notes.push_back(r.skew() ? "tensor is skew" : "tensor is not skew");
    return rep;
}

TensorElement canonicalDoubleTensor(std::size_t n) {
    TensorElement r;
    r.dim = 2 * n;
    r.coeffs = Matrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs.at(i, n + i) = Rational(1);
    return r;
}

TensorElement canonicalDoubleTensorTilde(std::size_t n) {
    TensorElement r;
    r.dim = 2 * n;
    r.coeffs = Matrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs.at(n + i, i) = Rational(1);
    return r;
}

QuadriCoalgebra negateCoalgebra(const QuadriCoalgebra& c) {
    QuadriCoalgebra out;
    out.dim = c.dim;
    for (std::size_t s = 0; s < c.dim; ++s) {
        out.alpha.push_back(-c.alpha[s]);
        out.beta.push_back(-c.beta[s]);
        out.alphaT.push_back(-c.alphaT[s]);
        out.betaT.push_back(-c.betaT[s]);
    }
    return out;
}

namespace {

// Top-left or bottom-right block embedding of an n-square matrix into 2n.
Matrix embedBlock(const Matrix& m, std::size_t n, bool second) {
    Matrix out(2 * n, 2 * n);
    const std::size_t off = second ? n : 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(off + i, off + j) = m.at(i, j);
    return out;
}

struct CoalgSlots {
    const std::vector<Matrix> QuadriCoalgebra::*fam;
    const BilinearOp QuadriAlgebra::*op;
    const char* name;
};

constexpr CoalgSlots kCoalgSlots[4] = {
    {&QuadriCoalgebra::alpha, &QuadriAlgebra::nw, "alpha"},
    {&QuadriCoalgebra::beta, &QuadriAlgebra::ne, "beta"},
    {&QuadriCoalgebra::alphaT, &QuadriAlgebra::sw, "alpha_t"},
    {&QuadriCoalgebra::betaT, &QuadriAlgebra::se, "beta_t"},
};

void checkInclusionProducts(Report& rep, const std::string& who,
                            const QuadriAlgebra& sub, const QuadriAlgebra& big,
                            std::size_t off) {
    const std::size_t n = sub.dim;
    for (const CoalgSlots& s : kCoalgSlots) {
        const BilinearOp& cs = sub.*(s.op);
        const BilinearOp& cb = big.*(s.op);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec want(big.dim);
                for (std::size_t k = 0; k < n; ++k) want[off + k] = cs.at(i, j, k);
                Vec got(big.dim);
                for (std::size_t k = 0; k < big.dim; ++k)
                    got[k] = cb.at(off + i, off + j, k);
                rep.require(who + ".op_" + s.name, {i, j}, got, want);
            }
    }
}

}  // namespace

DrinfeldDouble drinfeldDouble(const QuadriBialgebra& qb) {
    {
        Report pre;
        pre.absorb(checkQuadri(qb.algebra), "input.algebra");
        pre.absorb(checkQuadriCoalgebra(qb.coalgebra), "input.coalgebra");
        pre.absorb(checkBialgebraCompat(qb), "input.compat");
        if (!pre.passed())
            throw ReportError("double: input bialgebra is invalid", pre);
    }
    const std::size_t n = qb.algebra.dim;
    const QuadriAlgebra dual = dualQuadriOfCoalgebra(qb.coalgebra);

    QuadriMatchedPairData mp;
    mp.a = qb.algebra;
    mp.b = dual;
    mp.bOnA = dualQuadriBimodule(regularQuadriBimodule(dual));
    mp.aOnB = dualQuadriBimodule(regularQuadriBimodule(qb.algebra));
    QuadriBowtieResult bow = buildQuadriBowtie(mp);

    DrinfeldDouble out;
    out.halfDim = n;
    out.algebra = std::move(bow.algebra);
    out.coalgebra = coboundaryComults(out.algebra, canonicalDoubleTensor(n));
    out.report.absorb(bow.report, "double");
    out.report.absorb(checkQuadriCoalgebra(out.coalgebra), "double.coalgebra");
    out.report.absorb(checkBialgebraCompat({out.algebra, out.coalgebra}),
                      "double.compat");

    // First-half inclusion: products carry over as-is, co-operations match
    // the negated originals.
    checkInclusionProducts(out.report, "i1", qb.algebra, out.algebra, 0);
    for (const CoalgSlots& s : kCoalgSlots)
        for (std::size_t i = 0; i < n; ++i)
            requireMat(out.report, std::string("i1.co_") + s.name, {i},
                       (out.coalgebra.*(s.fam))[i],
                       embedBlock(-(qb.coalgebra.*(s.fam))[i], n, false));

    // Second-half inclusion from the dual bialgebra (positive co-operations).
    checkInclusionProducts(out.report, "i2", dual, out.algebra, n);
    const QuadriCoalgebra dualCo = coalgebraOfDualQuadri(qb.algebra);
    for (const CoalgSlots& s : kCoalgSlots)
        for (std::size_t u = 0; u < n; ++u)
            requireMat(out.report, std::string("i2.co_") + s.name, {u},
                       (out.coalgebra.*(s.fam))[n + u],
                       embedBlock((dualCo.*(s.fam))[u], n, true));
    return out;
}

QuadriAlgebra doubleFromR(const QuadriAlgebra& q, const TensorElement& r) {
    if (r.dim != q.dim) throw std::invalid_argument("double: tensor dim mismatch");
    if (!r.skew()) {
        Report rep;
        rep.flag("skew", {}, flat(r.coeffs + r.coeffs.transpose()));
        throw ReportError("double: tensor must be skew", rep);
    }
    {
        Report qe = checkQEquation(q, r);
        if (!qe.passed())
            throw ReportError("double: tensor fails the defining equation", qe);
    }
    const std::size_t n = q.dim;
    const DerivedOps ops = derivedOps(q);
    const Matrix& rho = r.coeffs;

    // Per slot: the two dualized multiplication maps that drive every mixed
    // term, with their signs.
    struct SlotMaps {
        BilinearOp QuadriAlgebra::*op;
        const BilinearOp* rSrc;
        int rSign;
        const BilinearOp* lSrc;
        int lSign;
    };
    const SlotMaps slots[4] = {
        {&QuadriAlgebra::nw, &q.se, +1, &ops.star, +1},
        {&QuadriAlgebra::ne, &ops.vee, -1, &ops.prec, -1},
        {&QuadriAlgebra::sw, &ops.succ, -1, &ops.wedge, -1},
        {&QuadriAlgebra::se, &ops.star, +1, &q.nw, +1},
    };

    QuadriAlgebra out;
    out.dim = 2 * n;
    for (const SlotMaps& s : slots) {
        BilinearOp cube(2 * n);
        const BilinearOp& base = q.*(s.op);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) cube.at(i, j, k) = base.at(i, j, k);

        auto rHat = [&](const Vec& x) {
            Matrix m = s.rSrc->rmatOf(x).transpose();
            return s.rSign > 0 ? m : -m;
        };
        auto lHat = [&](const Vec& x) {
            Matrix m = s.lSrc->lmatOf(x).transpose();
            return s.lSign > 0 ? m : -m;
        };

        for (std::size_t u = 0; u < n; ++u) {
            Vec au = basis(n, u);
            Vec Tau = rho.apply(au);
            for (std::size_t v = 0; v < n; ++v) {
                // dual x dual: rHat(T a) b + lHat(T b) a
                Vec bv = basis(n, v);
                Vec Tbv = rho.apply(bv);
                Vec w = vecAdd(rHat(Tau).apply(bv), lHat(Tbv).apply(au));
                for (std::size_t k = 0; k < n; ++k)
                    cube.at(n + u, n + v, n + k) = w[k];
            }
            for (std::size_t i = 0; i < n; ++i) {
                Vec xi = basis(n, i);
                // dual x primal: T(a) o x - T(lHat(x) a) in A, lHat(x) a dual
                Vec la = lHat(xi).apply(au);
                Vec aPart = vecSub(base.eval(Tau, xi), rho.apply(la));
                for (std::size_t k = 0; k < n; ++k) {
                    cube.at(n + u, i, k) = aPart[k];
                    cube.at(n + u, i, n + k) = la[k];
                }
                // primal x dual: x o T(a) - T(rHat(x) a) in A, rHat(x) a dual
                Vec ra = rHat(xi).apply(au);
                Vec aPart2 = vecSub(base.eval(xi, Tau), rho.apply(ra));
                for (std::size_t k = 0; k < n; ++k) {
                    cube.at(i, n + u, k) = aPart2[k];
                    cube.at(i, n + u, n + k) = ra[k];
                }
            }
        }
        out.*(s.op) = std::move(cube);
    }
    return out;
}

QuadriBialgebra dualBialgebra(const QuadriBialgebra& qb) {
    QuadriBialgebra out;
    out.algebra = dualQuadriOfCoalgebra(qb.coalgebra);
    out.coalgebra = coalgebraOfDualQuadri(qb.algebra);
    return out;
}

GraphLagrangianResult graphLagrangianCheck(const QuadriAlgebra& q, const LinearMap& t) {
    const std::size_t n = q.dim;
    if (t.srcDim != n || t.dstDim != n)
        throw std::invalid_argument("graph check: map shape mismatch");
    GraphLagrangianResult res;
    const Matrix& rho = t.m;

    const QuadriAlgebra semi =
        semidirectSum(q, dualQuadriBimodule(regularQuadriBimodule(q)));

    std::vector<Vec> graph;
    for (std::size_t u = 0; u < n; ++u) {
        Vec g(2 * n);
        for (std::size_t i = 0; i < n; ++i) g[i] = rho.at(i, u);
        g[n + u] = Rational(1);
        graph.push_back(g);
    }

    const BilinearForm bs = standardPairingForm(n);
    res.isotropic = true;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const Rational p = bs.eval(graph[u], graph[v]);
            if (!p.isZero()) {
                res.isotropic = false;
                res.report.flag("graph.isotropy", {u, v}, {p});
            }
        }

    res.closed = true;
    const struct {
        const char* name;
        const BilinearOp* op;
    } semiOps[4] = {{"nw", &semi.nw}, {"ne", &semi.ne}, {"sw", &semi.sw},
                    {"se", &semi.se}};
    for (const auto& so : semiOps)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const Vec w = so.op->eval(graph[u], graph[v]);
                Vec wA(n), wDual(n);
                for (std::size_t k = 0; k < n; ++k) {
                    wA[k] = w[k];
                    wDual[k] = w[n + k];
                }
                const Vec residual = vecSub(wA, rho.apply(wDual));
                if (!vecIsZero(residual)) {
                    res.closed = false;
                    res.report.flag(std::string("graph.closure.") + so.name, {u, v},
                                    residual);
                }
            }

    TensorElement r{n, rho};
    res.skew = r.skew();
    Report qe = checkQEquation(q, r);
    res.qSolution = qe.passed();
    res.report.absorb(qe, "graph");
    if (!res.skew) res.report.flag("graph.skew", {}, flat(rho + rho.transpose()));

    if (res.skew && res.qSolution) {
        const QuadriAlgebra dd = doubleFromR(q, r);
        Matrix theta = Matrix::identity(2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t u = 0; u < n; ++u) theta.at(i, n + u) = rho.at(i, u);
        LinearMap thetaMap{2 * n, 2 * n, theta};
        res.report.absorb(checkHomomorphism(thetaMap, dd, semi), "graph.theta");
        if (!theta.inverse())
            res.report.flag("graph.theta.invertible", {}, {Rational(1)});
    }
    return res;
}

Report tRMorphismChecks(const QuadriAlgebra& q, const TensorElement& r) {
    const std::size_t n = q.dim;
    {
        Report pre;
        const QTensors t = qTensors(q, r);
        const struct {
            const char* name;
            const Tensor3* t;
        } all[6] = {{"qt.q11", &t.q11}, {"qt.q12", &t.q12}, {"qt.q21", &t.q21},
                    {"qt.q22", &t.q22}, {"qt.q31", &t.q31}, {"qt.q32", &t.q32}};
        for (const auto& e : all)
            if (!e.t->isZero()) pre.flag(e.name, {}, flatCube(*e.t));
        if (!pre.passed())
            throw ReportError("morphism checks: obstruction tensors do not vanish",
                              pre);
    }
    Report rep;
    const Matrix& rho = r.coeffs;
    const QuadriCoalgebra co = coboundaryComults(q, r);
    const QuadriBialgebra qb{q, co};
    const QuadriBialgebra dual = dualBialgebra(qb);

    // Part one: the map of r, dual bialgebra -> (A, ops, negated co-ops).
    {
        LinearMap tr{n, n, rho};
        rep.absorb(checkHomomorphism(tr, dual.algebra, q), "t_r");
        const QuadriCoalgebra neg = negateCoalgebra(co);
        for (const CoalgSlots& s : kCoalgSlots)
            for (std::size_t u = 0; u < n; ++u) {
                const Matrix lhs = rho * (dual.coalgebra.*(s.fam))[u] * rho.transpose();
                Matrix rhs(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    if (!rho.at(i, u).isZero())
                        rhs = rhs + rho.at(i, u) * (neg.*(s.fam))[i];
                requireMat(rep, std::string("t_r.co_") + s.name, {u}, lhs, rhs);
            }
    }

    // Part two needs skew r: (x, a) -> x + T_r(a) out of the tilde-twisted
    // double into the bialgebra itself.
    if (!r.skew()) {
        rep.notes.push_back("tensor not skew: fold-map check skipped");
        return rep;
    }
    QuadriMatchedPairData mp;
    mp.a = q;
    mp.b = dual.algebra;
    mp.bOnA = dualQuadriBimodule(regularQuadriBimodule(dual.algebra));
    mp.aOnB = dualQuadriBimodule(regularQuadriBimodule(q));
    const QuadriBowtieResult bow = buildQuadriBowtie(mp);
    const QuadriCoalgebra tildeCo =
        coboundaryComults(bow.algebra, canonicalDoubleTensorTilde(n));

    Matrix fold(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        fold.at(i, i) = Rational(1);
        for (std::size_t u = 0; u < n; ++u) fold.at(i, n + u) = rho.at(i, u);
    }
    LinearMap foldMap{2 * n, n, fold};
    rep.absorb(checkHomomorphism(foldMap, bow.algebra, q), "fold");
    for (const CoalgSlots& s : kCoalgSlots)
        for (std::size_t v = 0; v < 2 * n; ++v) {
            const Matrix lhs = fold * (tildeCo.*(s.fam))[v] * fold.transpose();
            Matrix rhs(n, n);
            for (std::size_t i = 0; i < n; ++i)
                if (!fold.at(i, v).isZero())
                    rhs = rhs + fold.at(i, v) * (co.*(s.fam))[i];
            requireMat(rep, std::string("fold.co_") + s.name, {v}, lhs, rhs);
        }
    return rep;
}

Report checkHomomorphism(const LinearMap& f, const DendriformAlgebra& x,
                         const DendriformAlgebra& y) {
    return checkOpHomomorphism(f, {&x.prec, &x.succ}, {&y.prec, &y.succ},
                               {"prec", "succ"});
}

Report checkHomomorphism(const LinearMap& f, const QuadriAlgebra& x,
                         const QuadriAlgebra& y) {
    return checkOpHomomorphism(f, {&x.nw, &x.ne, &x.sw, &x.se},
                               {&y.nw, &y.ne, &y.sw, &y.se},
                               {"nw", "ne", "sw", "se"});
}

Report checkHomomorphism(const LinearMap& f, const QuadriBialgebra& x,
                         const QuadriBialgebra& y) {
    Report rep = checkHomomorphism(f, x.algebra, y.algebra);
    for (const CoalgSlots& s : kCoalgSlots)
        for (std::size_t u = 0; u < x.algebra.dim; ++u) {
            const Matrix lhs = f.m * (x.coalgebra.*(s.fam))[u] * f.m.transpose();
            Matrix rhs(f.dstDim, f.dstDim);
            for (std::size_t i = 0; i < f.dstDim; ++i)
                if (!f.m.at(i, u).isZero())
                    rhs = rhs + f.m.at(i, u) * (y.coalgebra.*(s.fam))[i];
            requireMat(rep, std::string("hom.co_") + s.name, {u}, lhs, rhs);
        }
    return rep;
}

Report maninHomomorphismConditions(const LinearMap& f, std::size_t srcSplit,
                                   std::size_t dstSplit, const BilinearForm& srcForm,
                                   const BilinearForm& dstForm) {
    Report rep;
    if (f.srcDim != 2 * srcSplit || f.dstDim != 2 * dstSplit)
        throw std::invalid_argument("manin hom: split sizes disagree with map");
    // First half must land in the first half, second in the second.
    for (std::size_t j = 0; j < srcSplit; ++j)
        for (std::size_t i = dstSplit; i < 2 * dstSplit; ++i)
            if (!f.m.at(i, j).isZero())
                rep.flag("hom.subspace_first", {i, j}, {f.m.at(i, j)});
    for (std::size_t j = srcSplit; j < 2 * srcSplit; ++j)
        for (std::size_t i = 0; i < dstSplit; ++i)
            if (!f.m.at(i, j).isZero())
                rep.flag("hom.subspace_second", {i, j}, {f.m.at(i, j)});
    // Pairing transport: dstForm(f u, f v) = srcForm(u, v) on basis pairs.
    const Matrix pulled = f.m.transpose() * dstForm.gram * f.m;
    Matrix diff = pulled - srcForm.gram;
    if (!diff.isZero()) rep.flag("hom.form", {}, flat(diff));
    return rep;
}

}  // namespace quadralg
