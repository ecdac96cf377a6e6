#include "quadralg/dendriform.hpp"

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

void requireMat(Report& rep, const std::string& tag, std::vector<std::size_t> index,
                const Matrix& lhs, const Matrix& rhs) {
    Matrix d = lhs - rhs;
    if (!d.isZero()) rep.flag(tag, std::move(index), flat(d));
}

// sum_k op[i][j][k] * fam[k]
Matrix combo(const std::vector<Matrix>& fam, const BilinearOp& op, std::size_t i,
             std::size_t j, std::size_t moduleDim) {
    Matrix m(moduleDim, moduleDim);
    for (std::size_t k = 0; k < op.dim(); ++k) {
        const Rational& c = op.at(i, j, k);
        if (!c.isZero()) m = m + c * fam[k];
    }
    return m;
}

Matrix actOf(const std::vector<Matrix>& fam, const Vec& x, std::size_t moduleDim) {
    Matrix m(moduleDim, moduleDim);
    for (std::size_t s = 0; s < x.size(); ++s)
        if (!x[s].isZero()) m = m + x[s] * fam[s];
    return m;
}

}  // namespace

Matrix DDBimodule::lPrecOf(const Vec& x) const { return actOf(lPrec, x, moduleDim); }
Matrix DDBimodule::rPrecOf(const Vec& x) const { return actOf(rPrec, x, moduleDim); }
Matrix DDBimodule::lSuccOf(const Vec& x) const { return actOf(lSucc, x, moduleDim); }
Matrix DDBimodule::rSuccOf(const Vec& x) const { return actOf(rSucc, x, moduleDim); }

Report checkAssociative(const BilinearOp& mul) {
    Report rep;
    const std::size_t d = mul.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec ij(d);
            for (std::size_t k = 0; k < d; ++k) ij[k] = mul.at(i, j, k);
            for (std::size_t k = 0; k < d; ++k) {
                Vec jk(d);
                for (std::size_t l = 0; l < d; ++l) jk[l] = mul.at(j, k, l);
                rep.require("assoc", {i, j, k}, mul.eval(ij, basis(d, k)),
                            mul.eval(basis(d, i), jk));
            }
        }
    return rep;
}

BilinearOp assocOf(const DendriformAlgebra& a) { return a.star(); }

Report checkDendriform(const DendriformAlgebra& a) {
    Report rep;
    const std::size_t d = a.dim;
    if (a.prec.dim() != d || a.succ.dim() != d)
        throw std::invalid_argument("dendriform: cube dims disagree");
    const BilinearOp star = a.star();
    for (std::size_t i = 0; i < d; ++i) {
        const Vec ei = basis(d, i);
        for (std::size_t j = 0; j < d; ++j) {
            const Vec ej = basis(d, j);
            const Vec pij = a.prec.eval(ei, ej);
            const Vec sij = a.succ.eval(ei, ej);
            const Vec tij = a.star().eval(ei, ej);
            for (std::size_t k = 0; k < d; ++k) {
                const Vec ek = basis(d, k);
                rep.require("dd.ax1", {i, j, k}, a.prec.eval(pij, ek),
                            a.prec.eval(ei, star.eval(ej, ek)));
                rep.require("dd.ax2", {i, j, k}, a.prec.eval(sij, ek),
                            a.succ.eval(ei, a.prec.eval(ej, ek)));
                rep.require("dd.ax3", {i, j, k}, a.succ.eval(tij, ek),
                            a.succ.eval(ei, a.succ.eval(ej, ek)));
            }
        }
    }
    return rep;
}

DDBimodule regularDDBimodule(const DendriformAlgebra& a) {
    DDBimodule m;
    m.algebraDim = m.moduleDim = a.dim;
    for (std::size_t s = 0; s < a.dim; ++s) {
        m.lPrec.push_back(a.prec.lmat(s));
        m.rPrec.push_back(a.prec.rmat(s));
        m.lSucc.push_back(a.succ.lmat(s));
        m.rSucc.push_back(a.succ.rmat(s));
    }
    return m;
}

Report checkDDBimodule(const DendriformAlgebra& a, const DDBimodule& m) {
    Report rep;
    if (m.algebraDim != a.dim)
        throw std::invalid_argument("bimodule: algebra dim mismatch");
    const std::size_t d = a.dim;
    const std::size_t md = m.moduleDim;
    const BilinearOp star = a.star();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            requireMat(rep, "ddmod.id1", {i, j}, m.rPrec[j] * m.rPrec[i],
                       combo(m.rPrec, star, i, j, md));
            requireMat(rep, "ddmod.id2", {i, j}, m.rPrec[j] * m.lPrec[i],
                       m.lPrec[i] * m.rStar(j));
            requireMat(rep, "ddmod.id3", {i, j}, combo(m.lPrec, a.prec, i, j, md),
                       m.lPrec[i] * m.lStar(j));
            requireMat(rep, "ddmod.id4", {i, j}, m.rPrec[j] * m.rSucc[i],
                       combo(m.rSucc, a.prec, i, j, md));
            requireMat(rep, "ddmod.id5", {i, j}, m.rPrec[j] * m.lSucc[i],
                       m.lSucc[i] * m.rPrec[j]);
            requireMat(rep, "ddmod.id6", {i, j}, combo(m.lPrec, a.succ, i, j, md),
                       m.lSucc[i] * m.lPrec[j]);
            requireMat(rep, "ddmod.id7", {i, j}, m.rSucc[j] * m.rStar(i),
                       combo(m.rSucc, a.succ, i, j, md));
            requireMat(rep, "ddmod.id8", {i, j}, m.rSucc[j] * m.lStar(i),
                       m.lSucc[i] * m.rSucc[j]);
            requireMat(rep, "ddmod.id9", {i, j}, combo(m.lSucc, star, i, j, md),
                       m.lSucc[i] * m.lSucc[j]);
        }
    return rep;
}

DDBimodule dualDDBimodule(const DDBimodule& m) {
    DDBimodule d;
    d.algebraDim = m.algebraDim;
    d.moduleDim = m.moduleDim;
    for (std::size_t s = 0; s < m.algebraDim; ++s) {
        d.lPrec.push_back(-m.rSucc[s].transpose());
        d.rPrec.push_back(m.lStar(s).transpose());
        d.lSucc.push_back(m.rStar(s).transpose());
        d.rSucc.push_back(-m.lPrec[s].transpose());
    }
    return d;
}

Report checkDD2Cocycle(const DendriformAlgebra& a, const BilinearForm& b) {
    Report rep;
    if (b.dim != a.dim) throw std::invalid_argument("cocycle: form dim mismatch");
    if (!b.symmetric()) {
        rep.flag("cocycle.sym", {}, flat(b.gram - b.gram.transpose()));
        return rep;
    }
    const std::size_t d = a.dim;
    const BilinearOp star = a.star();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Vec ei = basis(d, i), ej = basis(d, j), ek = basis(d, k);
                Rational lhs = b.eval(star.eval(ei, ej), ek);
                Rational rhs = b.eval(ej, a.prec.eval(ek, ei)) +
                               b.eval(ei, a.succ.eval(ej, ek));
                if (lhs != rhs) rep.flag("cocycle.id", {i, j, k}, {lhs - rhs});
            }
    return rep;
}

namespace {

// The nine compatibility conditions of one orientation: values in A, with P
// the action of the other algebra on A and Q the action of A back. `off`
// shifts the condition numbering for the mirrored orientation.
void matchedPairHalf(const DendriformAlgebra& A, const DDBimodule& P,
                     const DDBimodule& Q, std::size_t otherDim, int off,
                     Report& rep) {
    const std::size_t nA = A.dim;
    const BilinearOp star = A.star();
    auto tag = [off](int c) { return "mp.c" + std::to_string(c + off); };
    for (std::size_t i = 0; i < nA; ++i) {
        const Vec xi = basis(nA, i);
        for (std::size_t j = 0; j < nA; ++j) {
            const Vec yj = basis(nA, j);
            for (std::size_t u = 0; u < otherDim; ++u) {
                const Vec au = basis(otherDim, u);
                const Vec Pl_u_x = P.lPrec[u].apply(xi);
                const Vec Plv_u_x = P.lSucc[u].apply(xi);

                rep.require(tag(1), {i, j, u},
                            vecAdd(A.prec.eval(Pl_u_x, yj),
                                   P.lPrecOf(Q.rPrec[i].apply(au)).apply(yj)),
                            P.lPrec[u].apply(star.eval(xi, yj)));
                rep.require(tag(2), {i, j, u},
                            vecAdd(P.lPrecOf(Q.lPrec[i].apply(au)).apply(yj),
                                   A.prec.eval(P.rPrec[u].apply(xi), yj)),
                            vecAdd(A.prec.eval(xi, P.lStar(u).apply(yj)),
                                   P.rPrecOf(Q.rStar(j).apply(au)).apply(xi)));
                rep.require(tag(3), {i, j, u},
                            P.rPrec[u].apply(A.prec.eval(xi, yj)),
                            vecAdd(P.rPrecOf(Q.lStar(j).apply(au)).apply(xi),
                                   A.prec.eval(xi, P.rStar(u).apply(yj))));
                rep.require(tag(4), {i, j, u},
                            vecAdd(A.prec.eval(Plv_u_x, yj),
                                   P.lPrecOf(Q.rSucc[i].apply(au)).apply(yj)),
                            P.lSucc[u].apply(A.prec.eval(xi, yj)));
                rep.require(tag(5), {i, j, u},
                            vecAdd(P.lPrecOf(Q.lSucc[i].apply(au)).apply(yj),
                                   A.prec.eval(P.rSucc[u].apply(xi), yj)),
                            vecAdd(A.succ.eval(xi, P.lPrec[u].apply(yj)),
                                   P.rSuccOf(Q.rPrec[j].apply(au)).apply(xi)));
                rep.require(tag(6), {i, j, u},
                            P.rPrec[u].apply(A.succ.eval(xi, yj)),
                            vecAdd(P.rSuccOf(Q.lPrec[j].apply(au)).apply(xi),
                                   A.succ.eval(xi, P.rPrec[u].apply(yj))));
                rep.require(tag(7), {i, j, u},
                            vecAdd(A.succ.eval(P.lStar(u).apply(xi), yj),
                                   P.lSuccOf(Q.rStar(i).apply(au)).apply(yj)),
                            P.lSucc[u].apply(A.succ.eval(xi, yj)));
                rep.require(tag(8), {i, j, u},
                            vecAdd(P.lSuccOf(Q.lStar(i).apply(au)).apply(yj),
                                   A.succ.eval(P.rStar(u).apply(xi), yj)),
                            vecAdd(A.succ.eval(xi, P.lSucc[u].apply(yj)),
                                   P.rSuccOf(Q.rSucc[j].apply(au)).apply(xi)));
                rep.require(tag(9), {i, j, u},
                            P.rSucc[u].apply(star.eval(xi, yj)),
                            vecAdd(P.rSuccOf(Q.lSucc[j].apply(au)).apply(xi),
                                   A.succ.eval(xi, P.rSucc[u].apply(yj))));
            }
        }
    }
}

}  // namespace

DDBowtieResult buildDDBowtie(const DDMatchedPairData& mp) {
    const std::size_t nA = mp.a.dim, nB = mp.b.dim, n = nA + nB;
    if (mp.bOnA.algebraDim != nB || mp.bOnA.moduleDim != nA ||
        mp.aOnB.algebraDim != nA || mp.aOnB.moduleDim != nB)
        throw std::invalid_argument("bowtie: action shapes disagree");

    DDBowtieResult out;
    out.report.absorb(checkDendriform(mp.a), "left");
    out.report.absorb(checkDendriform(mp.b), "right");
    out.report.absorb(checkDDBimodule(mp.b, mp.bOnA), "left_module");
    out.report.absorb(checkDDBimodule(mp.a, mp.aOnB), "right_module");
    matchedPairHalf(mp.a, mp.bOnA, mp.aOnB, nB, 0, out.report);
    matchedPairHalf(mp.b, mp.aOnB, mp.bOnA, nA, 9, out.report);

    DendriformAlgebra d;
    d.dim = n;
    d.prec = BilinearOp(n);
    d.succ = BilinearOp(n);
    struct Slot {
        BilinearOp DendriformAlgebra::*op;
        const std::vector<Matrix> DDBimodule::*l;
        const std::vector<Matrix> DDBimodule::*r;
    };
    const Slot slots[2] = {
        {&DendriformAlgebra::prec, &DDBimodule::lPrec, &DDBimodule::rPrec},
        {&DendriformAlgebra::succ, &DDBimodule::lSucc, &DDBimodule::rSucc},
    };
    for (const Slot& s : slots) {
        BilinearOp& cube = d.*(s.op);
        const BilinearOp& ca = mp.a.*(s.op);
        const BilinearOp& cb = mp.b.*(s.op);
        const auto& Pl = mp.bOnA.*(s.l);
        const auto& Pr = mp.bOnA.*(s.r);
        const auto& Ql = mp.aOnB.*(s.l);
        const auto& Qr = mp.aOnB.*(s.r);
        for (std::size_t i = 0; i < nA; ++i)
            for (std::size_t j = 0; j < nA; ++j)
                for (std::size_t k = 0; k < nA; ++k) cube.at(i, j, k) = ca.at(i, j, k);
        for (std::size_t u = 0; u < nB; ++u)
            for (std::size_t v = 0; v < nB; ++v)
                for (std::size_t w = 0; w < nB; ++w)
                    cube.at(nA + u, nA + v, nA + w) = cb.at(u, v, w);
        for (std::size_t i = 0; i < nA; ++i)
            for (std::size_t u = 0; u < nB; ++u) {
                for (std::size_t k = 0; k < nA; ++k) {
                    cube.at(i, nA + u, k) = Pr[u].at(k, i);   // r(b) x
                    cube.at(nA + u, i, k) = Pl[u].at(k, i);   // l(a) y
                }
                for (std::size_t w = 0; w < nB; ++w) {
                    cube.at(i, nA + u, nA + w) = Ql[i].at(w, u);  // l(x) b
                    cube.at(nA + u, i, nA + w) = Qr[i].at(w, u);  // r(y) a
                }
            }
    }
    out.report.absorb(checkDendriform(d), "assembled");
    out.algebra = std::move(d);
    return out;
}

BilinearForm standardPairingForm(std::size_t n) {
    BilinearForm f;
    f.dim = 2 * n;
    f.gram = Matrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        f.gram.at(i, n + i) = Rational(1);
        f.gram.at(n + i, i) = Rational(1);
    }
    return f;
}

Report checkManinDD(const DendriformAlgebra& d, std::size_t n) {
    Report rep;
    if (d.dim != 2 * n) throw std::invalid_argument("manin: dim must be 2n");
    const struct {
        const char* name;
        const BilinearOp* op;
    } ops[2] = {{"prec", &d.prec}, {"succ", &d.succ}};
    for (const auto& o : ops)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = n; k < 2 * n; ++k)
                    if (!o.op->at(i, j, k).isZero())
                        rep.flag(std::string("manin.closure_first.") + o.name,
                                 {i, j, k}, {o.op->at(i, j, k)});
                for (std::size_t k = 0; k < n; ++k)
                    if (!o.op->at(n + i, n + j, k).isZero())
                        rep.flag(std::string("manin.closure_second.") + o.name,
                                 {n + i, n + j, k}, {o.op->at(n + i, n + j, k)});
            }

    const BilinearForm bs = standardPairingForm(n);
    for (std::size_t half = 0; half < 2; ++half) {
        const std::size_t base = half * n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rational v = bs.gram.at(base + i, base + j);
                if (!v.isZero())
                    rep.flag(half == 0 ? "manin.isotropy_first" : "manin.isotropy_second",
                             {base + i, base + j}, {v});
            }
    }
    rep.absorb(checkDD2Cocycle(d, bs), "manin");
    return rep;
}

Report checkOpHomomorphism(const LinearMap& f,
                           const std::vector<const BilinearOp*>& opsX,
                           const std::vector<const BilinearOp*>& opsY,
                           const std::vector<std::string>& tags) {
    Report rep;
    if (opsX.size() != opsY.size() || opsX.size() != tags.size())
        throw std::invalid_argument("hom: op list sizes disagree");
    const std::size_t dx = f.srcDim;
    for (std::size_t t = 0; t < opsX.size(); ++t) {
        if (opsX[t]->dim() != f.srcDim || opsY[t]->dim() != f.dstDim)
            throw std::invalid_argument("hom: op dims disagree with map");
        for (std::size_t i = 0; i < dx; ++i)
            for (std::size_t j = 0; j < dx; ++j) {
                const Vec fi = f.apply(basis(dx, i));
                const Vec fj = f.apply(basis(dx, j));
                Vec lhs(dx);
                {
                    Vec prod(dx);
                    for (std::size_t k = 0; k < dx; ++k)
                        prod[k] = opsX[t]->at(i, j, k);
                    lhs = f.apply(prod);
                }
                rep.require("hom." + tags[t], {i, j}, lhs, opsY[t]->eval(fi, fj));
            }
    }
    return rep;
}

}  // namespace quadralg
