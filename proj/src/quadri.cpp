#include "quadralg/quadri.hpp"

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

Matrix combo(const std::vector<Matrix>& fam, const BilinearOp& op, std::size_t i,
             std::size_t j, std::size_t moduleDim) {
    Matrix m(moduleDim, moduleDim);
    for (std::size_t k = 0; k < op.dim(); ++k) {
        const Rational& c = op.at(i, j, k);
        if (!c.isZero()) m = m + c * fam[k];
    }
    return m;
}

}  // namespace

DerivedOps derivedOps(const QuadriAlgebra& q) {
    DerivedOps d;
    d.succ = q.ne + q.se;
    d.prec = q.nw + q.sw;
    d.vee = q.sw + q.se;
    d.wedge = q.nw + q.ne;
    d.star = d.succ + d.prec;
    return d;
}

Report checkQuadri(const QuadriAlgebra& q) {
    Report rep;
    const std::size_t d = q.dim;
    if (q.nw.dim() != d || q.ne.dim() != d || q.sw.dim() != d || q.se.dim() != d)
        throw std::invalid_argument("quadri: cube dims disagree");
    const DerivedOps ops = derivedOps(q);
    for (std::size_t i = 0; i < d; ++i) {
        const Vec ei = basis(d, i);
        for (std::size_t j = 0; j < d; ++j) {
            const Vec ej = basis(d, j);
            const Vec nwij = q.nw.eval(ei, ej);
            const Vec neij = q.ne.eval(ei, ej);
            const Vec swij = q.sw.eval(ei, ej);
            const Vec seij = q.se.eval(ei, ej);
            const Vec wedgeij = ops.wedge.eval(ei, ej);
            const Vec veeij = ops.vee.eval(ei, ej);
            const Vec precij = ops.prec.eval(ei, ej);
            const Vec succij = ops.succ.eval(ei, ej);
            const Vec starij = ops.star.eval(ei, ej);
            for (std::size_t k = 0; k < d; ++k) {
                const Vec ek = basis(d, k);
                rep.require("quadri.ax1", {i, j, k}, q.nw.eval(nwij, ek),
                            q.nw.eval(ei, ops.star.eval(ej, ek)));
                rep.require("quadri.ax2", {i, j, k}, q.nw.eval(neij, ek),
                            q.ne.eval(ei, ops.prec.eval(ej, ek)));
                rep.require("quadri.ax3", {i, j, k}, q.ne.eval(wedgeij, ek),
                            q.ne.eval(ei, ops.succ.eval(ej, ek)));
                rep.require("quadri.ax4", {i, j, k}, q.nw.eval(swij, ek),
                            q.sw.eval(ei, ops.wedge.eval(ej, ek)));
                rep.require("quadri.ax5", {i, j, k}, q.nw.eval(seij, ek),
                            q.se.eval(ei, q.nw.eval(ej, ek)));
                rep.require("quadri.ax6", {i, j, k}, q.ne.eval(veeij, ek),
                            q.se.eval(ei, q.ne.eval(ej, ek)));
                rep.require("quadri.ax7", {i, j, k}, q.sw.eval(precij, ek),
                            q.sw.eval(ei, ops.vee.eval(ej, ek)));
                rep.require("quadri.ax8", {i, j, k}, q.sw.eval(succij, ek),
                            q.se.eval(ei, q.sw.eval(ej, ek)));
                rep.require("quadri.ax9", {i, j, k}, q.se.eval(starij, ek),
                            q.se.eval(ei, q.se.eval(ej, ek)));
            }
        }
    }
    return rep;
}

DendriformAlgebra projectDD(const QuadriAlgebra& q, DDFlavor which) {
    DendriformAlgebra d;
    d.dim = q.dim;
    if (which == DDFlavor::Horizontal) {
        d.prec = q.nw + q.sw;
        d.succ = q.ne + q.se;
    } else {
        d.prec = q.nw + q.ne;
        d.succ = q.sw + q.se;
    }
    return d;
}

QuadriBimodule regularQuadriBimodule(const QuadriAlgebra& q) {
    QuadriBimodule m;
    m.algebraDim = m.moduleDim = q.dim;
    for (std::size_t s = 0; s < q.dim; ++s) {
        m.lNw.push_back(q.nw.lmat(s));
        m.rNw.push_back(q.nw.rmat(s));
        m.lNe.push_back(q.ne.lmat(s));
        m.rNe.push_back(q.ne.rmat(s));
        m.lSw.push_back(q.sw.lmat(s));
        m.rSw.push_back(q.sw.rmat(s));
        m.lSe.push_back(q.se.lmat(s));
        m.rSe.push_back(q.se.rmat(s));
    }
    return m;
}

Report checkQuadriBimodule(const QuadriAlgebra& q, const QuadriBimodule& m) {
    Report rep;
    if (m.algebraDim != q.dim)
        throw std::invalid_argument("quadri bimodule: algebra dim mismatch");
    const std::size_t d = q.dim;
    const std::size_t md = m.moduleDim;
    const DerivedOps ops = derivedOps(q);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            requireMat(rep, "qmod.id1", {i, j}, m.rNw[j] * m.rNw[i],
                       combo(m.rNw, ops.star, i, j, md));
            requireMat(rep, "qmod.id2", {i, j}, m.rNw[j] * m.lNw[i],
                       m.lNw[i] * m.rStar(j));
            requireMat(rep, "qmod.id3", {i, j}, combo(m.lNw, q.nw, i, j, md),
                       m.lNw[i] * m.lStar(j));
            requireMat(rep, "qmod.id4", {i, j}, m.rNw[j] * m.rNe[i],
                       combo(m.rNe, ops.prec, i, j, md));
            requireMat(rep, "qmod.id5", {i, j}, m.rNw[j] * m.lNe[i],
                       m.lNe[i] * m.rPrec(j));
            requireMat(rep, "qmod.id6", {i, j}, combo(m.lNw, q.ne, i, j, md),
                       m.lNe[i] * m.lPrec(j));
            requireMat(rep, "qmod.id7", {i, j},
                       m.rNe[j] * (m.rNw[i] + m.rNe[i]),
                       combo(m.rNe, ops.succ, i, j, md));
            requireMat(rep, "qmod.id8", {i, j},
                       m.rNe[j] * (m.lNw[i] + m.lNe[i]),
                       m.lNe[i] * m.rSucc(j));
            requireMat(rep, "qmod.id9", {i, j}, combo(m.lNe, ops.wedge, i, j, md),
                       m.lNe[i] * m.lSucc(j));
            requireMat(rep, "qmod.id10", {i, j}, m.rNw[j] * m.rSw[i],
                       combo(m.rSw, ops.wedge, i, j, md));
            requireMat(rep, "qmod.id11", {i, j}, m.rNw[j] * m.lSw[i],
                       m.lSw[i] * m.rWedge(j));
            requireMat(rep, "qmod.id12", {i, j}, combo(m.lNw, q.sw, i, j, md),
                       m.lSw[i] * m.lWedge(j));
            requireMat(rep, "qmod.id13", {i, j}, m.rNw[j] * m.rSe[i],
                       combo(m.rSe, q.nw, i, j, md));
            requireMat(rep, "qmod.id14", {i, j}, m.rNw[j] * m.lSe[i],
                       m.lSe[i] * m.rNw[j]);
            requireMat(rep, "qmod.id15", {i, j}, combo(m.lNw, q.se, i, j, md),
                       m.lSe[i] * m.lNw[j]);
            requireMat(rep, "qmod.id16", {i, j}, m.rNe[j] * m.rVee(i),
                       combo(m.rSe, q.ne, i, j, md));
            requireMat(rep, "qmod.id17", {i, j}, m.rNe[j] * m.lVee(i),
                       m.lSe[i] * m.rNe[j]);
            requireMat(rep, "qmod.id18", {i, j}, combo(m.lNe, ops.vee, i, j, md),
                       m.lSe[i] * m.lNe[j]);
            requireMat(rep, "qmod.id19", {i, j}, m.rSw[j] * m.rPrec(i),
                       combo(m.rSw, ops.vee, i, j, md));
            requireMat(rep, "qmod.id20", {i, j}, m.rSw[j] * m.lPrec(i),
                       m.lSw[i] * m.rVee(j));
            requireMat(rep, "qmod.id21", {i, j}, combo(m.lSw, ops.prec, i, j, md),
                       m.lSw[i] * m.lVee(j));
            requireMat(rep, "qmod.id22", {i, j}, m.rSw[j] * m.rSucc(i),
                       combo(m.rSe, q.sw, i, j, md));
            requireMat(rep, "qmod.id23", {i, j}, m.rSw[j] * m.lSucc(i),
                       m.lSe[i] * m.rSw[j]);
            requireMat(rep, "qmod.id24", {i, j}, combo(m.lSw, ops.succ, i, j, md),
                       m.lSe[i] * m.lSw[j]);
            requireMat(rep, "qmod.id25", {i, j}, m.rSe[j] * m.rStar(i),
                       combo(m.rSe, q.se, i, j, md));
            requireMat(rep, "qmod.id26", {i, j}, m.rSe[j] * m.lStar(i),
                       m.lSe[i] * m.rSe[j]);
            requireMat(rep, "qmod.id27", {i, j}, combo(m.lSe, ops.star, i, j, md),
                       m.lSe[i] * m.lSe[j]);
        }
    return rep;
}

QuadriBimodule dualQuadriBimodule(const QuadriBimodule& m) {
    QuadriBimodule d;
    d.algebraDim = m.algebraDim;
    d.moduleDim = m.moduleDim;
    for (std::size_t s = 0; s < m.algebraDim; ++s) {
        d.lNw.push_back(m.rSe[s].transpose());
        d.rNw.push_back(m.lStar(s).transpose());
        d.lNe.push_back(-m.rVee(s).transpose());
        d.rNe.push_back(-m.lPrec(s).transpose());
        d.lSw.push_back(-m.rSucc(s).transpose());
        d.rSw.push_back(-m.lWedge(s).transpose());
        d.lSe.push_back(m.rStar(s).transpose());
        d.rSe.push_back(m.lNw[s].transpose());
    }
    return d;
}

namespace {

struct QuadriSlot {
    BilinearOp QuadriAlgebra::*op;
    const std::vector<Matrix> QuadriBimodule::*l;
    const std::vector<Matrix> QuadriBimodule::*r;
};

constexpr QuadriSlot kQuadriSlots[4] = {
    {&QuadriAlgebra::nw, &QuadriBimodule::lNw, &QuadriBimodule::rNw},
    {&QuadriAlgebra::ne, &QuadriBimodule::lNe, &QuadriBimodule::rNe},
    {&QuadriAlgebra::sw, &QuadriBimodule::lSw, &QuadriBimodule::rSw},
    {&QuadriAlgebra::se, &QuadriBimodule::lSe, &QuadriBimodule::rSe},
};

}  // namespace

QuadriAlgebra semidirectSum(const QuadriAlgebra& q, const QuadriBimodule& m) {
    Report check = checkQuadriBimodule(q, m);
    if (!check.passed())
        throw ReportError("semidirect sum: bimodule fails its identities", check);

    const std::size_t nA = q.dim, nV = m.moduleDim, n = nA + nV;
    QuadriAlgebra out;
    out.dim = n;
    for (const QuadriSlot& s : kQuadriSlots) {
        BilinearOp cube(n);
        const BilinearOp& ca = q.*(s.op);
        const auto& lFam = m.*(s.l);
        const auto& rFam = m.*(s.r);
        for (std::size_t i = 0; i < nA; ++i)
            for (std::size_t j = 0; j < nA; ++j)
                for (std::size_t k = 0; k < nA; ++k) cube.at(i, j, k) = ca.at(i, j, k);
        for (std::size_t i = 0; i < nA; ++i)
            for (std::size_t u = 0; u < nV; ++u)
                for (std::size_t w = 0; w < nV; ++w) {
                    cube.at(i, nA + u, nA + w) = lFam[i].at(w, u);  // l(x) u
                    cube.at(nA + u, i, nA + w) = rFam[i].at(w, u);  // r(y) u
                }
        out.*(s.op) = std::move(cube);
    }
    return out;
}

QuadriBowtieResult buildQuadriBowtie(const QuadriMatchedPairData& mp) {
    const std::size_t nA = mp.a.dim, nB = mp.b.dim, n = nA + nB;
    if (mp.bOnA.algebraDim != nB || mp.bOnA.moduleDim != nA ||
        mp.aOnB.algebraDim != nA || mp.aOnB.moduleDim != nB)
        throw std::invalid_argument("quadri bowtie: action shapes disagree");

    QuadriBowtieResult out;
    out.algebra.dim = n;
    for (const QuadriSlot& s : kQuadriSlots) {
        BilinearOp cube(n);
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
                    cube.at(i, nA + u, k) = Pr[u].at(k, i);
                    cube.at(nA + u, i, k) = Pl[u].at(k, i);
                }
                for (std::size_t w = 0; w < nB; ++w) {
                    cube.at(i, nA + u, nA + w) = Ql[i].at(w, u);
                    cube.at(nA + u, i, nA + w) = Qr[i].at(w, u);
                }
            }
        out.algebra.*(s.op) = std::move(cube);
    }
    out.report.absorb(checkQuadri(out.algebra), "assembled");
    return out;
}

QuadriAlgebra quadriFrom2Cocycle(const DendriformAlgebra& d, const BilinearForm& b) {
    if (b.dim != d.dim) throw std::invalid_argument("cocycle split: form dim mismatch");
    if (!b.symmetric()) {
        Report rep;
        rep.flag("cocycle.sym", {}, {Rational(1)});
        throw ReportError("cocycle split: form must be symmetric", rep);
    }
    auto ginv = b.gram.inverse();
    if (!ginv) {
        Report rep;
        rep.flag("cocycle.nondegenerate", {}, {b.gram.det()});
        throw ReportError("cocycle split: form must be nondegenerate", rep);
    }
    Report cocycle = checkDD2Cocycle(d, b);
    if (!cocycle.passed())
        throw ReportError("cocycle split: form fails the 2-cocycle condition", cocycle);

    const std::size_t n = d.dim;
    const BilinearOp star = d.star();
    QuadriAlgebra out;
    out.dim = n;
    out.nw = BilinearOp(n);
    out.ne = BilinearOp(n);
    out.sw = BilinearOp(n);
    out.se = BilinearOp(n);
    Vec rhsNw(n), rhsNe(n), rhsSw(n), rhsSe(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n);
        ei[i] = Rational(1);
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej(n);
            ej[j] = Rational(1);
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek(n);
                ek[k] = Rational(1);
                rhsNw[k] = b.eval(ei, star.eval(ej, ek));
                rhsNe[k] = -b.eval(ej, d.succ.eval(ek, ei));
                rhsSw[k] = -b.eval(ei, d.prec.eval(ej, ek));
                rhsSe[k] = b.eval(ej, star.eval(ek, ei));
            }
            const Vec wNw = ginv->apply(rhsNw);
            const Vec wNe = ginv->apply(rhsNe);
            const Vec wSw = ginv->apply(rhsSw);
            const Vec wSe = ginv->apply(rhsSe);
            for (std::size_t k = 0; k < n; ++k) {
                out.nw.at(i, j, k) = wNw[k];
                out.ne.at(i, j, k) = wNe[k];
                out.sw.at(i, j, k) = wSw[k];
                out.se.at(i, j, k) = wSe[k];
            }
        }
    }
    return out;
}

Report checkInvariantForm(const QuadriAlgebra& q, const BilinearForm& b) {
    Report rep;
    if (b.dim != q.dim) throw std::invalid_argument("invariant form: dim mismatch");
    if (!b.symmetric()) {
        Vec diff;
        Matrix d = b.gram - b.gram.transpose();
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) diff.push_back(d.at(i, j));
        rep.flag("invform.sym", {}, diff);
        return rep;
    }
    const std::size_t n = q.dim;
    const DerivedOps ops = derivedOps(q);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n);
        ei[i] = Rational(1);
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej(n);
            ej[j] = Rational(1);
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek(n);
                ek[k] = Rational(1);
                Rational r1 = b.eval(q.nw.eval(ei, ej), ek) -
                              b.eval(ei, ops.star.eval(ej, ek));
                Rational r2 = b.eval(q.ne.eval(ei, ej), ek) +
                              b.eval(ej, ops.vee.eval(ek, ei));
                Rational r3 = b.eval(q.sw.eval(ei, ej), ek) +
                              b.eval(ei, ops.wedge.eval(ej, ek));
                Rational r4 = b.eval(q.se.eval(ei, ej), ek) -
                              b.eval(ej, ops.star.eval(ek, ei));
                if (!r1.isZero()) rep.flag("invform.c1", {i, j, k}, {r1});
                if (!r2.isZero()) rep.flag("invform.c2", {i, j, k}, {r2});
                if (!r3.isZero()) rep.flag("invform.c3", {i, j, k}, {r3});
                if (!r4.isZero()) rep.flag("invform.c4", {i, j, k}, {r4});
            }
        }
    }
    return rep;
}

Report checkOmega2Cocycle(const QuadriAlgebra& q, const BilinearForm& omega) {
    Report rep;
    if (omega.dim != q.dim) throw std::invalid_argument("omega cocycle: dim mismatch");
    const std::size_t n = q.dim;
    const DerivedOps ops = derivedOps(q);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n);
        ei[i] = Rational(1);
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej(n);
            ej[j] = Rational(1);
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek(n);
                ek[k] = Rational(1);
                Rational r1 = omega.eval(ei, ops.wedge.eval(ej, ek)) +
                              omega.eval(q.sw.eval(ei, ej), ek) -
                              omega.eval(ops.succ.eval(ek, ei), ej);
                Rational r2 = omega.eval(ei, ops.vee.eval(ej, ek)) -
                              omega.eval(ops.prec.eval(ei, ej), ek) +
                              omega.eval(q.ne.eval(ek, ei), ej);
                if (!r1.isZero()) rep.flag("omega.c1", {i, j, k}, {r1});
                if (!r2.isZero()) rep.flag("omega.c2", {i, j, k}, {r2});
            }
        }
    }
    BilinearForm sym;
    sym.dim = omega.dim;
    sym.gram = omega.gram + omega.gram.transpose();
    rep.absorb(checkDD2Cocycle(projectDD(q, DDFlavor::Vertical), sym), "omega.symmetrized");
    return rep;
}

Report checkManinQuadri(const QuadriAlgebra& q, std::size_t n) {
    Report rep;
    if (q.dim != 2 * n) throw std::invalid_argument("manin: dim must be 2n");
    const struct {
        const char* name;
        const BilinearOp* op;
    } ops[4] = {{"nw", &q.nw}, {"ne", &q.ne}, {"sw", &q.sw}, {"se", &q.se}};
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
    rep.absorb(checkInvariantForm(q, standardPairingForm(n)), "manin");
    return rep;
}

namespace {

DDBimodule sumToVertical(const QuadriBimodule& m) {
    DDBimodule d;
    d.algebraDim = m.algebraDim;
    d.moduleDim = m.moduleDim;
    for (std::size_t s = 0; s < m.algebraDim; ++s) {
        d.lPrec.push_back(m.lWedge(s));
        d.rPrec.push_back(m.rWedge(s));
        d.lSucc.push_back(m.lVee(s));
        d.rSucc.push_back(m.rVee(s));
    }
    return d;
}

}  // namespace

DDMatchedPairData inducedDDMatchedPair(const QuadriMatchedPairData& mp) {
    DDMatchedPairData out;
    out.a = projectDD(mp.a, DDFlavor::Vertical);
    out.b = projectDD(mp.b, DDFlavor::Vertical);
    out.bOnA = sumToVertical(mp.bOnA);
    out.aOnB = sumToVertical(mp.aOnB);
    return out;
}

DDBimodule verticalDualModule(const QuadriAlgebra& q) {
    const DerivedOps ops = derivedOps(q);
    DDBimodule m;
    m.algebraDim = q.dim;
    m.moduleDim = q.dim;
    for (std::size_t s = 0; s < q.dim; ++s) {
        m.lPrec.push_back(-q.sw.rmat(s).transpose());
        m.rPrec.push_back(ops.succ.lmat(s).transpose());
        m.lSucc.push_back(ops.prec.rmat(s).transpose());
        m.rSucc.push_back(-q.ne.lmat(s).transpose());
    }
    return m;
}

}  // namespace quadralg
