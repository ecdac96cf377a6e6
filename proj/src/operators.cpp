#include "quadralg/operators.hpp"

#include <stdexcept>

namespace quadralg {

namespace {

Vec basis(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = Rational(1);
    return v;
}

Matrix scaledIdentity(std::size_t n, const Rational& c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

}  // namespace

OpFamilyAlgebra opFamily(const DendriformAlgebra& a) {
    return {a.dim, {{"prec", a.prec}, {"succ", a.succ}}};
}

OpFamilyAlgebra opFamily(const QuadriAlgebra& q) {
    return {q.dim, {{"nw", q.nw}, {"ne", q.ne}, {"sw", q.sw}, {"se", q.se}}};
}

OpFamilyAlgebra opFamilyAssociative(const BilinearOp& mul) {
    return {mul.dim(), {{"mul", mul}}};
}

Report checkRotaBaxter(const OpFamilyAlgebra& a, const Matrix& p,
                       const Rational& lambda) {
    if (p.rows() != a.dim || p.cols() != a.dim)
        throw std::invalid_argument("rota-baxter: operator shape mismatch");
    for (const auto& op : a.ops)
        if (op.second.dim() != a.dim)
            throw std::invalid_argument("rota-baxter: cube shape mismatch");
    Report rep;
    if (p == scaledIdentity(a.dim, -lambda))
        rep.notes.push_back("operator equals -lambda times the identity");
    for (const auto& [name, op] : a.ops)
        for (std::size_t i = 0; i < a.dim; ++i) {
            const Vec pi = p.apply(basis(a.dim, i));
            for (std::size_t j = 0; j < a.dim; ++j) {
                const Vec pj = p.apply(basis(a.dim, j));
                const Vec lhs = op.eval(pi, pj);
                Vec inner = vecAdd(op.eval(pi, basis(a.dim, j)),
                                   op.eval(basis(a.dim, i), pj));
                inner = vecAdd(inner,
                               vecScale(lambda, op.eval(basis(a.dim, i),
                                                        basis(a.dim, j))));
                rep.require("rb." + name, {i, j}, lhs, p.apply(inner));
            }
        }
    return rep;
}

Report checkNijenhuis(const OpFamilyAlgebra& a, const Matrix& n) {
    if (n.rows() != a.dim || n.cols() != a.dim)
        throw std::invalid_argument("nijenhuis: operator shape mismatch");
    for (const auto& op : a.ops)
        if (op.second.dim() != a.dim)
            throw std::invalid_argument("nijenhuis: cube shape mismatch");
    BilinearOp total(a.dim);
    for (const auto& op : a.ops) total = total + op.second;

    Report rep;
    auto checkOne = [&](const std::string& name, const BilinearOp& op) {
        for (std::size_t i = 0; i < a.dim; ++i) {
            const Vec ni = n.apply(basis(a.dim, i));
            for (std::size_t j = 0; j < a.dim; ++j) {
                const Vec nj = n.apply(basis(a.dim, j));
                const Vec lhs = op.eval(ni, nj);
                Vec inner = vecAdd(op.eval(ni, basis(a.dim, j)),
                                   op.eval(basis(a.dim, i), nj));
                inner = vecSub(inner, n.apply(op.eval(basis(a.dim, i),
                                                      basis(a.dim, j))));
                rep.require("nij." + name, {i, j}, lhs, n.apply(inner));
            }
        }
    };
    for (const auto& [name, op] : a.ops) checkOne(name, op);
    checkOne("star", total);
    return rep;
}

Matrix nijenhuisToRB(const Matrix& n, const Rational& lambda) {
    if (n.rows() != n.cols()) throw std::invalid_argument("square operator required");
    const Matrix sq = n * n;
    if (sq != scaledIdentity(n.rows(), lambda * lambda))
        throw std::invalid_argument(
            "conversion needs the operator to square to lambda^2 id");
    const Rational half(1, 2);
    return half * (scaledIdentity(n.rows(), -lambda) - n);
}

Matrix doubleNijenhuis(const QuadriAlgebra& qd, const TensorElement& r,
                       const std::array<Rational, 4>& params) {
    const std::size_t n = r.dim;
    if (qd.dim != 2 * n)
        throw std::invalid_argument("nijenhuis block: double dim is not twice tensor dim");

    // The first half of the double must carry the base algebra unmixed.
    QuadriAlgebra base;
    base.dim = n;
    base.nw = BilinearOp(n);
    base.ne = BilinearOp(n);
    base.sw = BilinearOp(n);
    base.se = BilinearOp(n);
    const struct {
        BilinearOp QuadriAlgebra::*op;
    } slots[4] = {{&QuadriAlgebra::nw}, {&QuadriAlgebra::ne},
                  {&QuadriAlgebra::sw}, {&QuadriAlgebra::se}};
    for (const auto& s : slots)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k)
                    (base.*(s.op)).at(i, j, k) = (qd.*(s.op)).at(i, j, k);
                for (std::size_t k = n; k < 2 * n; ++k)
                    if (!(qd.*(s.op)).at(i, j, k).isZero())
                        throw std::invalid_argument(
                            "nijenhuis block: first half of the double is not closed");
            }

    {
        Report pre;
        if (!r.skew()) pre.flag("skew", {}, {Rational(1)});
        pre.absorb(checkQEquation(base, r), "pre");
        if (!pre.passed())
            throw ReportError("nijenhuis block: tensor is not a skew solution", pre);
    }

    Matrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out.at(i, i) = params[1];
        out.at(n + i, n + i) = params[3];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.at(i, n + j) = params[0] * r.coeffs.at(i, j);
    if (!params[2].isZero()) {
        const auto inv = r.coeffs.inverse();
        if (!inv)
            throw std::domain_error(
                "nijenhuis block: lower-left parameter needs an invertible tensor");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out.at(n + i, j) = params[2] * inv->at(i, j);
    }
    return out;
}

std::optional<FamilyKind> parseFamilyKind(const std::string& s) {
    if (s == "F1" || s == "F1+") return FamilyKind::F1Plus;
    if (s == "F1-") return FamilyKind::F1Minus;
    if (s == "F2" || s == "F2+") return FamilyKind::F2Plus;
    if (s == "F2-") return FamilyKind::F2Minus;
    if (s == "F3") return FamilyKind::F3;
    if (s == "G1" || s == "G1+") return FamilyKind::G1Plus;
    if (s == "G1-") return FamilyKind::G1Minus;
    if (s == "G2" || s == "G2+") return FamilyKind::G2Plus;
    if (s == "G2-") return FamilyKind::G2Minus;
    if (s == "G3") return FamilyKind::G3;
    return std::nullopt;
}

const char* familyKindName(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::F1Plus: return "F1+";
        case FamilyKind::F1Minus: return "F1-";
        case FamilyKind::F2Plus: return "F2+";
        case FamilyKind::F2Minus: return "F2-";
        case FamilyKind::F3: return "F3";
        case FamilyKind::G1Plus: return "G1+";
        case FamilyKind::G1Minus: return "G1-";
        case FamilyKind::G2Plus: return "G2+";
        case FamilyKind::G2Minus: return "G2-";
        case FamilyKind::G3: return "G3";
    }
    return "?";
}

Rational rbFamilyWeight(FamilyKind kind, const RBFamilyParams& p) {
    switch (kind) {
        case FamilyKind::G1Plus:
        case FamilyKind::G1Minus:
        case FamilyKind::G2Plus:
        case FamilyKind::G2Minus:
        case FamilyKind::G3:
            return Rational(-1);
        default:
            return p.lambda;
    }
}

std::array<Rational, 4> rbFamilyNijenhuisParams(FamilyKind kind,
                                                const RBFamilyParams& p) {
    const Rational w = rbFamilyWeight(kind, p);
    switch (kind) {
        case FamilyKind::F1Plus:
        case FamilyKind::G1Plus:
            if (p.k.isZero()) throw std::invalid_argument("family: k must be nonzero");
            return {Rational(0), w, p.k, -w};
        case FamilyKind::F1Minus:
        case FamilyKind::G1Minus:
            if (p.k.isZero()) throw std::invalid_argument("family: k must be nonzero");
            return {Rational(0), -w, p.k, w};
        case FamilyKind::F2Plus:
        case FamilyKind::G2Plus:
            if (p.k.isZero() && w.isZero())
                throw std::invalid_argument("family: k and lambda cannot both vanish");
            return {p.k, w, Rational(0), -w};
        case FamilyKind::F2Minus:
        case FamilyKind::G2Minus:
            if (p.k.isZero() && w.isZero())
                throw std::invalid_argument("family: k and lambda cannot both vanish");
            return {p.k, -w, Rational(0), w};
        case FamilyKind::F3:
        case FamilyKind::G3:
            if (p.k1.isZero())
                throw std::invalid_argument("family: k1 must be nonzero");
            if (p.k2 == w || p.k2 == -w)
                throw std::invalid_argument(
                    "family: k2 must differ from both lambda and -lambda");
            return {p.k1, p.k2, (w * w - p.k2 * p.k2) / p.k1, -p.k2};
    }
    throw std::invalid_argument("family: unknown kind");
}

Matrix rbFamily(FamilyKind kind, const RBFamilyParams& p, const QuadriAlgebra& qd,
                const TensorElement& r) {
    const auto quad = rbFamilyNijenhuisParams(kind, p);
    const Matrix n = doubleNijenhuis(qd, r, quad);
    return nijenhuisToRB(n, rbFamilyWeight(kind, p));
}

SemidirectNijenhuisResult semidirectNijenhuisTheta(const QuadriAlgebra& q,
                                                   const std::array<Rational, 4>& params) {
    {
        Report v = checkQuadri(q);
        if (!v.passed()) throw ReportError("semidirect operator: invalid algebra", v);
    }
    const std::size_t n = q.dim;
    const DendriformAlgebra av = projectDD(q, DDFlavor::Vertical);

    DDBimodule md;
    md.algebraDim = n;
    md.moduleDim = n;
    for (std::size_t i = 0; i < n; ++i) {
        md.lPrec.push_back(q.ne.lmat(i));
        md.rPrec.push_back(q.nw.rmat(i));
        md.lSucc.push_back(q.se.lmat(i));
        md.rSucc.push_back(q.sw.rmat(i));
    }

    SemidirectNijenhuisResult res;
    res.report.absorb(checkDDBimodule(av, md), "module");

    DendriformAlgebra semi;
    semi.dim = 2 * n;
    semi.prec = BilinearOp(2 * n);
    semi.succ = BilinearOp(2 * n);
    const struct {
        BilinearOp DendriformAlgebra::*slot;
        const std::vector<Matrix> DDBimodule::*l;
        const std::vector<Matrix> DDBimodule::*r;
    } slots[2] = {{&DendriformAlgebra::prec, &DDBimodule::lPrec, &DDBimodule::rPrec},
                  {&DendriformAlgebra::succ, &DDBimodule::lSucc, &DDBimodule::rSucc}};
    for (const auto& s : slots) {
        BilinearOp& cube = semi.*(s.slot);
        const BilinearOp& base = av.*(s.slot);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) cube.at(i, j, k) = base.at(i, j, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t w = 0; w < n; ++w) {
                    cube.at(i, n + u, n + w) = (md.*(s.l))[i].at(w, u);
                    cube.at(n + u, i, n + w) = (md.*(s.r))[i].at(w, u);
                }
    }
    res.report.absorb(checkDendriform(semi), "semidirect");
    res.semidirect = semi;

    Matrix op(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        op.at(i, i) = params[1];
        op.at(i, n + i) = params[0];
        op.at(n + i, i) = params[2];
        op.at(n + i, n + i) = params[3];
    }
    res.op = op;
    res.report.absorb(checkNijenhuis(opFamily(semi), op), "semidirect");

    Matrix theta(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        theta.at(i, i) = Rational(1);
        theta.at(i, n + i) = Rational(1);
        theta.at(n + i, i) = Rational(1);
    }
    res.theta = LinearMap{2 * n, 2 * n, theta};

    DDMatchedPairData mp;
    mp.a = av;
    mp.b = av;
    mp.bOnA = md;
    mp.aOnB = md;
    DDBowtieResult bow = buildDDBowtie(mp);
    if (bow.report.passed()) {
        res.report.absorb(checkHomomorphism(res.theta, bow.algebra, semi), "theta");
        res.report.absorb(checkNijenhuis(opFamily(bow.algebra), op), "glued");
    } else {
        res.report.notes.push_back(
            "self-paired gluing does not close; fold comparison skipped");
    }
    return res;
}

namespace {

template <typename Fam>
Report oOperatorCore(std::size_t algDim, std::size_t modDim, const LinearMap& t,
                     const std::vector<Fam>& fams) {
    if (t.srcDim != modDim || t.dstDim != algDim)
        throw std::invalid_argument("o-operator: map shape mismatch");
    Report rep;
    for (const auto& fam : fams)
        for (std::size_t u = 0; u < modDim; ++u) {
            const Vec tu = t.apply(basis(modDim, u));
            for (std::size_t v = 0; v < modDim; ++v) {
                const Vec tv = t.apply(basis(modDim, v));
                const Vec lhs = fam.op->eval(tu, tv);
                const Vec inner = vecAdd(fam.l(tu).apply(basis(modDim, v)),
                                         fam.r(tv).apply(basis(modDim, u)));
                rep.require(std::string("oop.") + fam.name, {u, v}, lhs,
                            t.apply(inner));
            }
        }
    return rep;
}

}  // namespace

Report checkOOperator(const DendriformAlgebra& a, const DDBimodule& m,
                      const LinearMap& t) {
    {
        Report v = checkDDBimodule(a, m);
        if (!v.passed()) throw ReportError("o-operator: invalid module", v);
    }
    struct Fam {
        const char* name;
        const BilinearOp* op;
        const DDBimodule* md;
        Matrix (DDBimodule::*lof)(const Vec&) const;
        Matrix (DDBimodule::*rof)(const Vec&) const;
        Matrix l(const Vec& x) const { return (md->*lof)(x); }
        Matrix r(const Vec& x) const { return (md->*rof)(x); }
    };
    const std::vector<Fam> fams = {
        {"prec", &a.prec, &m, &DDBimodule::lPrecOf, &DDBimodule::rPrecOf},
        {"succ", &a.succ, &m, &DDBimodule::lSuccOf, &DDBimodule::rSuccOf},
    };
    return oOperatorCore(a.dim, m.moduleDim, t, fams);
}

Report checkOOperator(const QuadriAlgebra& q, const QuadriBimodule& m,
                      const LinearMap& t) {
    {
        Report v = checkQuadriBimodule(q, m);
        if (!v.passed()) throw ReportError("o-operator: invalid module", v);
    }
    struct Fam {
        const char* name;
        const BilinearOp* op;
        const QuadriBimodule* md;
        const std::vector<Matrix> QuadriBimodule::*lfam;
        const std::vector<Matrix> QuadriBimodule::*rfam;
        Matrix l(const Vec& x) const {
            Matrix out(md->moduleDim, md->moduleDim);
            for (std::size_t i = 0; i < x.size(); ++i)
                if (!x[i].isZero()) out = out + x[i] * (md->*lfam)[i];
            return out;
        }
        Matrix r(const Vec& x) const {
            Matrix out(md->moduleDim, md->moduleDim);
            for (std::size_t i = 0; i < x.size(); ++i)
                if (!x[i].isZero()) out = out + x[i] * (md->*rfam)[i];
            return out;
        }
    };
    const std::vector<Fam> fams = {
        {"nw", &q.nw, &m, &QuadriBimodule::lNw, &QuadriBimodule::rNw},
        {"ne", &q.ne, &m, &QuadriBimodule::lNe, &QuadriBimodule::rNe},
        {"sw", &q.sw, &m, &QuadriBimodule::lSw, &QuadriBimodule::rSw},
        {"se", &q.se, &m, &QuadriBimodule::lSe, &QuadriBimodule::rSe},
    };
    return oOperatorCore(q.dim, m.moduleDim, t, fams);
}

}  // namespace quadralg
