#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadralg/dendriform.hpp"

using namespace quadralg;

namespace {

DendriformAlgebra dd1(int p, int s) {
    DendriformAlgebra a;
    a.dim = 1;
    a.prec = BilinearOp(1);
    a.succ = BilinearOp(1);
    a.prec.at(0, 0, 0) = Rational(p);
    a.succ.at(0, 0, 0) = Rational(s);
    return a;
}

DendriformAlgebra ddZero(std::size_t n) {
    DendriformAlgebra a;
    a.dim = n;
    a.prec = BilinearOp(n);
    a.succ = BilinearOp(n);
    return a;
}

}  // namespace

TEST_CASE("zero algebra is valid") {
    CHECK(checkDendriform(ddZero(3)).passed());
}

TEST_CASE("one dimensional instances are valid exactly when p q = 0") {
    // hand elimination of the three axioms on a single basis vector leaves pq = 0
    for (int p = -2; p <= 2; ++p)
        for (int s = -2; s <= 2; ++s)
            CHECK(checkDendriform(dd1(p, s)).passed() == (p * s == 0));
}

TEST_CASE("everything in the prec slot is a valid embedding") {
    // e prec e = e, succ = 0: all three axioms hold
    Report r = checkDendriform(dd1(1, 0));
    CHECK(r.passed());
    CHECK(checkDendriform(dd1(0, 1)).passed());
}

TEST_CASE("a failing instance reports the exact residual") {
    Report r = checkDendriform(dd1(1, 1));
    CHECK(!r.passed());
    // first axiom at the unique triple: (e<e)<e - e<(e*e) = e - 2e
    bool found = false;
    for (const auto& v : r.violations)
        if (v.tag == "dd.ax1" && v.index == std::vector<std::size_t>{0, 0, 0}) {
            found = true;
            CHECK(v.residual == Vec{Rational(-1)});
        }
    CHECK(found);
}

TEST_CASE("the sum product is associative for valid instances") {
    DendriformAlgebra a = dd1(3, 0);
    CHECK(checkAssociative(assocOf(a)).passed());
    CHECK(assocOf(a) == a.star());
    CHECK(a.star().at(0, 0, 0) == Rational(3));

    BilinearOp bad(1);
    bad.at(0, 0, 0) = Rational(1);
    CHECK(checkAssociative(bad).passed());  // 1-dim idempotent is associative
}

TEST_CASE("regular bimodule of a valid algebra is valid") {
    DendriformAlgebra a = dd1(0, 1);
    DDBimodule m = regularDDBimodule(a);
    CHECK(m.algebraDim == 1);
    CHECK(m.moduleDim == 1);
    CHECK(checkDDBimodule(a, m).passed());

    // swapping the two left families breaks it
    DDBimodule swapped = m;
    std::swap(swapped.lPrec, swapped.lSucc);
    CHECK(!checkDDBimodule(a, swapped).passed());
}

TEST_CASE("dual of the regular bimodule") {
    DendriformAlgebra a = dd1(0, 1);
    DDBimodule d = dualDDBimodule(regularDDBimodule(a));
    CHECK(d.lPrec[0].at(0, 0) == Rational(-1));
    CHECK(d.rPrec[0].at(0, 0) == Rational(1));
    CHECK(d.lSucc[0].at(0, 0) == Rational(1));
    CHECK(d.rSucc[0].at(0, 0) == Rational(0));
    CHECK(checkDDBimodule(a, d).passed());
}

TEST_CASE("duality preserves validity for all small instances") {
    for (int p = -1; p <= 1; ++p)
        for (int s = -1; s <= 1; ++s) {
            if (p * s != 0) continue;
            DendriformAlgebra a = dd1(p, s);
            CHECK(checkDDBimodule(a, dualDDBimodule(regularDDBimodule(a))).passed());
        }
}

TEST_CASE("action matrices of arbitrary elements") {
    DendriformAlgebra a = dd1(2, 0);
    DDBimodule m = regularDDBimodule(a);
    Vec x{Rational(5)};
    CHECK(m.lPrecOf(x).at(0, 0) == Rational(10));
    CHECK(m.rPrecOf(x).at(0, 0) == Rational(10));
    CHECK(m.lSuccOf(x).at(0, 0) == Rational(0));
    CHECK(m.rSuccOf(x).at(0, 0) == Rational(0));
    CHECK(m.lStar(0) == m.lPrec[0] + m.lSucc[0]);
}

TEST_CASE("standard pairing is a 2-cocycle of the split glued algebra") {
    // vertical two-part collapse of the glued dim-1 algebra: e1 prec e0 = e1,
    // e0 succ e0 = e0 on the basis (e, e-dual)
    DendriformAlgebra d = ddZero(2);
    d.prec.at(1, 0, 1) = Rational(1);
    d.succ.at(0, 0, 0) = Rational(1);
    CHECK(checkDendriform(d).passed());
    CHECK(checkDD2Cocycle(d, standardPairingForm(1)).passed());
    CHECK(checkManinDD(d, 1).passed());

    // scaling one gram entry breaks the cocycle identity
    BilinearForm off = standardPairingForm(1);
    off.gram.at(0, 1) = Rational(2);
    CHECK(!checkDD2Cocycle(d, off).passed());
}

TEST_CASE("matched pair with one-sided actions glues to the semidirect sum") {
    DendriformAlgebra a = dd1(0, 1);
    DDMatchedPairData mp;
    mp.a = a;
    mp.b = ddZero(1);
    mp.aOnB = dualDDBimodule(regularDDBimodule(a));
    mp.bOnA = DDBimodule{1, 1, {Matrix(1, 1)}, {Matrix(1, 1)}, {Matrix(1, 1)},
                         {Matrix(1, 1)}};
    DDBowtieResult bow = buildDDBowtie(mp);
    CHECK(bow.report.passed());
    CHECK(bow.algebra.dim == 2);
    // cross products read off the dual action family (-1, 1, 1, 0)
    CHECK(bow.algebra.prec.at(0, 1, 1) == Rational(-1));  // e0 prec e1
    CHECK(bow.algebra.prec.at(1, 0, 1) == Rational(1));   // e1 prec e0
    CHECK(bow.algebra.succ.at(0, 1, 1) == Rational(1));
    CHECK(bow.algebra.succ.at(1, 0, 1) == Rational(0));
}

TEST_CASE("standard pairing form") {
    BilinearForm b = standardPairingForm(2);
    CHECK(b.dim == 4);
    CHECK(b.symmetric());
    CHECK(b.nondegenerate());
    CHECK(b.gram.at(0, 2) == Rational(1));
    CHECK(b.gram.at(2, 0) == Rational(1));
    CHECK(b.gram.at(0, 0) == Rational(0));
    CHECK(b.gram.at(0, 1) == Rational(0));
}

TEST_CASE("op homomorphism checker") {
    DendriformAlgebra a = dd1(1, 0);
    LinearMap id{1, 1, Matrix::identity(1)};
    CHECK(checkOpHomomorphism(id, {&a.prec, &a.succ}, {&a.prec, &a.succ},
                              {"prec", "succ"})
              .passed());
    // doubling the map breaks multiplicativity: f(xy) = 2xy but f(x)f(y) = 4xy
    LinearMap twice{1, 1, Rational(2) * Matrix::identity(1)};
    Report r = checkOpHomomorphism(twice, {&a.prec}, {&a.prec}, {"prec"});
    CHECK(!r.passed());
    CHECK(r.violations[0].tag == "hom.prec");
}
