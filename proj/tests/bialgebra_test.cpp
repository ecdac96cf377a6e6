#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "quadralg/bialgebra.hpp"
#include "quadralg/search.hpp"

using namespace quadralg;

namespace {

QuadriAlgebra quadriZero(std::size_t n) {
    QuadriAlgebra q;
    q.dim = n;
    q.nw = BilinearOp(n);
    q.ne = BilinearOp(n);
    q.sw = BilinearOp(n);
    q.se = BilinearOp(n);
    return q;
}

QuadriAlgebra famA() {
    QuadriAlgebra q = quadriZero(2);
    for (std::size_t i = 0; i < 2; ++i) {
        q.nw.at(i, 0, i) = Rational(1);
        q.sw.at(i, 0, i) = Rational(-1);
        q.se.at(i, 0, i) = Rational(1);
    }
    return q;
}

QuadriAlgebra nilp() {
    QuadriAlgebra q = quadriZero(2);
    q.se.at(0, 0, 1) = Rational(1);
    return q;
}

TensorElement skew2(int v) {
    TensorElement r;
    r.dim = 2;
    r.coeffs = Matrix(2, 2);
    r.coeffs.at(0, 1) = Rational(v);
    r.coeffs.at(1, 0) = Rational(-v);
    return r;
}

QuadriCoalgebra zeroCoalgebra(std::size_t n) {
    QuadriCoalgebra c;
    c.dim = n;
    for (std::size_t s = 0; s < n; ++s) {
        c.alpha.push_back(Matrix(n, n));
        c.beta.push_back(Matrix(n, n));
        c.alphaT.push_back(Matrix(n, n));
        c.betaT.push_back(Matrix(n, n));
    }
    return c;
}

QuadriCoalgebra randomCoalgebra(std::size_t n, SplitMix64& rng) {
    QuadriCoalgebra c = zeroCoalgebra(n);
    auto fill = [&](std::vector<Matrix>& ms) {
        for (auto& m : ms)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m.at(i, j) = Rational(static_cast<long>(rng.below(5)) - 2);
    };
    fill(c.alpha);
    fill(c.beta);
    fill(c.alphaT);
    fill(c.betaT);
    return c;
}

QuadriBialgebra famABialgebra(int v) {
    QuadriBialgebra qb;
    qb.algebra = famA();
    qb.coalgebra = coboundaryComults(qb.algebra, skew2(v));
    return qb;
}

// rule number and basis slot of each failure, from either route
std::set<std::pair<int, std::size_t>> coRouteIncidence(const Report& rep) {
    std::set<std::pair<int, std::size_t>> out;
    for (const auto& v : rep.violations)
        out.insert({std::stoi(v.tag.substr(7)), v.index[0]});
    return out;
}

std::set<std::pair<int, std::size_t>> dualRouteIncidence(const Report& rep) {
    std::set<std::pair<int, std::size_t>> out;
    for (const auto& v : rep.violations) {
        int n = std::stoi(v.tag.substr(9));
        for (std::size_t s = 0; s < v.residual.size(); ++s)
            if (!v.residual[s].isZero()) out.insert({n, s});
    }
    return out;
}

}  // namespace

TEST_CASE("dual algebra and coalgebra transpositions invert each other") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        QuadriCoalgebra c = randomCoalgebra(2, rng);
        QuadriCoalgebra back = coalgebraOfDualQuadri(dualQuadriOfCoalgebra(c));
        CHECK(back.alpha == c.alpha);
        CHECK(back.beta == c.beta);
        CHECK(back.alphaT == c.alphaT);
        CHECK(back.betaT == c.betaT);
    }
    QuadriAlgebra q = famA();
    QuadriAlgebra back = dualQuadriOfCoalgebra(coalgebraOfDualQuadri(q));
    CHECK(back.nw == q.nw);
    CHECK(back.ne == q.ne);
    CHECK(back.sw == q.sw);
    CHECK(back.se == q.se);
}

TEST_CASE("both coalgebra routes agree violation for violation") {
    SplitMix64 rng(424242);
    int failedSeen = 0, passedSeen = 0;
    for (int trial = 0; trial < 50; ++trial) {
        QuadriCoalgebra c = randomCoalgebra(2, rng);
        Report direct = checkQuadriCoalgebra(c);
        Report viaDual = checkQuadri(dualQuadriOfCoalgebra(c));
        CHECK(direct.passed() == viaDual.passed());
        CHECK(coRouteIncidence(direct) == dualRouteIncidence(viaDual));
        (direct.passed() ? passedSeen : failedSeen)++;
    }
    // coboundary coalgebras of a valid algebra exercise the passing side
    for (int v = -2; v <= 2; ++v) {
        QuadriCoalgebra c = coboundaryComults(famA(), skew2(v));
        CHECK(checkQuadriCoalgebra(c).passed());
        CHECK(checkQuadri(dualQuadriOfCoalgebra(c)).passed());
        ++passedSeen;
    }
    CHECK(failedSeen > 0);
    CHECK(passedSeen > 0);
}

TEST_CASE("coboundary co-operations of the one-dimensional corner algebra") {
    QuadriAlgebra q = quadriZero(1);
    q.se.at(0, 0, 0) = Rational(1);
    TensorElement r;
    r.dim = 1;
    r.coeffs = Matrix(1, 1);
    r.coeffs.at(0, 0) = Rational(5);
    QuadriCoalgebra c = coboundaryComults(q, r);
    CHECK(c.alpha[0].at(0, 0) == Rational(0));
    CHECK(c.beta[0].at(0, 0) == Rational(5));
    CHECK(c.alphaT[0].at(0, 0) == Rational(5));
    CHECK(c.betaT[0].at(0, 0) == Rational(-5));
}

TEST_CASE("obstruction tensors vanish exactly on solutions") {
    QuadriAlgebra a = famA();
    for (int v : {-1, 0, 1}) {
        QTensors qt = qTensors(a, skew2(v));
        CHECK(qt.q11.isZero());
        CHECK(qt.q12.isZero());
        CHECK(qt.q21.isZero());
        CHECK(qt.q22.isZero());
        CHECK(qt.q31.isZero());
        CHECK(qt.q32.isZero());
        CHECK(checkQEquation(a, skew2(v)).passed());
    }
    QTensors bad = qTensors(nilp(), skew2(1));
    CHECK((!bad.q11.isZero() || !bad.q12.isZero()));
    CHECK(!checkQEquation(nilp(), skew2(1)).passed());
}

TEST_CASE("defining equation reports skewness as a note") {
    Report rep = checkQEquation(famA(), skew2(1));
    REQUIRE(!rep.notes.empty());
    CHECK(rep.notes[0] == "tensor is skew");

    TensorElement sym;
    sym.dim = 2;
    sym.coeffs = Matrix(2, 2);
    sym.coeffs.at(0, 1) = Rational(1);
    Report rep2 = checkQEquation(famA(), sym);
    REQUIRE(!rep2.notes.empty());
    CHECK(rep2.notes[0] == "tensor is not skew");
}

TEST_CASE("operator-form vanishing conditions match the coalgebra check") {
    QuadriAlgebra a = famA();
    SplitMix64 rng(99);
    int disagreeable = 0;
    for (int trial = 0; trial < 30; ++trial) {
        TensorElement r;
        r.dim = 2;
        r.coeffs = Matrix(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r.coeffs.at(i, j) = Rational(static_cast<long>(rng.below(5)) - 2);
        bool direct = checkCoboundaryCoalgebra(a, r).passed();
        bool viaCo = checkQuadriCoalgebra(coboundaryComults(a, r)).passed();
        CHECK(direct == viaCo);
        if (!direct) ++disagreeable;
    }
    CHECK(disagreeable > 0);
    CHECK(checkCoboundaryCoalgebra(a, skew2(1)).passed());
}

TEST_CASE("canonical gluing tensors") {
    TensorElement t = canonicalDoubleTensor(2);
    TensorElement tt = canonicalDoubleTensorTilde(2);
    CHECK(t.dim == 4);
    CHECK(tt.dim == 4);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(t.coeffs.at(i, 2 + i) == Rational(1));
        CHECK(tt.coeffs.at(2 + i, i) == Rational(1));
    }
    CHECK(twist(t).coeffs == tt.coeffs);
}

TEST_CASE("double of the one-dimensional corner algebra") {
    QuadriBialgebra qb;
    qb.algebra = quadriZero(1);
    qb.algebra.se.at(0, 0, 0) = Rational(1);
    qb.coalgebra = zeroCoalgebra(1);
    DrinfeldDouble dd = drinfeldDouble(qb);
    CHECK(dd.halfDim == 1);
    CHECK(dd.report.passed());

    BilinearOp nw(2), ne(2), sw(2), se(2);
    nw.at(0, 1, 1) = Rational(1);
    nw.at(1, 0, 1) = Rational(1);
    ne.at(0, 1, 1) = Rational(-1);
    sw.at(0, 1, 1) = Rational(-1);
    se.at(0, 0, 0) = Rational(1);
    se.at(0, 1, 1) = Rational(1);
    CHECK(dd.algebra.nw == nw);
    CHECK(dd.algebra.ne == ne);
    CHECK(dd.algebra.sw == sw);
    CHECK(dd.algebra.se == se);

    // only one co-operation survives on the dual half
    CHECK(dd.coalgebra.betaT[1].at(1, 1) == Rational(1));
    Matrix betaT1 = dd.coalgebra.betaT[1];
    betaT1.at(1, 1) = Rational(0);
    CHECK(betaT1.isZero());
    CHECK(dd.coalgebra.alpha[0].isZero());
    CHECK(dd.coalgebra.alpha[1].isZero());
}

TEST_CASE("direct assembly from the tensor equals the glued double") {
    QuadriAlgebra a = famA();
    for (int v : {-1, 1}) {
        QuadriBialgebra qb = famABialgebra(v);
        DrinfeldDouble dd = drinfeldDouble(qb);
        CHECK(dd.report.passed());
        QuadriAlgebra direct = doubleFromR(a, skew2(v));
        CHECK(direct.nw == dd.algebra.nw);
        CHECK(direct.ne == dd.algebra.ne);
        CHECK(direct.sw == dd.algebra.sw);
        CHECK(direct.se == dd.algebra.se);

        CHECK(checkManinQuadri(dd.algebra, 2).passed());
        CHECK(checkManinDD(projectDD(dd.algebra, DDFlavor::Vertical), 2).passed());
    }
    TensorElement notSkew;
    notSkew.dim = 2;
    notSkew.coeffs = Matrix(2, 2);
    notSkew.coeffs.at(0, 1) = Rational(1);
    CHECK_THROWS_AS(doubleFromR(a, notSkew), ReportError);
    CHECK_THROWS_AS(doubleFromR(nilp(), skew2(1)), ReportError);
}

TEST_CASE("double rejects an invalid input pair") {
    QuadriBialgebra qb;
    qb.algebra = quadriZero(1);
    qb.algebra.nw.at(0, 0, 0) = Rational(1);
    qb.algebra.se.at(0, 0, 0) = Rational(1);  // nw + se together fail
    qb.coalgebra = zeroCoalgebra(1);
    CHECK_THROWS_AS(drinfeldDouble(qb), ReportError);
}

TEST_CASE("dualizing a pair twice returns the original") {
    QuadriBialgebra qb = famABialgebra(-1);
    QuadriBialgebra back = dualBialgebra(dualBialgebra(qb));
    CHECK(back.algebra.nw == qb.algebra.nw);
    CHECK(back.algebra.ne == qb.algebra.ne);
    CHECK(back.algebra.sw == qb.algebra.sw);
    CHECK(back.algebra.se == qb.algebra.se);
    CHECK(back.coalgebra.alpha == qb.coalgebra.alpha);
    CHECK(back.coalgebra.beta == qb.coalgebra.beta);
    CHECK(back.coalgebra.alphaT == qb.coalgebra.alphaT);
    CHECK(back.coalgebra.betaT == qb.coalgebra.betaT);

    QuadriBialgebra dual = dualBialgebra(qb);
    CHECK(dual.algebra.nw == dualQuadriOfCoalgebra(qb.coalgebra).nw);
    CHECK(checkBialgebraCompat(dual).passed());
}

TEST_CASE("compatibility conditions hold for coboundary pairs") {
    QuadriBialgebra qb = famABialgebra(1);
    CHECK(checkQuadri(qb.algebra).passed());
    CHECK(checkQuadriCoalgebra(qb.coalgebra).passed());
    CHECK(checkBialgebraCompat(qb).passed());
}

TEST_CASE("graph of a solution map is isotropic and closed") {
    QuadriAlgebra a = famA();
    auto asMap = [](const TensorElement& r) {
        return mapOfTensor(r).t;
    };
    for (int v : {-1, 1}) {
        GraphLagrangianResult g = graphLagrangianCheck(a, asMap(skew2(v)));
        CHECK(g.isotropic);
        CHECK(g.closed);
        CHECK(g.skew);
        CHECK(g.qSolution);
        CHECK(g.report.passed());
    }
    GraphLagrangianResult bad = graphLagrangianCheck(nilp(), asMap(skew2(1)));
    CHECK(bad.isotropic);  // skew tensors always give isotropic graphs
    CHECK(!bad.closed);
    CHECK(bad.skew);
    CHECK(!bad.qSolution);
    CHECK(!bad.report.passed());

    TensorElement sym;
    sym.dim = 2;
    sym.coeffs = Matrix(2, 2);
    sym.coeffs.at(0, 0) = Rational(1);
    GraphLagrangianResult symRes = graphLagrangianCheck(a, asMap(sym));
    CHECK(!symRes.isotropic);
    CHECK(!symRes.skew);
}

TEST_CASE("the map of a full solution is a morphism both ways") {
    QuadriAlgebra a = famA();
    CHECK(tRMorphismChecks(a, skew2(-1)).passed());
    CHECK(tRMorphismChecks(a, skew2(1)).passed());
    CHECK_THROWS_AS(tRMorphismChecks(nilp(), skew2(1)), ReportError);
}

TEST_CASE("structure maps between like kinds") {
    QuadriAlgebra a = famA();
    LinearMap id2{2, 2, Matrix::identity(2)};
    CHECK(checkHomomorphism(id2, a, a).passed());

    LinearMap twice{2, 2, Matrix::identity(2) + Matrix::identity(2)};
    Report r = checkHomomorphism(twice, a, a);
    CHECK(!r.passed());

    DendriformAlgebra v = projectDD(a, DDFlavor::Vertical);
    CHECK(checkHomomorphism(id2, v, v).passed());

    QuadriBialgebra qb = famABialgebra(1);
    CHECK(checkHomomorphism(id2, qb, qb).passed());
}

TEST_CASE("negating the co-operations flips the dual products") {
    SplitMix64 rng(5);
    QuadriCoalgebra c = randomCoalgebra(2, rng);
    QuadriCoalgebra n = negateCoalgebra(c);
    QuadriAlgebra qc = dualQuadriOfCoalgebra(c);
    QuadriAlgebra qn = dualQuadriOfCoalgebra(n);
    CHECK(qn.nw == -qc.nw);
    CHECK(qn.se == -qc.se);
    QuadriCoalgebra twiceNeg = negateCoalgebra(n);
    CHECK(twiceNeg.alpha == c.alpha);
    CHECK(twiceNeg.betaT == c.betaT);
}

TEST_CASE("split self-dual map conditions") {
    BilinearForm p = standardPairingForm(1);
    LinearMap id2{2, 2, Matrix::identity(2)};
    CHECK(maninHomomorphismConditions(id2, 1, 1, p, p).passed());

    // swapping the halves moves the first half out of itself
    Matrix swap(2, 2);
    swap.at(0, 1) = Rational(1);
    swap.at(1, 0) = Rational(1);
    CHECK(!maninHomomorphismConditions({2, 2, swap}, 1, 1, p, p).passed());

    // doubling one half breaks the pairing transport but keeps the halves
    Matrix stretch = Matrix::identity(2);
    stretch.at(0, 0) = Rational(2);
    CHECK(!maninHomomorphismConditions({2, 2, stretch}, 1, 1, p, p).passed());
}
