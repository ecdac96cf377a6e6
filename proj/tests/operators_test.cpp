#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "quadralg/operators.hpp"

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

QuadriAlgebra diagSe() {
    QuadriAlgebra q = quadriZero(2);
    q.se.at(0, 0, 0) = Rational(1);
    q.se.at(1, 1, 1) = Rational(1);
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

TensorElement zeroTensor(std::size_t n) {
    TensorElement r;
    r.dim = n;
    r.coeffs = Matrix(n, n);
    return r;
}

const FamilyKind kAllKinds[] = {
    FamilyKind::F1Plus, FamilyKind::F1Minus, FamilyKind::F2Plus,
    FamilyKind::F2Minus, FamilyKind::F3,     FamilyKind::G1Plus,
    FamilyKind::G1Minus, FamilyKind::G2Plus, FamilyKind::G2Minus,
    FamilyKind::G3,
};

bool isG(FamilyKind k) {
    return k == FamilyKind::G1Plus || k == FamilyKind::G1Minus ||
           k == FamilyKind::G2Plus || k == FamilyKind::G2Minus ||
           k == FamilyKind::G3;
}

}  // namespace

TEST_CASE("weighted operator identity, easy instances") {
    OpFamilyAlgebra fam = opFamily(famA());
    CHECK(checkRotaBaxter(fam, Matrix(2, 2), Rational(3)).passed());

    Matrix negLambda = -(Matrix::identity(2) + Matrix::identity(2));
    Report rep = checkRotaBaxter(fam, negLambda, Rational(2));
    CHECK(rep.passed());
    REQUIRE(!rep.notes.empty());
    CHECK(rep.notes[0] == "operator equals -lambda times the identity");

    CHECK(checkNijenhuis(fam, Matrix::identity(2)).passed());
    CHECK(checkNijenhuis(fam, Matrix(2, 2)).passed());
}

TEST_CASE("projection family on a glued double") {
    QuadriAlgebra a = famA();
    TensorElement r = skew2(-1);
    QuadriAlgebra qd = doubleFromR(a, r);
    OpFamilyAlgebra fam = opFamily(qd);
    const Matrix id4 = Matrix::identity(4);

    RBFamilyParams fp{Rational(2), Rational(3), Rational(1), Rational(1)};
    RBFamilyParams gp{Rational(0), Rational(3), Rational(2), Rational(0)};

    for (FamilyKind kind : kAllKinds) {
        CAPTURE(familyKindName(kind));
        const RBFamilyParams& p = isG(kind) ? gp : fp;
        Rational w = rbFamilyWeight(kind, p);
        CHECK(w == (isG(kind) ? Rational(-1) : Rational(2)));

        Matrix n = doubleNijenhuis(qd, r, rbFamilyNijenhuisParams(kind, p));
        CHECK(checkNijenhuis(fam, n).passed());
        CHECK(n * n == (w * w) * id4);

        Matrix proj = rbFamily(kind, p, qd, r);
        CHECK(checkRotaBaxter(fam, proj, w).passed());
        CHECK(proj == nijenhuisToRB(n, w));
        CHECK((proj * proj == proj) == isG(kind));
    }
}

TEST_CASE("square-root conversion guards its precondition") {
    CHECK_THROWS_AS(nijenhuisToRB(Matrix::identity(2), Rational(2)),
                    std::invalid_argument);
    Matrix twice = Matrix::identity(2) + Matrix::identity(2);
    Matrix p = nijenhuisToRB(twice, Rational(2));
    CHECK(p == -twice);  // (-2 id - 2 id) / 2
    CHECK_THROWS_AS(nijenhuisToRB(Matrix(2, 3), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("block operator rejects bad tensors") {
    QuadriAlgebra qd = doubleFromR(famA(), skew2(-1));
    std::array<Rational, 4> quad{Rational(0), Rational(1), Rational(0), Rational(-1)};

    TensorElement sym;
    sym.dim = 2;
    sym.coeffs = Matrix(2, 2);
    sym.coeffs.at(0, 1) = Rational(1);
    CHECK_THROWS_AS(doubleNijenhuis(qd, sym, quad), ReportError);

    // inverting leg requires an invertible tensor
    QuadriAlgebra qd0 = doubleFromR(famA(), zeroTensor(2));
    std::array<Rational, 4> quadInv{Rational(0), Rational(1), Rational(1), Rational(0)};
    CHECK_THROWS_AS(doubleNijenhuis(qd0, zeroTensor(2), quadInv), std::domain_error);

    // a non-solution over the first half is refused even when skew
    QuadriAlgebra dd = doubleFromR(diagSe(), zeroTensor(2));
    CHECK_THROWS_AS(doubleNijenhuis(dd, skew2(1), quad), ReportError);
}

TEST_CASE("family kind names parse and print") {
    const char* names[] = {"F1+", "F1-", "F2+", "F2-", "F3",
                           "G1+", "G1-", "G2+", "G2-", "G3"};
    int i = 0;
    for (FamilyKind kind : kAllKinds) {
        auto parsed = parseFamilyKind(names[i]);
        REQUIRE(parsed.has_value());
        CHECK(*parsed == kind);
        CHECK(std::string(familyKindName(kind)) == names[i]);
        ++i;
    }
    CHECK(parseFamilyKind("F1") == FamilyKind::F1Plus);
    CHECK(parseFamilyKind("G2") == FamilyKind::G2Plus);
    CHECK(!parseFamilyKind("H1").has_value());
    CHECK(!parseFamilyKind("").has_value());
}

TEST_CASE("family parameter constraints") {
    RBFamilyParams zeroK{Rational(2), Rational(0), Rational(1), Rational(1)};
    CHECK_THROWS_AS(rbFamilyNijenhuisParams(FamilyKind::F1Plus, zeroK),
                    std::invalid_argument);
    CHECK_THROWS_AS(rbFamilyNijenhuisParams(FamilyKind::G1Minus, zeroK),
                    std::invalid_argument);

    RBFamilyParams bothZero{Rational(0), Rational(0), Rational(1), Rational(1)};
    CHECK_THROWS_AS(rbFamilyNijenhuisParams(FamilyKind::F2Plus, bothZero),
                    std::invalid_argument);
    // the second G family pins lambda = -1, so k may vanish
    std::array<Rational, 4> g2 =
        rbFamilyNijenhuisParams(FamilyKind::G2Plus, bothZero);
    CHECK(!g2.empty());

    RBFamilyParams zeroK1{Rational(2), Rational(1), Rational(0), Rational(1)};
    CHECK_THROWS_AS(rbFamilyNijenhuisParams(FamilyKind::F3, zeroK1),
                    std::invalid_argument);
    RBFamilyParams k2AtLambda{Rational(2), Rational(1), Rational(1), Rational(2)};
    CHECK_THROWS_AS(rbFamilyNijenhuisParams(FamilyKind::F3, k2AtLambda),
                    std::invalid_argument);
    RBFamilyParams k2AtOne{Rational(0), Rational(1), Rational(1), Rational(1)};
    CHECK_THROWS_AS(rbFamilyNijenhuisParams(FamilyKind::G3, k2AtOne),
                    std::invalid_argument);
}

TEST_CASE("semidirect block operator with fold map") {
    SemidirectNijenhuisResult res = semidirectNijenhuisTheta(
        famA(), {Rational(0), Rational(2), Rational(3), Rational(-2)});
    CHECK(res.report.passed());
    CHECK(res.semidirect.dim == 4);
    CHECK(res.theta.srcDim == 4);
    CHECK(checkDendriform(res.semidirect).passed());
    CHECK(checkNijenhuis(opFamily(res.semidirect), res.op).passed());
}

TEST_CASE("module-relative operator on both kinds") {
    QuadriAlgebra a = famA();
    TensorElement r = skew2(-1);
    LinearMap t{2, 2, r.coeffs};

    QuadriBimodule dual = dualQuadriBimodule(regularQuadriBimodule(a));
    CHECK(checkOOperator(a, dual, t).passed());

    DendriformAlgebra av = projectDD(a, DDFlavor::Vertical);
    CHECK(checkOOperator(av, verticalDualModule(a), t).passed());

    QuadriAlgebra bad = quadriZero(2);
    bad.se.at(0, 0, 1) = Rational(1);
    LinearMap tb{2, 2, skew2(1).coeffs};
    CHECK(!checkOOperator(bad, dualQuadriBimodule(regularQuadriBimodule(bad)), tb)
               .passed());
    CHECK(!checkOOperator(projectDD(bad, DDFlavor::Vertical), verticalDualModule(bad), tb)
               .passed());

    QuadriBimodule corrupt = regularQuadriBimodule(a);
    corrupt.lSe[0].at(0, 0) = Rational(7);
    CHECK_THROWS_AS(checkOOperator(a, corrupt, t), ReportError);
}

TEST_CASE("weighted operator transfers to the total product") {
    // any operator passing on all four parts also passes on their sum
    QuadriAlgebra qd = doubleFromR(famA(), skew2(-1));
    RBFamilyParams fp{Rational(2), Rational(3), Rational(1), Rational(1)};
    Matrix proj = rbFamily(FamilyKind::F1Plus, fp, qd, skew2(-1));
    OpFamilyAlgebra total = opFamilyAssociative(derivedOps(qd).star);
    CHECK(checkRotaBaxter(total, proj, Rational(2)).passed());
}
