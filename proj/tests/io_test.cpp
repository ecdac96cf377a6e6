#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <string>

#include "quadralg/io.hpp"

using namespace quadralg;

namespace {

QuadriAlgebra famA() {
    QuadriAlgebra q;
    q.dim = 2;
    q.nw = BilinearOp(2);
    q.ne = BilinearOp(2);
    q.sw = BilinearOp(2);
    q.se = BilinearOp(2);
    for (std::size_t i = 0; i < 2; ++i) {
        q.nw.at(i, 0, i) = Rational(1);
        q.sw.at(i, 0, i) = Rational(-1);
        q.se.at(i, 0, i) = Rational(1);
    }
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

Document roundTrip(const Document& d) { return documentFromJson(documentToJson(d)); }

}  // namespace

TEST_CASE("matrix and cube json round-trips") {
    Matrix m(2, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(1, 2) = Rational(-7);
    Matrix m2 = matrixFromJson(matrixToJson(m));
    CHECK(m2 == m);
    CHECK(m2.rows() == 2);
    CHECK(m2.cols() == 3);

    BilinearOp c(2);
    c.at(0, 1, 1) = Rational(5, 3);
    CHECK(cubeFromJson(cubeToJson(c)) == c);

    // scalars are fraction strings; bare json numbers are refused so that
    // nothing ever passes through a double
    Json j = Json::array({Json::array({"1/2", "3"})});
    Matrix parsed = matrixFromJson(j);
    CHECK(parsed.at(0, 0) == Rational(1, 2));
    CHECK(parsed.at(0, 1) == Rational(3));

    CHECK_THROWS_AS(matrixFromJson(Json::array({Json::array({3})})), ParseError);
    CHECK_THROWS_AS(matrixFromJson(Json::array({Json::array({"x"})})), ParseError);
    Json ragged = Json::array({Json::array({1, 2}), Json::array({1})});
    CHECK_THROWS_AS(matrixFromJson(ragged), ParseError);
}

TEST_CASE("document round-trip for every kind") {
    QuadriAlgebra a = famA();

    Document dq = makeDocument(a);
    Document dq2 = roundTrip(dq);
    CHECK(dq2.kind == DocKind::Quadri);
    CHECK(dq2.quadri->nw == a.nw);
    CHECK(dq2.quadri->se == a.se);

    DendriformAlgebra v = projectDD(a, DDFlavor::Vertical);
    Document dd2 = roundTrip(makeDocument(v));
    CHECK(dd2.kind == DocKind::Dendriform);
    CHECK(dd2.dendriform->prec == v.prec);

    QuadriBialgebra qb;
    qb.algebra = a;
    qb.coalgebra = coboundaryComults(a, skew2(1));
    Document db2 = roundTrip(makeDocument(qb));
    CHECK(db2.kind == DocKind::Bialgebra);
    CHECK(db2.bialgebra->coalgebra.alpha == qb.coalgebra.alpha);
    CHECK(db2.bialgebra->coalgebra.betaT == qb.coalgebra.betaT);

    Document dt2 = roundTrip(makeDocument(skew2(-1)));
    CHECK(dt2.kind == DocKind::Tensor);
    CHECK(dt2.tensor->coeffs == skew2(-1).coeffs);

    Document df2 = roundTrip(makeFormDocument(standardPairingForm(2)));
    CHECK(df2.kind == DocKind::Form);
    CHECK(df2.form->gram == standardPairingForm(2).gram);

    Matrix rect(2, 3);
    rect.at(0, 2) = Rational(4);
    Document dop = roundTrip(makeOperatorDocument(rect, Rational(-2)));
    CHECK(dop.kind == DocKind::Operator);
    CHECK(dop.op->matrix == rect);
    CHECK(dop.op->weight == Rational(-2));
    Document dopNoW = roundTrip(makeOperatorDocument(Matrix::identity(2), {}));
    CHECK(!dopNoW.op->weight.has_value());

    Document dmq = roundTrip(makeBimoduleDocument(regularQuadriBimodule(a)));
    CHECK(dmq.kind == DocKind::Bimodule);
    REQUIRE(dmq.bimodule->quadri.has_value());
    CHECK(!dmq.bimodule->dd.has_value());
    CHECK(dmq.bimodule->quadri->lNw == regularQuadriBimodule(a).lNw);
    CHECK(dmq.bimodule->quadri->rSe == regularQuadriBimodule(a).rSe);

    Document dmd = roundTrip(makeBimoduleDocument(regularDDBimodule(v)));
    REQUIRE(dmd.bimodule->dd.has_value());
    CHECK(!dmd.bimodule->quadri.has_value());
    CHECK(dmd.bimodule->dd->lPrec == regularDDBimodule(v).lPrec);

    Document das = roundTrip(makeAssociativeDocument(assocOf(v)));
    CHECK(das.kind == DocKind::Associative);
    CHECK(*das.associative == assocOf(v));
}

TEST_CASE("malformed documents are rejected") {
    Json good = documentToJson(makeDocument(famA()));

    Json badVersion = good;
    badVersion["version"] = "2";
    CHECK_THROWS_AS(documentFromJson(badVersion), ParseError);

    Json badKind = good;
    badKind["kind"] = "pentagon";
    CHECK_THROWS_AS(documentFromJson(badKind), ParseError);

    Json noKind = good;
    noKind.erase("kind");
    CHECK_THROWS_AS(documentFromJson(noKind), ParseError);

    // a ragged payload: one product cube disagrees with the declared dim
    Json badShape = good;
    badShape["ops"]["nw"] = cubeToJson(BilinearOp(3));
    CHECK_THROWS_AS(documentFromJson(badShape), ParseError);

    Json missingOp = good;
    missingOp["ops"].erase("sw");
    CHECK_THROWS_AS(documentFromJson(missingOp), ParseError);

    CHECK_THROWS_AS(loadDocument("/nonexistent/path/x.json"), ParseError);
}

TEST_CASE("kind names parse and print") {
    for (DocKind k : {DocKind::Dendriform, DocKind::Quadri, DocKind::Bialgebra,
                      DocKind::Tensor, DocKind::Form, DocKind::Operator,
                      DocKind::Bimodule, DocKind::Associative}) {
        auto back = parseDocKind(docKindName(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK(!parseDocKind("nonsense").has_value());
}

TEST_CASE("report serialization") {
    Report rep;
    rep.flag("some.rule", {0, 1}, {Rational(1, 2), Rational(0)});
    rep.notes.push_back("tensor is skew");
    Report back = reportFromJson(reportToJson(rep));
    CHECK(back.violations.size() == 1);
    CHECK(back.violations[0].tag == "some.rule");
    CHECK(back.violations[0].index == std::vector<std::size_t>{0, 1});
    CHECK(back.violations[0].residual == Vec{Rational(1, 2), Rational(0)});
    CHECK(back.notes == rep.notes);

    // the passed flag must match the violation list
    Json lying = reportToJson(rep);
    lying["passed"] = true;
    CHECK_THROWS_AS(reportFromJson(lying), ParseError);
}

TEST_CASE("text rendering labels dual coordinates") {
    Report rep;
    rep.flag("quadri.ax1", {0, 3, 1}, {Rational(0), Rational(0), Rational(0), Rational(-1)});
    std::string plain = renderReportText(rep, 0);
    CHECK(plain.find("quadri.ax1") != std::string::npos);
    std::string split = renderReportText(rep, 2);
    CHECK(split.find("e_1*") != std::string::npos);

    Report ok;
    ok.notes.push_back("nondegenerate");
    std::string fine = renderReportText(ok, 0);
    CHECK(fine.find("pass") != std::string::npos);
    CHECK(fine.find("nondegenerate") != std::string::npos);
}

TEST_CASE("violation digests are stable fingerprints") {
    Report a1, a2, b;
    a1.flag("x.y", {1}, {Rational(3)});
    a2.flag("x.y", {1}, {Rational(3)});
    b.flag("x.y", {2}, {Rational(3)});
    std::string d1 = residualDigest(a1);
    CHECK(d1 == residualDigest(a2));
    CHECK(d1 != residualDigest(b));
    CHECK(d1.size() == 16);
    for (char c : d1) CHECK(std::isxdigit(static_cast<unsigned char>(c)));
    // notes do not affect the fingerprint
    a2.notes.push_back("whatever");
    CHECK(residualDigest(a2) == d1);
}

TEST_CASE("catalog records persist") {
    CatalogRecord rec;
    rec.name = "hit-0001";
    rec.algebra = famA();
    rec.tensor = skew2(1);
    rec.nondegenerate = true;
    rec.digest = residualDigest(Report{});
    rec.checker = kCheckerVersion;
    CatalogRecord back = catalogRecordFromJson(catalogRecordToJson(rec));
    CHECK(back.name == rec.name);
    CHECK(back.algebra.nw == rec.algebra.nw);
    CHECK(back.tensor.coeffs == rec.tensor.coeffs);
    CHECK(back.nondegenerate);
    CHECK(back.digest == rec.digest);
    CHECK(back.checker == rec.checker);

    std::string path = "/tmp/quadralg_io_test_catalog.jsonl";
    {
        std::ofstream out(path);
        out << catalogRecordToJson(rec).dump() << "\n\n";  // blank line is skipped
        rec.name = "hit-0002";
        rec.tensor = skew2(-1);
        out << catalogRecordToJson(rec).dump() << "\n";
    }
    std::vector<CatalogRecord> recs = loadCatalog(path);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].name == "hit-0001");
    CHECK(recs[1].name == "hit-0002");
    CHECK(recs[1].tensor.coeffs == skew2(-1).coeffs);
    std::remove(path.c_str());

    CHECK_THROWS_AS(loadCatalog("/nonexistent/catalog.jsonl"), ParseError);
}
