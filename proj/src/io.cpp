#include "quadralg/io.hpp"

#include <fstream>
#include <sstream>

namespace quadralg {

const char* const kCheckerVersion = "quadralg/1";

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

Rational scalarFromJson(const Json& j) {
    if (!j.is_string()) fail("scalar must be a string like \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(std::string("bad scalar: ") + e.what());
    }
}

Json scalarToJson(const Rational& r) { return r.str(); }

std::size_t dimFromJson(const Json& j) {
    if (!j.contains("dim") || !j.at("dim").is_number_unsigned())
        fail("missing or bad \"dim\"");
    const auto d = j.at("dim").get<std::size_t>();
    if (d == 0) fail("\"dim\" must be positive");
    return d;
}

std::vector<Matrix> matrixListFromJson(const Json& j, std::size_t count,
                                       std::size_t side) {
    if (!j.is_array() || j.size() != count) fail("matrix list has wrong length");
    std::vector<Matrix> out;
    for (const Json& e : j) {
        Matrix m = matrixFromJson(e);
        if (m.rows() != side || m.cols() != side) fail("matrix in list has wrong shape");
        out.push_back(std::move(m));
    }
    return out;
}

Json matrixListToJson(const std::vector<Matrix>& ms) {
    Json j = Json::array();
    for (const Matrix& m : ms) j.push_back(matrixToJson(m));
    return j;
}

const char* const kQuadriOpNames[4] = {"nw", "ne", "sw", "se"};
const char* const kComultNames[4] = {"alpha", "beta", "alpha_t", "beta_t"};

}  // namespace

const char* docKindName(DocKind kind) {
    switch (kind) {
        case DocKind::Dendriform: return "dendriform";
        case DocKind::Quadri: return "quadri";
        case DocKind::Bialgebra: return "bialgebra";
        case DocKind::Tensor: return "tensor";
        case DocKind::Form: return "form";
        case DocKind::Operator: return "operator";
        case DocKind::Bimodule: return "bimodule";
        case DocKind::Associative: return "associative";
    }
    return "?";
}

std::optional<DocKind> parseDocKind(const std::string& s) {
    for (DocKind k : {DocKind::Dendriform, DocKind::Quadri, DocKind::Bialgebra,
                      DocKind::Tensor, DocKind::Form, DocKind::Operator,
                      DocKind::Bimodule, DocKind::Associative})
        if (s == docKindName(k)) return k;
    return std::nullopt;
}

Matrix matrixFromJson(const Json& j) {
    if (!j.is_array() || j.empty()) fail("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j.at(0).is_array() || j.at(0).empty()) fail("matrix rows must be nonempty arrays");
    const std::size_t cols = j.at(0).size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != cols) fail("ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalarFromJson(row.at(k));
    }
    return m;
}

Json matrixToJson(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalarToJson(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

BilinearOp cubeFromJson(const Json& j) {
    if (!j.is_array() || j.empty()) fail("cube must be a nonempty nested array");
    const std::size_t d = j.size();
    BilinearOp c(d);
    for (std::size_t i = 0; i < d; ++i) {
        const Json& plane = j.at(i);
        if (!plane.is_array() || plane.size() != d) fail("ragged cube");
        for (std::size_t jj = 0; jj < d; ++jj) {
            const Json& line = plane.at(jj);
            if (!line.is_array() || line.size() != d) fail("ragged cube");
            for (std::size_t k = 0; k < d; ++k) c.at(i, jj, k) = scalarFromJson(line.at(k));
        }
    }
    return c;
}

Json cubeToJson(const BilinearOp& c) {
    Json out = Json::array();
    for (std::size_t i = 0; i < c.dim(); ++i) {
        Json plane = Json::array();
        for (std::size_t j = 0; j < c.dim(); ++j) {
            Json line = Json::array();
            for (std::size_t k = 0; k < c.dim(); ++k)
                line.push_back(scalarToJson(c.at(i, j, k)));
            plane.push_back(std::move(line));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

namespace {

BilinearOp cubeField(const Json& ops, const char* name, std::size_t dim) {
    if (!ops.contains(name)) fail(std::string("missing op \"") + name + "\"");
    BilinearOp c = cubeFromJson(ops.at(name));
    if (c.dim() != dim) fail(std::string("op \"") + name + "\" has wrong dimension");
    return c;
}

QuadriAlgebra quadriFromJson(const Json& j) {
    const std::size_t d = dimFromJson(j);
    if (!j.contains("ops") || !j.at("ops").is_object()) fail("missing \"ops\"");
    const Json& ops = j.at("ops");
    QuadriAlgebra q;
    q.dim = d;
    q.nw = cubeField(ops, "nw", d);
    q.ne = cubeField(ops, "ne", d);
    q.sw = cubeField(ops, "sw", d);
    q.se = cubeField(ops, "se", d);
    return q;
}

Json quadriToJson(const QuadriAlgebra& q) {
    Json ops;
    ops["nw"] = cubeToJson(q.nw);
    ops["ne"] = cubeToJson(q.ne);
    ops["sw"] = cubeToJson(q.sw);
    ops["se"] = cubeToJson(q.se);
    Json j;
    j["dim"] = q.dim;
    j["ops"] = std::move(ops);
    return j;
}

QuadriCoalgebra coalgebraFromJson(const Json& j, std::size_t dim) {
    if (!j.is_object()) fail("\"comults\" must be an object");
    QuadriCoalgebra c;
    c.dim = dim;
    std::vector<Matrix> QuadriCoalgebra::*fields[4] = {
        &QuadriCoalgebra::alpha, &QuadriCoalgebra::beta, &QuadriCoalgebra::alphaT,
        &QuadriCoalgebra::betaT};
    for (int s = 0; s < 4; ++s) {
        if (!j.contains(kComultNames[s]))
            fail(std::string("missing comult \"") + kComultNames[s] + "\"");
        c.*(fields[s]) = matrixListFromJson(j.at(kComultNames[s]), dim, dim);
    }
    return c;
}

Json coalgebraToJson(const QuadriCoalgebra& c) {
    Json j;
    j["alpha"] = matrixListToJson(c.alpha);
    j["beta"] = matrixListToJson(c.beta);
    j["alpha_t"] = matrixListToJson(c.alphaT);
    j["beta_t"] = matrixListToJson(c.betaT);
    return j;
}

}  // namespace

Document documentFromJson(const Json& j) {
    if (!j.is_object()) fail("document must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string()) fail("missing \"kind\"");
    const auto kind = parseDocKind(j.at("kind").get<std::string>());
    if (!kind) fail("unknown kind \"" + j.at("kind").get<std::string>() + "\"");
    if (!j.contains("version") || !j.at("version").is_string())
        fail("missing \"version\"");
    const std::string version = j.at("version").get<std::string>();
    if (version != "1") fail("unrecognized version \"" + version + "\"");

    Document d;
    d.kind = *kind;
    d.version = version;
    switch (*kind) {
        case DocKind::Dendriform: {
            const std::size_t n = dimFromJson(j);
            if (!j.contains("ops") || !j.at("ops").is_object()) fail("missing \"ops\"");
            DendriformAlgebra a;
            a.dim = n;
            a.prec = cubeField(j.at("ops"), "prec", n);
            a.succ = cubeField(j.at("ops"), "succ", n);
            d.dendriform = std::move(a);
            break;
        }
        case DocKind::Quadri:
            d.quadri = quadriFromJson(j);
            break;
        case DocKind::Bialgebra: {
            QuadriBialgebra qb;
            qb.algebra = quadriFromJson(j);
            if (!j.contains("comults")) fail("missing \"comults\"");
            qb.coalgebra = coalgebraFromJson(j.at("comults"), qb.algebra.dim);
            d.bialgebra = std::move(qb);
            break;
        }
        case DocKind::Tensor: {
            const std::size_t n = dimFromJson(j);
            if (!j.contains("matrix")) fail("missing \"matrix\"");
            Matrix m = matrixFromJson(j.at("matrix"));
            if (m.rows() != n || m.cols() != n) fail("tensor matrix has wrong shape");
            d.tensor = TensorElement{n, std::move(m)};
            break;
        }
        case DocKind::Form: {
            const std::size_t n = dimFromJson(j);
            if (!j.contains("matrix")) fail("missing \"matrix\"");
            Matrix m = matrixFromJson(j.at("matrix"));
            if (m.rows() != n || m.cols() != n) fail("form matrix has wrong shape");
            d.form = BilinearForm{n, std::move(m)};
            break;
        }
        case DocKind::Operator: {
            const std::size_t n = dimFromJson(j);
            if (!j.contains("matrix")) fail("missing \"matrix\"");
            OperatorDoc op;
            op.matrix = matrixFromJson(j.at("matrix"));
            if (op.matrix.rows() != n) fail("operator matrix has wrong row count");
            if (j.contains("weight")) op.weight = scalarFromJson(j.at("weight"));
            d.op = std::move(op);
            break;
        }
        case DocKind::Bimodule: {
            if (!j.contains("flavor") || !j.at("flavor").is_string())
                fail("missing \"flavor\"");
            const std::string flavor = j.at("flavor").get<std::string>();
            if (!j.contains("algebra_dim") || !j.at("algebra_dim").is_number_unsigned())
                fail("missing \"algebra_dim\"");
            if (!j.contains("module_dim") || !j.at("module_dim").is_number_unsigned())
                fail("missing \"module_dim\"");
            const auto ad = j.at("algebra_dim").get<std::size_t>();
            const auto md = j.at("module_dim").get<std::size_t>();
            if (ad == 0 || md == 0) fail("bimodule dims must be positive");
            if (!j.contains("actions") || !j.at("actions").is_object())
                fail("missing \"actions\"");
            const Json& acts = j.at("actions");
            BimoduleDoc doc;
            if (flavor == "dendriform") {
                DDBimodule m;
                m.algebraDim = ad;
                m.moduleDim = md;
                const struct {
                    const char* name;
                    std::vector<Matrix> DDBimodule::*fam;
                } fams[4] = {{"l_prec", &DDBimodule::lPrec},
                             {"r_prec", &DDBimodule::rPrec},
                             {"l_succ", &DDBimodule::lSucc},
                             {"r_succ", &DDBimodule::rSucc}};
                for (const auto& f : fams) {
                    if (!acts.contains(f.name))
                        fail(std::string("missing action \"") + f.name + "\"");
                    m.*(f.fam) = matrixListFromJson(acts.at(f.name), ad, md);
                }
                doc.dd = std::move(m);
            } else if (flavor == "quadri") {
                QuadriBimodule m;
                m.algebraDim = ad;
                m.moduleDim = md;
                const struct {
                    const char* name;
                    std::vector<Matrix> QuadriBimodule::*fam;
                } fams[8] = {{"l_nw", &QuadriBimodule::lNw}, {"r_nw", &QuadriBimodule::rNw},
                             {"l_ne", &QuadriBimodule::lNe}, {"r_ne", &QuadriBimodule::rNe},
                             {"l_sw", &QuadriBimodule::lSw}, {"r_sw", &QuadriBimodule::rSw},
                             {"l_se", &QuadriBimodule::lSe}, {"r_se", &QuadriBimodule::rSe}};
                for (const auto& f : fams) {
                    if (!acts.contains(f.name))
                        fail(std::string("missing action \"") + f.name + "\"");
                    m.*(f.fam) = matrixListFromJson(acts.at(f.name), ad, md);
                }
                doc.quadri = std::move(m);
            } else {
                fail("unknown bimodule flavor \"" + flavor + "\"");
            }
            d.bimodule = std::move(doc);
            break;
        }
        case DocKind::Associative: {
            const std::size_t n = dimFromJson(j);
            if (!j.contains("ops") || !j.at("ops").is_object()) fail("missing \"ops\"");
            d.associative = cubeField(j.at("ops"), "mul", n);
            break;
        }
    }
    return d;
}

Json documentToJson(const Document& d) {
    Json j;
    j["kind"] = docKindName(d.kind);
    j["version"] = d.version;
    switch (d.kind) {
        case DocKind::Dendriform: {
            const DendriformAlgebra& a = *d.dendriform;
            j["dim"] = a.dim;
            j["ops"]["prec"] = cubeToJson(a.prec);
            j["ops"]["succ"] = cubeToJson(a.succ);
            break;
        }
        case DocKind::Quadri: {
            Json q = quadriToJson(*d.quadri);
            j.update(q);
            break;
        }
        case DocKind::Bialgebra: {
            Json q = quadriToJson(d.bialgebra->algebra);
            j.update(q);
            j["comults"] = coalgebraToJson(d.bialgebra->coalgebra);
            break;
        }
        case DocKind::Tensor:
            j["dim"] = d.tensor->dim;
            j["matrix"] = matrixToJson(d.tensor->coeffs);
            break;
        case DocKind::Form:
            j["dim"] = d.form->dim;
            j["matrix"] = matrixToJson(d.form->gram);
            break;
        case DocKind::Operator:
            j["dim"] = d.op->matrix.rows();
            j["matrix"] = matrixToJson(d.op->matrix);
            if (d.op->weight) j["weight"] = scalarToJson(*d.op->weight);
            break;
        case DocKind::Bimodule: {
            const BimoduleDoc& doc = *d.bimodule;
            Json acts;
            if (doc.dd) {
                j["flavor"] = "dendriform";
                j["algebra_dim"] = doc.dd->algebraDim;
                j["module_dim"] = doc.dd->moduleDim;
                acts["l_prec"] = matrixListToJson(doc.dd->lPrec);
                acts["r_prec"] = matrixListToJson(doc.dd->rPrec);
                acts["l_succ"] = matrixListToJson(doc.dd->lSucc);
                acts["r_succ"] = matrixListToJson(doc.dd->rSucc);
            } else {
                j["flavor"] = "quadri";
                j["algebra_dim"] = doc.quadri->algebraDim;
                j["module_dim"] = doc.quadri->moduleDim;
                acts["l_nw"] = matrixListToJson(doc.quadri->lNw);
                acts["r_nw"] = matrixListToJson(doc.quadri->rNw);
                acts["l_ne"] = matrixListToJson(doc.quadri->lNe);
                acts["r_ne"] = matrixListToJson(doc.quadri->rNe);
                acts["l_sw"] = matrixListToJson(doc.quadri->lSw);
                acts["r_sw"] = matrixListToJson(doc.quadri->rSw);
                acts["l_se"] = matrixListToJson(doc.quadri->lSe);
                acts["r_se"] = matrixListToJson(doc.quadri->rSe);
            }
            j["actions"] = std::move(acts);
            break;
        }
        case DocKind::Associative:
            j["dim"] = d.associative->dim();
            j["ops"]["mul"] = cubeToJson(*d.associative);
            break;
    }
    return j;
}

Document loadDocument(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(path + ": " + e.what());
    }
    try {
        return documentFromJson(j);
    } catch (const ParseError& e) {
        fail(path + ": " + e.what());
    }
}

Document makeDocument(const DendriformAlgebra& a) {
    Document d;
    d.kind = DocKind::Dendriform;
    d.dendriform = a;
    return d;
}

Document makeDocument(const QuadriAlgebra& q) {
    Document d;
    d.kind = DocKind::Quadri;
    d.quadri = q;
    return d;
}

Document makeDocument(const QuadriBialgebra& qb) {
    Document d;
    d.kind = DocKind::Bialgebra;
    d.bialgebra = qb;
    return d;
}

Document makeDocument(const TensorElement& t) {
    Document d;
    d.kind = DocKind::Tensor;
    d.tensor = t;
    return d;
}

Document makeFormDocument(const BilinearForm& b) {
    Document d;
    d.kind = DocKind::Form;
    d.form = b;
    return d;
}

Document makeOperatorDocument(const Matrix& m, std::optional<Rational> weight) {
    Document d;
    d.kind = DocKind::Operator;
    d.op = OperatorDoc{m, std::move(weight)};
    return d;
}

Document makeBimoduleDocument(const DDBimodule& m) {
    Document d;
    d.kind = DocKind::Bimodule;
    d.bimodule = BimoduleDoc{m, std::nullopt};
    return d;
}

Document makeBimoduleDocument(const QuadriBimodule& m) {
    Document d;
    d.kind = DocKind::Bimodule;
    d.bimodule = BimoduleDoc{std::nullopt, m};
    return d;
}

Document makeAssociativeDocument(const BilinearOp& mul) {
    Document d;
    d.kind = DocKind::Associative;
    d.associative = mul;
    return d;
}

Json reportToJson(const Report& rep) {
    Json j;
    j["passed"] = rep.passed();
    Json vs = Json::array();
    for (const Violation& v : rep.violations) {
        Json e;
        e["tag"] = v.tag;
        e["index"] = v.index;
        Json res = Json::array();
        for (const Rational& r : v.residual) res.push_back(scalarToJson(r));
        e["residual"] = std::move(res);
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    j["notes"] = rep.notes;
    return j;
}

Report reportFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("passed") || !j.contains("violations") ||
        !j.contains("notes"))
        fail("report needs \"passed\", \"violations\", \"notes\"");
    Report rep;
    for (const Json& e : j.at("violations")) {
        Violation v;
        v.tag = e.at("tag").get<std::string>();
        for (const Json& ix : e.at("index")) v.index.push_back(ix.get<std::size_t>());
        for (const Json& r : e.at("residual")) v.residual.push_back(scalarFromJson(r));
        rep.violations.push_back(std::move(v));
    }
    for (const Json& nt : j.at("notes")) rep.notes.push_back(nt.get<std::string>());
    if (j.at("passed").get<bool>() != rep.passed())
        fail("report \"passed\" flag contradicts its violation list");
    return rep;
}

std::string renderReportText(const Report& rep, std::size_t halfDim) {
    auto label = [&](std::size_t v) {
        if (halfDim > 0 && v >= halfDim)
            return "e_" + std::to_string(v - halfDim) + "*";
        return "e_" + std::to_string(v);
    };
    std::ostringstream os;
    os << "status: " << (rep.passed() ? "pass" : "fail") << "\n";
    if (!rep.violations.empty()) {
        os << "violations (" << rep.violations.size() << "):\n";
        for (const Violation& v : rep.violations) {
            os << "  " << v.tag << " at (";
            for (std::size_t i = 0; i < v.index.size(); ++i) {
                if (i) os << ", ";
                os << label(v.index[i]);
            }
            os << ") residual [";
            for (std::size_t i = 0; i < v.residual.size(); ++i) {
                if (i) os << ", ";
                os << v.residual[i].str();
            }
            os << "]\n";
        }
    }
    for (const std::string& nt : rep.notes) os << "note: " << nt << "\n";
    return os.str();
}

std::string residualDigest(const Report& rep) {
    Json vs = reportToJson(rep).at("violations");
    const std::string bytes = vs.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

Json catalogRecordToJson(const CatalogRecord& rec) {
    Json j;
    j["name"] = rec.name;
    j["algebra"] = documentToJson(makeDocument(rec.algebra));
    j["tensor"] = documentToJson(makeDocument(rec.tensor));
    j["nondegenerate"] = rec.nondegenerate;
    j["cert"]["residual_digest"] = rec.digest;
    j["cert"]["checker"] = rec.checker;
    return j;
}

CatalogRecord catalogRecordFromJson(const Json& j) {
    CatalogRecord rec;
    if (!j.is_object() || !j.contains("name") || !j.contains("algebra") ||
        !j.contains("tensor") || !j.contains("cert"))
        fail("catalog record needs name, algebra, tensor, cert");
    rec.name = j.at("name").get<std::string>();
    Document alg = documentFromJson(j.at("algebra"));
    if (alg.kind != DocKind::Quadri) fail("catalog algebra must be a quadri document");
    rec.algebra = *alg.quadri;
    Document ten = documentFromJson(j.at("tensor"));
    if (ten.kind != DocKind::Tensor) fail("catalog tensor must be a tensor document");
    rec.tensor = *ten.tensor;
    rec.nondegenerate = j.value("nondegenerate", false);
    rec.digest = j.at("cert").value("residual_digest", "");
    rec.checker = j.at("cert").value("checker", "");
    return rec;
}

std::vector<CatalogRecord> loadCatalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::vector<CatalogRecord> out;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty()) continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const std::exception& e) {
            fail(path + ":" + std::to_string(lineNo) + ": " + e.what());
        }
        out.push_back(catalogRecordFromJson(j));
    }
    return out;
}

}  // namespace quadralg
