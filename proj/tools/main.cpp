#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadralg/io.hpp"
#include "quadralg/search.hpp"

using namespace quadralg;

namespace {

std::string baseName(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

Document loadAs(DocKind kind, const std::string& path) {
    Document d = loadDocument(path);
    if (d.kind != kind)
        throw ParseError(path + ": expected a " + std::string(docKindName(kind)) +
                         " document, found " + docKindName(d.kind));
    return d;
}

std::vector<Rational> parseEntryList(const std::string& s) {
    std::vector<Rational> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        if (cur.empty()) throw ParseError("empty entry in coefficient list");
        out.push_back(Rational::parse(cur));
    }
    if (out.empty()) throw ParseError("empty coefficient list");
    return out;
}

std::optional<std::vector<bool>> parseMask(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::vector<bool> m;
    for (char c : s) {
        if (c != '0' && c != '1') throw ParseError("mask must be a string of 0s and 1s");
        m.push_back(c == '1');
    }
    return m;
}

void printReport(const Report& rep, const std::string& format, std::size_t halfDim) {
    if (format == "text")
        std::cout << renderReportText(rep, halfDim);
    else
        std::cout << reportToJson(rep).dump(2) << "\n";
}

Report validityReport(const Document& d) {
    Report rep;
    switch (d.kind) {
        case DocKind::Dendriform:
            return checkDendriform(*d.dendriform);
        case DocKind::Quadri:
            return checkQuadri(*d.quadri);
        case DocKind::Bialgebra:
            rep.absorb(checkQuadri(d.bialgebra->algebra), "algebra");
            rep.absorb(checkQuadriCoalgebra(d.bialgebra->coalgebra), "coalgebra");
            rep.absorb(checkBialgebraCompat(*d.bialgebra), "compat");
            return rep;
        case DocKind::Tensor:
            rep.notes.push_back(d.tensor->skew() ? "skew" : "not skew");
            rep.notes.push_back(d.tensor->coeffs.inverse() ? "nondegenerate"
                                                           : "degenerate");
            return rep;
        case DocKind::Form:
            if (d.form->symmetric())
                rep.notes.push_back("symmetric");
            else if (d.form->skew())
                rep.notes.push_back("skew");
            else
                rep.notes.push_back("neither symmetric nor skew");
            rep.notes.push_back(d.form->nondegenerate() ? "nondegenerate"
                                                        : "degenerate");
            return rep;
        case DocKind::Operator:
            if (d.op->matrix.rows() != d.op->matrix.cols())
                rep.flag("operator.square", {d.op->matrix.rows(), d.op->matrix.cols()},
                         {});
            if (d.op->weight) rep.notes.push_back("weight " + d.op->weight->str());
            return rep;
        case DocKind::Associative:
            return checkAssociative(*d.associative);
        case DocKind::Bimodule:
            throw ParseError("check bimodule needs an algebra file and a module file");
    }
    return rep;
}

int runCheck(const std::string& kindStr, const std::vector<std::string>& files,
             const std::string& format) {
    const auto kind = parseDocKind(kindStr);
    if (!kind) throw ParseError("unknown document kind \"" + kindStr + "\"");

    bool allPass = true;
    auto emit = [&](const std::string& file, const Report& rep) {
        if (format == "text") {
            std::cout << "== " << baseName(file) << " ==\n"
                      << renderReportText(rep, 0);
        } else {
            Json j;
            j["file"] = baseName(file);
            j["report"] = reportToJson(rep);
            std::cout << j.dump() << "\n";
        }
        allPass = allPass && rep.passed();
    };

    if (*kind == DocKind::Bimodule) {
        if (files.size() != 2)
            throw ParseError("check bimodule needs exactly two files: algebra, module");
        const Document mod = loadAs(DocKind::Bimodule, files[1]);
        Report rep;
        if (mod.bimodule->dd) {
            const Document alg = loadAs(DocKind::Dendriform, files[0]);
            rep = checkDDBimodule(*alg.dendriform, *mod.bimodule->dd);
        } else {
            const Document alg = loadAs(DocKind::Quadri, files[0]);
            rep = checkQuadriBimodule(*alg.quadri, *mod.bimodule->quadri);
        }
        emit(files[1], rep);
        return allPass ? 0 : 1;
    }

    for (const std::string& f : files) emit(f, validityReport(loadAs(*kind, f)));
    return allPass ? 0 : 1;
}

int runDerive(const std::string& mode, const std::string& file) {
    const Document d = loadDocument(file);
    // A bialgebra document carries a four-part algebra; projections read it.
    const QuadriAlgebra* four = d.kind == DocKind::Quadri ? &*d.quadri
                                : d.kind == DocKind::Bialgebra ? &d.bialgebra->algebra
                                                               : nullptr;
    Document out;
    if (mode == "vertical" || mode == "horizontal") {
        if (!four)
            throw ParseError("derive " + mode + " needs a quadri or bialgebra document");
        out = makeDocument(projectDD(
            *four, mode == "vertical" ? DDFlavor::Vertical : DDFlavor::Horizontal));
    } else if (mode == "assoc") {
        if (d.kind == DocKind::Dendriform)
            out = makeAssociativeDocument(assocOf(*d.dendriform));
        else if (four)
            out = makeAssociativeDocument(derivedOps(*four).star);
        else
            throw ParseError(
                "derive assoc needs a dendriform, quadri, or bialgebra document");
    } else if (mode == "dual") {
        if (d.kind == DocKind::Bialgebra)
            out = makeDocument(dualBialgebra(*d.bialgebra));
        else if (d.kind == DocKind::Bimodule && d.bimodule->dd)
            out = makeBimoduleDocument(dualDDBimodule(*d.bimodule->dd));
        else if (d.kind == DocKind::Bimodule)
            out = makeBimoduleDocument(dualQuadriBimodule(*d.bimodule->quadri));
        else
            throw ParseError("derive dual needs a bialgebra or bimodule document");
    } else {
        throw ParseError("unknown derive mode \"" + mode + "\"");
    }
    std::cout << documentToJson(out).dump(2) << "\n";
    return 0;
}

int runQeqCheck(const std::string& algebraFile, const std::string& tensorFile,
                const std::string& format) {
    const Document a = loadAs(DocKind::Quadri, algebraFile);
    const Document t = loadAs(DocKind::Tensor, tensorFile);
    const Report rep = checkQEquation(*a.quadri, *t.tensor);
    printReport(rep, format, 0);
    return rep.passed() ? 0 : 1;
}

int runQeqSearch(const std::string& algebraFile, const std::string& entries,
                 const std::string& maskStr, std::uint64_t seed, std::size_t budget,
                 bool skew, bool nondegenerate, const std::string& catalogPath) {
    const Document a = loadAs(DocKind::Quadri, algebraFile);
    const auto mask = parseMask(maskStr);
    const QSolutionSearch found = searchQSolutions(
        *a.quadri, parseEntryList(entries), budget, skew, nondegenerate, mask, seed);

    Json j;
    j["exhaustive"] = found.exhaustive;
    j["candidates"] = found.candidatesExamined;
    j["coverage"] = found.coverage.str();
    Json sols = Json::array();
    for (const TensorElement& r : found.solutions)
        sols.push_back(documentToJson(makeDocument(r)));
    j["solutions"] = std::move(sols);
    std::cout << j.dump(2) << "\n";

    if (!catalogPath.empty()) {
        std::ofstream outFile(catalogPath);
        if (!outFile) throw ParseError("cannot write " + catalogPath);
        std::size_t idx = 0;
        for (const TensorElement& r : found.solutions) {
            CatalogRecord rec;
            std::ostringstream name;
            name << "hit-";
            name.width(4);
            name.fill('0');
            name << ++idx;
            rec.name = name.str();
            rec.algebra = *a.quadri;
            rec.tensor = r;
            rec.nondegenerate = r.coeffs.inverse().has_value();
            rec.digest = residualDigest(checkQEquation(*a.quadri, r));
            rec.checker = kCheckerVersion;
            outFile << catalogRecordToJson(rec).dump() << "\n";
        }
    }
    return 0;
}

int runDouble(const std::vector<std::string>& files, const std::string& outPath,
              const std::string& format) {
    QuadriBialgebra qb;
    if (files.size() == 1) {
        qb = *loadAs(DocKind::Bialgebra, files[0]).bialgebra;
    } else if (files.size() == 2) {
        const Document a = loadAs(DocKind::Quadri, files[0]);
        const Document t = loadAs(DocKind::Tensor, files[1]);
        qb.algebra = *a.quadri;
        qb.coalgebra = coboundaryComults(*a.quadri, *t.tensor);
    } else {
        throw ParseError("double needs one bialgebra file or algebra + tensor files");
    }
    const DrinfeldDouble dd = drinfeldDouble(qb);
    {
        std::ofstream outFile(outPath);
        if (!outFile) throw ParseError("cannot write " + outPath);
        outFile << documentToJson(makeDocument(QuadriBialgebra{dd.algebra, dd.coalgebra}))
                       .dump(2)
                << "\n";
    }
    printReport(dd.report, format, dd.halfDim);
    return dd.report.passed() ? 0 : 1;
}

OpFamilyAlgebra opFamilyOf(const Document& d) {
    switch (d.kind) {
        case DocKind::Dendriform: return opFamily(*d.dendriform);
        case DocKind::Quadri: return opFamily(*d.quadri);
        case DocKind::Associative: return opFamilyAssociative(*d.associative);
        default:
            throw ParseError(
                "operator checks need a dendriform, quadri, or associative document");
    }
}

int runRbCheck(const std::string& algebraFile, const std::string& opFile,
               const std::string& lambdaStr, const std::string& format) {
    const Document a = loadDocument(algebraFile);
    const Document p = loadAs(DocKind::Operator, opFile);
    Rational lambda;
    if (!lambdaStr.empty())
        lambda = Rational::parse(lambdaStr);
    else if (p.op->weight)
        lambda = *p.op->weight;
    const Report rep = checkRotaBaxter(opFamilyOf(a), p.op->matrix, lambda);
    printReport(rep, format, 0);
    return rep.passed() ? 0 : 1;
}

int runNijCheck(const std::string& algebraFile, const std::string& opFile,
                const std::string& format) {
    const Document a = loadDocument(algebraFile);
    const Document p = loadAs(DocKind::Operator, opFile);
    const Report rep = checkNijenhuis(opFamilyOf(a), p.op->matrix);
    printReport(rep, format, 0);
    return rep.passed() ? 0 : 1;
}

int runOCheck(const std::string& algebraFile, const std::string& moduleFile,
              const std::string& opFile, const std::string& format) {
    const Document mod = loadAs(DocKind::Bimodule, moduleFile);
    const Document p = loadAs(DocKind::Operator, opFile);
    Report rep;
    if (mod.bimodule->dd) {
        const Document a = loadAs(DocKind::Dendriform, algebraFile);
        const LinearMap t{mod.bimodule->dd->moduleDim, a.dendriform->dim,
                          p.op->matrix};
        if (t.m.rows() != t.dstDim || t.m.cols() != t.srcDim)
            throw ParseError("operator matrix shape does not match module and algebra");
        rep = checkOOperator(*a.dendriform, *mod.bimodule->dd, t);
    } else {
        const Document a = loadAs(DocKind::Quadri, algebraFile);
        const LinearMap t{mod.bimodule->quadri->moduleDim, a.quadri->dim, p.op->matrix};
        if (t.m.rows() != t.dstDim || t.m.cols() != t.srcDim)
            throw ParseError("operator matrix shape does not match module and algebra");
        rep = checkOOperator(*a.quadri, *mod.bimodule->quadri, t);
    }
    printReport(rep, format, 0);
    return rep.passed() ? 0 : 1;
}

int runFamily(const std::string& algebraFile, const std::string& tensorFile,
              const std::string& kindStr, const std::string& lambdaStr,
              const std::string& kStr, const std::string& k1Str,
              const std::string& k2Str, const std::string& outPath) {
    const Document a = loadAs(DocKind::Quadri, algebraFile);
    const Document t = loadAs(DocKind::Tensor, tensorFile);
    const auto kind = parseFamilyKind(kindStr);
    if (!kind) throw ParseError("unknown family kind \"" + kindStr + "\"");
    RBFamilyParams params;
    if (!lambdaStr.empty()) params.lambda = Rational::parse(lambdaStr);
    if (!kStr.empty()) params.k = Rational::parse(kStr);
    if (!k1Str.empty()) params.k1 = Rational::parse(k1Str);
    if (!k2Str.empty()) params.k2 = Rational::parse(k2Str);

    const QuadriAlgebra qd = doubleFromR(*a.quadri, *t.tensor);
    const Matrix p = rbFamily(*kind, params, qd, *t.tensor);
    const Rational weight = rbFamilyWeight(*kind, params);
    const Document doc = makeOperatorDocument(p, weight);
    if (outPath.empty()) {
        std::cout << documentToJson(doc).dump(2) << "\n";
    } else {
        std::ofstream outFile(outPath);
        if (!outFile) throw ParseError("cannot write " + outPath);
        outFile << documentToJson(doc).dump(2) << "\n";
        Json j;
        j["kind"] = familyKindName(*kind);
        j["weight"] = weight.str();
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int runReport(const std::string& file, const std::string& format,
              std::size_t halfDim) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(file + ": " + e.what());
    }
    const Report rep = reportFromJson(j);
    printReport(rep, format, halfDim);
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker and builder for four-product algebras"};
    app.require_subcommand(1);
    int code = 0;

    std::string format = "json";
    const auto formatCheck = CLI::IsMember({"json", "text"});

    // check
    std::string checkKind;
    std::vector<std::string> checkFiles;
    auto* check = app.add_subcommand("check", "validate documents");
    check->add_option("kind", checkKind, "document kind")->required();
    check->add_option("files", checkFiles, "document files")->required()->expected(-1);
    check->add_option("--format", format)->check(formatCheck);
    check->callback([&] { code = runCheck(checkKind, checkFiles, format); });

    // derive
    std::string deriveMode, deriveFile;
    auto* derive = app.add_subcommand("derive", "derive one structure from another");
    derive->add_option("mode", deriveMode, "vertical|horizontal|assoc|dual")->required();
    derive->add_option("file", deriveFile)->required();
    derive->callback([&] { code = runDerive(deriveMode, deriveFile); });

    // qeq check / qeq search
    auto* qeq = app.add_subcommand("qeq", "the defining tensor equation");
    qeq->require_subcommand(1);
    std::string qeqAlgebra, qeqTensor;
    auto* qeqCheck = qeq->add_subcommand("check", "test one tensor");
    qeqCheck->add_option("algebra", qeqAlgebra)->required();
    qeqCheck->add_option("tensor", qeqTensor)->required();
    qeqCheck->add_option("--format", format)->check(formatCheck);
    qeqCheck->callback([&] { code = runQeqCheck(qeqAlgebra, qeqTensor, format); });

    std::string searchAlgebra, searchEntries = "-1,0,1", searchMask, searchCatalog;
    std::uint64_t searchSeed = 0;
    std::size_t searchBudget = 100000;
    bool searchSkew = false, searchNondeg = false;
    auto* qeqSearch = qeq->add_subcommand("search", "search tensors over a finite set");
    qeqSearch->add_option("algebra", searchAlgebra)->required();
    qeqSearch->add_option("--entries", searchEntries, "comma-separated scalars");
    qeqSearch->add_option("--mask", searchMask, "row-major 0/1 entry mask");
    qeqSearch->add_option("--seed", searchSeed);
    qeqSearch->add_option("--budget", searchBudget);
    qeqSearch->add_flag("--skew", searchSkew, "search skew tensors only");
    qeqSearch->add_flag("--nondegenerate", searchNondeg, "keep invertible hits only");
    qeqSearch->add_option("--catalog", searchCatalog, "write hits as one record per line");
    qeqSearch->callback([&] {
        code = runQeqSearch(searchAlgebra, searchEntries, searchMask, searchSeed,
                            searchBudget, searchSkew, searchNondeg, searchCatalog);
    });

    // double
    std::vector<std::string> doubleFiles;
    std::string doubleOut;
    auto* dbl = app.add_subcommand("double", "build the double of a bialgebra");
    dbl->add_option("files", doubleFiles, "bialgebra, or algebra + tensor")
        ->required()
        ->expected(1, 2);
    dbl->add_option("-o,--output", doubleOut, "where to write the double")->required();
    dbl->add_option("--format", format)->check(formatCheck);
    dbl->callback([&] { code = runDouble(doubleFiles, doubleOut, format); });

    // op rb-check / nij-check / o-check / family
    auto* op = app.add_subcommand("op", "linear operator checks and families");
    op->require_subcommand(1);

    std::string opAlgebra, opOperator, opLambda;
    auto* rb = op->add_subcommand("rb-check", "weighted operator identity");
    rb->add_option("algebra", opAlgebra)->required();
    rb->add_option("operator", opOperator)->required();
    rb->add_option("--lambda", opLambda, "weight, overrides the document");
    rb->add_option("--format", format)->check(formatCheck);
    rb->callback([&] { code = runRbCheck(opAlgebra, opOperator, opLambda, format); });

    auto* nij = op->add_subcommand("nij-check", "deformation operator identity");
    nij->add_option("algebra", opAlgebra)->required();
    nij->add_option("operator", opOperator)->required();
    nij->add_option("--format", format)->check(formatCheck);
    nij->callback([&] { code = runNijCheck(opAlgebra, opOperator, format); });

    std::string opModule;
    auto* oop = op->add_subcommand("o-check", "module-intertwining identity");
    oop->add_option("algebra", opAlgebra)->required();
    oop->add_option("module", opModule)->required();
    oop->add_option("operator", opOperator)->required();
    oop->add_option("--format", format)->check(formatCheck);
    oop->callback([&] { code = runOCheck(opAlgebra, opModule, opOperator, format); });

    std::string famTensor, famKind, famK, famK1, famK2, famOut;
    auto* fam = op->add_subcommand("family", "named operator families on a double");
    fam->add_option("algebra", opAlgebra)->required();
    fam->add_option("tensor", famTensor)->required();
    fam->add_option("--kind", famKind, "F1..G3, with optional +/-")->required();
    fam->add_option("--lambda", opLambda);
    fam->add_option("--k", famK);
    fam->add_option("--k1", famK1);
    fam->add_option("--k2", famK2);
    fam->add_option("-o,--output", famOut);
    fam->callback([&] {
        code = runFamily(opAlgebra, famTensor, famKind, opLambda, famK, famK1, famK2,
                         famOut);
    });

    // report
    std::string reportFile;
    std::size_t reportHalfDim = 0;
    auto* rpt = app.add_subcommand("report", "re-render a stored report");
    rpt->add_option("file", reportFile)->required();
    rpt->add_option("--format", format)->check(formatCheck);
    rpt->add_option("--half-dim", reportHalfDim, "label indices past this as duals");
    rpt->callback([&] { code = runReport(reportFile, format, reportHalfDim); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int c = app.exit(e);
        return c == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ReportError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
