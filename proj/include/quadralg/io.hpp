#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "quadralg/bialgebra.hpp"
#include "quadralg/operators.hpp"
#include "quadralg/quadri.hpp"

namespace quadralg {

using Json = nlohmann::json;

// Anything wrong with a file before the math starts: unreadable, bad JSON,
// unknown kind or version, wrong shapes, bad scalars.
class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DocKind {
    Dendriform,
    Quadri,
    Bialgebra,
    Tensor,
    Form,
    Operator,
    Bimodule,
    Associative,
};

const char* docKindName(DocKind kind);
std::optional<DocKind> parseDocKind(const std::string& s);

struct OperatorDoc {
    Matrix matrix;
    std::optional<Rational> weight;
};

struct BimoduleDoc {
    std::optional<DDBimodule> dd;
    std::optional<QuadriBimodule> quadri;
};

// One file, one payload; exactly the member matching kind is set.
struct Document {
    DocKind kind = DocKind::Quadri;
    std::string version = "1";
    std::optional<DendriformAlgebra> dendriform;
    std::optional<QuadriAlgebra> quadri;
    std::optional<QuadriBialgebra> bialgebra;
    std::optional<TensorElement> tensor;
    std::optional<BilinearForm> form;
    std::optional<OperatorDoc> op;
    std::optional<BimoduleDoc> bimodule;
    std::optional<BilinearOp> associative;
};

Matrix matrixFromJson(const Json& j);
Json matrixToJson(const Matrix& m);
BilinearOp cubeFromJson(const Json& j);
Json cubeToJson(const BilinearOp& c);

Document documentFromJson(const Json& j);
Json documentToJson(const Document& d);
Document loadDocument(const std::string& path);

Document makeDocument(const DendriformAlgebra& a);
Document makeDocument(const QuadriAlgebra& q);
Document makeDocument(const QuadriBialgebra& qb);
Document makeDocument(const TensorElement& t);
Document makeFormDocument(const BilinearForm& b);
Document makeOperatorDocument(const Matrix& m, std::optional<Rational> weight);
Document makeBimoduleDocument(const DDBimodule& m);
Document makeBimoduleDocument(const QuadriBimodule& m);
Document makeAssociativeDocument(const BilinearOp& mul);

Json reportToJson(const Report& rep);
Report reportFromJson(const Json& j);

// Human rendering; halfDim > 0 labels indices past it as dual basis e_i*.
std::string renderReportText(const Report& rep, std::size_t halfDim = 0);

extern const char* const kCheckerVersion;

// Stable fingerprint of the violation list (FNV-1a over its compact JSON).
std::string residualDigest(const Report& rep);

struct CatalogRecord {
    std::string name;
    QuadriAlgebra algebra;
    TensorElement tensor;
    bool nondegenerate = false;
    std::string digest;
    std::string checker;
};

Json catalogRecordToJson(const CatalogRecord& rec);
CatalogRecord catalogRecordFromJson(const Json& j);
std::vector<CatalogRecord> loadCatalog(const std::string& path);

}  // namespace quadralg
