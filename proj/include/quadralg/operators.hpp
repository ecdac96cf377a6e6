#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadralg/bialgebra.hpp"
#include "quadralg/quadri.hpp"

namespace quadralg {

// A space with any named collection of bilinear products; the operator
// identities below quantify over every listed product.
struct OpFamilyAlgebra {
    std::size_t dim = 0;
    std::vector<std::pair<std::string, BilinearOp>> ops;
};

OpFamilyAlgebra opFamily(const DendriformAlgebra& a);
OpFamilyAlgebra opFamily(const QuadriAlgebra& q);
OpFamilyAlgebra opFamilyAssociative(const BilinearOp& mul);

// P(x) o P(y) = P(P(x) o y + x o P(y) + lambda x o y) for every product.
// A P equal to -lambda id passes trivially; that case is noted, not flagged.
Report checkRotaBaxter(const OpFamilyAlgebra& a, const Matrix& p,
                       const Rational& lambda);

// N(x) o N(y) = N(N(x) o y + x o N(y) - N(x o y)) for every product, and
// again for the sum of all products.
Report checkNijenhuis(const OpFamilyAlgebra& a, const Matrix& n);

// (-lambda id - N) / 2. Demands N^2 = lambda^2 id exactly.
Matrix nijenhuisToRB(const Matrix& n, const Rational& lambda);

// Block operator (x, a) -> (p1 T a + p2 x, p3 Tinv x + p4 a) on a double
// whose first half carries the algebra the skew solution r lives on. The
// p3 = 0 branch never inverts r; otherwise r must be invertible.
Matrix doubleNijenhuis(const QuadriAlgebra& qd, const TensorElement& r,
                       const std::array<Rational, 4>& params);

enum class FamilyKind {
    F1Plus,
    F1Minus,
    F2Plus,
    F2Minus,
    F3,
    G1Plus,
    G1Minus,
    G2Plus,
    G2Minus,
    G3,
};

// Accepts "F1+", "F1-", ..., "G3"; a bare "F1" means the plus variant.
std::optional<FamilyKind> parseFamilyKind(const std::string& s);
const char* familyKindName(FamilyKind kind);

// k doubles as the single parameter of the first two families; k1, k2
// belong to the third. G kinds ignore lambda (their weight is -1).
struct RBFamilyParams {
    Rational lambda, k, k1, k2;
};

Rational rbFamilyWeight(FamilyKind kind, const RBFamilyParams& p);

// The defining quadruple of the operator's square root. Throws on a
// parameter-constraint violation (first family: k nonzero; second:
// (k, lambda) not both zero; third: k2 distinct from both lambda and
// -lambda, k1 nonzero).
std::array<Rational, 4> rbFamilyNijenhuisParams(FamilyKind kind,
                                                const RBFamilyParams& p);

// The weighted projection family member on the double, assembled from its
// defining quadruple through the weight formula.
Matrix rbFamily(FamilyKind kind, const RBFamilyParams& p, const QuadriAlgebra& qd,
                const TensorElement& r);

struct SemidirectNijenhuisResult {
    DendriformAlgebra semidirect;  // vertical part acting on the full space
    Matrix op;                     // (x, y) -> (p1 y + p2 x, p3 x + p4 y)
    LinearMap theta;               // (x, y) -> (y + x, x)
    Report report;
};

// Builds the vertical-over-itself semidirect sum, the four-parameter block
// operator on it, and the fold isomorphism; certifies the operator and,
// when the self-paired gluing closes, compares against that gluing too.
SemidirectNijenhuisResult semidirectNijenhuisTheta(const QuadriAlgebra& q,
                                                   const std::array<Rational, 4>& params);

// T(u) o T(v) = T(l(T u) v + r(T v) u) on every module-basis pair, per
// product. The module is validated first; an invalid one is an error, not
// a violation.
Report checkOOperator(const DendriformAlgebra& a, const DDBimodule& m,
                      const LinearMap& t);
Report checkOOperator(const QuadriAlgebra& q, const QuadriBimodule& m,
                      const LinearMap& t);

}  // namespace quadralg
