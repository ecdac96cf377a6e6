#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quadralg/quadri.hpp"
#include "quadralg/tensor.hpp"

namespace quadralg {

// Four co-operations, stored as one coefficient matrix per basis element:
// alpha(e_s)[i][j] is the coefficient of e_i (x) e_j.
struct QuadriCoalgebra {
    std::size_t dim = 0;
    std::vector<Matrix> alpha, beta, alphaT, betaT;
};

struct QuadriBialgebra {
    QuadriAlgebra algebra;
    QuadriCoalgebra coalgebra;
};

// Index transposition: the product on the dual space whose structure
// constants read the co-operation matrices backwards,
// nw[i][j][k] = alpha(e_k)[i][j], and ne/sw/se from beta/alphaT/betaT.
QuadriAlgebra dualQuadriOfCoalgebra(const QuadriCoalgebra& c);

// Writes a four-part algebra back as the coalgebra its dual route would
// produce (inverse of dualQuadriOfCoalgebra).
QuadriCoalgebra coalgebraOfDualQuadri(const QuadriAlgebra& q);

// Nine residual maps, each a cube per basis element; agrees pass/fail and
// residual-for-residual with checking the dual algebra's axioms.
Report checkQuadriCoalgebra(const QuadriCoalgebra& c);

// The eighteen mixed compatibility identities between the four products and
// the four co-operations, evaluated on basis pairs as matrix equations.
Report checkBialgebraCompat(const QuadriBialgebra& qb);

// Co-operations induced by one tensor r:
//   alpha(x)  = (-1 (x) Lse(x) + Rstar(x) (x) 1) r
//   beta(x)   = ( 1 (x) Lvee(x) - Rprec(x) (x) 1) r
//   alphaT(x) = ( 1 (x) Lsucc(x) - Rwedge(x) (x) 1) r
//   betaT(x)  = (-1 (x) Lstar(x) + Rnw(x) (x) 1) r
QuadriCoalgebra coboundaryComults(const QuadriAlgebra& q, const TensorElement& r);

struct QTensors {
    Tensor3 q11, q12, q21, q22, q31, q32;
};

// The six obstruction tensors of r, assembled from leg products with the
// derived operations.
QTensors qTensors(const QuadriAlgebra& q, const TensorElement& r);

// Nine operator-applied vanishing conditions on the obstruction tensors,
// one family per basis element; agrees pass/fail with running
// checkQuadriCoalgebra on coboundaryComults for valid algebras.
Report checkCoboundaryCoalgebra(const QuadriAlgebra& q, const TensorElement& r);

// Passes iff the first obstruction pair vanishes: q11 = q12 = 0. Skewness of
// r is reported as a note, never as a violation.
Report checkQEquation(const QuadriAlgebra& q, const TensorElement& r);

TensorElement canonicalDoubleTensor(std::size_t n);       // sum e_i (x) e_i^dual
TensorElement canonicalDoubleTensorTilde(std::size_t n);  // sum e_i^dual (x) e_i

QuadriCoalgebra negateCoalgebra(const QuadriCoalgebra& c);

struct DrinfeldDouble {
    std::size_t halfDim = 0;
    QuadriAlgebra algebra;      // on A + A^dual, concatenated basis
    QuadriCoalgebra coalgebra;  // coboundary from the canonical tensor
    Report report;              // certification of the double, see below
};

// Double of a valid bialgebra: A and the dual algebra glued along the duals
// of their regular bimodules, co-operations from the canonical tensor.
// The report certifies: the double is a valid algebra, a valid coalgebra,
// the pair is compatible, the first-half inclusion is a bialgebra
// homomorphism from (A, ops, negated co-operations), and the second-half
// inclusion from the dual bialgebra. Throws ReportError when the input
// bialgebra itself is invalid.
DrinfeldDouble drinfeldDouble(const QuadriBialgebra& qb);

// Direct assembly of the same double from a skew solution tensor, using the
// map of r throughout; equals drinfeldDouble's algebra cube-for-cube.
// Throws ReportError when r is not skew or fails the Q-equation.
QuadriAlgebra doubleFromR(const QuadriAlgebra& q, const TensorElement& r);

// Swap the roles of products and co-operations through the dual space.
// Involution: dual of dual returns the original.
QuadriBialgebra dualBialgebra(const QuadriBialgebra& qb);

struct GraphLagrangianResult {
    bool isotropic = false;     // graph of T pairs to zero with itself
    bool closed = false;        // graph closed under all four products
    bool skew = false;          // tensor of T is skew
    bool qSolution = false;     // first obstruction pair vanishes
    Report report;              // detail on every failing part
};

// Inside A semidirect A^dual (dual of the regular bimodule), examines
// graph(T) = span{(T e_u^dual, e_u^dual)}: isotropy under the standard
// pairing, closure under the four products, and the matching verdict of the
// Q-equation on T's tensor. When T comes from a skew solution, also verifies
// that (x, a) -> (x + T a, a) is an isomorphism from the direct double onto
// the semidirect sum.
GraphLagrangianResult graphLagrangianCheck(const QuadriAlgebra& q, const LinearMap& t);

// Part one: the map of r as a bialgebra homomorphism from the dual
// bialgebra to (A, ops, negated co-operations). Part two, skew r only:
// (x, a) -> x + T_r(a) from the tilde-twisted double to the bialgebra
// itself. Requires all six obstruction tensors of r to vanish; throws
// ReportError carrying the residuals otherwise.
Report tRMorphismChecks(const QuadriAlgebra& q, const TensorElement& r);

// Structure-preservation checks between like kinds.
Report checkHomomorphism(const LinearMap& f, const DendriformAlgebra& x,
                         const DendriformAlgebra& y);
Report checkHomomorphism(const LinearMap& f, const QuadriAlgebra& x,
                         const QuadriAlgebra& y);
Report checkHomomorphism(const LinearMap& f, const QuadriBialgebra& x,
                         const QuadriBialgebra& y);

// Extra conditions for maps between split self-dual spaces: f keeps each
// half inside the matching half and transports one pairing to the other.
Report maninHomomorphismConditions(const LinearMap& f, std::size_t srcSplit,
                                   std::size_t dstSplit, const BilinearForm& srcForm,
                                   const BilinearForm& dstForm);

}  // namespace quadralg
