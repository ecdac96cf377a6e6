#pragma once

#include <cstddef>
#include <vector>

#include "quadralg/dendriform.hpp"

namespace quadralg {

// Four-part splitting of an associative product, compass naming: nw = x "up
// and to the left" product and so on. Row sums give the horizontal split,
// column sums the vertical one.
struct QuadriAlgebra {
    std::size_t dim = 0;
    BilinearOp nw, ne, sw, se;
};

struct DerivedOps {
    BilinearOp succ, prec, vee, wedge, star;
};

DerivedOps derivedOps(const QuadriAlgebra& q);
Report checkQuadri(const QuadriAlgebra& q);

enum class DDFlavor { Horizontal, Vertical };

// Horizontal: (prec, succ) = (nw+sw, ne+se). Vertical: the wedge product
// nw+ne lands in the prec slot and the vee product sw+se in the succ slot.
DendriformAlgebra projectDD(const QuadriAlgebra& q, DDFlavor which);

struct QuadriBimodule {
    std::size_t algebraDim = 0;
    std::size_t moduleDim = 0;
    std::vector<Matrix> lNw, rNw, lNe, rNe, lSw, rSw, lSe, rSe;

    Matrix lPrec(std::size_t s) const { return lNw[s] + lSw[s]; }
    Matrix rPrec(std::size_t s) const { return rNw[s] + rSw[s]; }
    Matrix lSucc(std::size_t s) const { return lNe[s] + lSe[s]; }
    Matrix rSucc(std::size_t s) const { return rNe[s] + rSe[s]; }
    Matrix lWedge(std::size_t s) const { return lNw[s] + lNe[s]; }
    Matrix rWedge(std::size_t s) const { return rNw[s] + rNe[s]; }
    Matrix lVee(std::size_t s) const { return lSw[s] + lSe[s]; }
    Matrix rVee(std::size_t s) const { return rSw[s] + rSe[s]; }
    Matrix lStar(std::size_t s) const { return lNw[s] + lNe[s] + lSw[s] + lSe[s]; }
    Matrix rStar(std::size_t s) const { return rNw[s] + rNe[s] + rSw[s] + rSe[s]; }
};

QuadriBimodule regularQuadriBimodule(const QuadriAlgebra& q);
Report checkQuadriBimodule(const QuadriAlgebra& q, const QuadriBimodule& m);

// Dual action on the dual module: the eight new families are
// (r_se^T, lStar^T, -rVee^T, -lPrec^T, -rSucc^T, -lWedge^T, rStar^T, lNw^T)
// in slot order (lNw, rNw, lNe, rNe, lSw, rSw, lSe, rSe).
QuadriBimodule dualQuadriBimodule(const QuadriBimodule& m);

// Products on A + V: algebra times algebra stays in A, the module part picks
// up the two actions, module times module is zero. Rejects an invalid
// bimodule (ReportError carries the evidence).
QuadriAlgebra semidirectSum(const QuadriAlgebra& q, const QuadriBimodule& m);

struct QuadriMatchedPairData {
    QuadriAlgebra a, b;
    QuadriBimodule bOnA;
    QuadriBimodule aOnB;
};

struct QuadriBowtieResult {
    QuadriAlgebra algebra;
    Report report;  // passes iff the assembled algebra itself is valid
};

QuadriBowtieResult buildQuadriBowtie(const QuadriMatchedPairData& mp);

// Splits a two-part algebra D into four parts using a nondegenerate symmetric
// 2-cocycle: each product row is the unique solution of the pairing
// conditions B(x nw y, z) = B(x, y*z), B(x ne y, z) = -B(y, vee(z,x)),
// B(x sw y, z) = -B(x, wedge(y,z)), B(x se y, z) = B(y, star(z,x)).
// The vertical projection of the result recovers D. Throws ReportError when
// B is asymmetric, degenerate, or not a 2-cocycle of D.
QuadriAlgebra quadriFrom2Cocycle(const DendriformAlgebra& d, const BilinearForm& b);

// The same four pairing conditions as checks against a given four-part
// algebra; B must be symmetric.
Report checkInvariantForm(const QuadriAlgebra& q, const BilinearForm& b);

// Not-necessarily-symmetric 2-cocycle:
//   omega(x, wedge(y,z)) = -omega(sw(x,y), z) + omega(succ(z,x), y)
//   omega(x, vee(y,z))   =  omega(prec(x,y), z) - omega(ne(z,x), y)
// Also checks that the symmetrization passes the two-part cocycle condition
// on the vertical projection.
Report checkOmega2Cocycle(const QuadriAlgebra& q, const BilinearForm& omega);

// Both coordinate halves closed under all four products, and the standard
// pairing form invariant for Q.
Report checkManinQuadri(const QuadriAlgebra& q, std::size_t n);

// Collapses a four-part matched pair to the vertical two-part one by summing
// map families: lPrec <- lNw+lNe, rPrec <- rNw+rNe, lSucc <- lSw+lSe,
// rSucc <- rSw+rSe on both sides.
DDMatchedPairData inducedDDMatchedPair(const QuadriMatchedPairData& mp);

// Dual-space bimodule over the vertical projection, built from the four-part
// structure: (lPrec, rPrec, lSucc, rSucc) = (-R_sw^T, L_succ^T, R_prec^T,
// -L_ne^T). Valid whenever Q is.
DDBimodule verticalDualModule(const QuadriAlgebra& q);

}  // namespace quadralg
