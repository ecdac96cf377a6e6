#pragma once

#include <cstddef>
#include <vector>

#include "quadralg/cube.hpp"
#include "quadralg/report.hpp"

namespace quadralg {

// Two-part splitting of an associative product. The same container also
// carries the "vertical" flavour of a four-part algebra, with the wedge
// product stored in `prec` and the vee product in `succ`.
struct DendriformAlgebra {
    std::size_t dim = 0;
    BilinearOp prec, succ;

    BilinearOp star() const { return prec + succ; }
};

Report checkAssociative(const BilinearOp& mul);
BilinearOp assocOf(const DendriformAlgebra& a);
Report checkDendriform(const DendriformAlgebra& a);

// Bimodule over a split algebra: four families of moduleDim-square matrices,
// one matrix per algebra basis vector.
struct DDBimodule {
    std::size_t algebraDim = 0;
    std::size_t moduleDim = 0;
    std::vector<Matrix> lPrec, rPrec, lSucc, rSucc;

    Matrix lStar(std::size_t s) const { return lPrec[s] + lSucc[s]; }
    Matrix rStar(std::size_t s) const { return rPrec[s] + rSucc[s]; }

    // Action matrices for an arbitrary algebra element.
    Matrix lPrecOf(const Vec& x) const;
    Matrix rPrecOf(const Vec& x) const;
    Matrix lSuccOf(const Vec& x) const;
    Matrix rSuccOf(const Vec& x) const;
};

DDBimodule regularDDBimodule(const DendriformAlgebra& a);
Report checkDDBimodule(const DendriformAlgebra& a, const DDBimodule& m);

// Dual action on the dual module, slot by slot:
// (lPrec, rPrec, lSucc, rSucc) -> (-rSucc^T, lStar^T, rStar^T, -lPrec^T).
DDBimodule dualDDBimodule(const DDBimodule& m);

// Symmetric 2-cocycle condition B(x*y, z) = B(y, prec(z,x)) + B(x, succ(y,z)).
Report checkDD2Cocycle(const DendriformAlgebra& a, const BilinearForm& b);

// Matched pair: two split algebras acting on each other. `bOnA` has B as the
// acting algebra and A as the module; `aOnB` the reverse.
struct DDMatchedPairData {
    DendriformAlgebra a, b;
    DDBimodule bOnA;
    DDBimodule aOnB;
};

struct DDBowtieResult {
    DendriformAlgebra algebra;  // on A + B with the concatenated basis
    Report report;
};

// Assembles the sum algebra and certifies it: component axioms, both bimodule
// structures, the eighteen cross-compatibility conditions, and the axioms of
// the assembled algebra itself all land in the report.
DDBowtieResult buildDDBowtie(const DDMatchedPairData& mp);

// Pairing of a space with its dual on the concatenated basis: block Gram
// [[0, I], [I, 0]] of size 2n.
BilinearForm standardPairingForm(std::size_t n);

// For a 2n-dimensional split algebra whose basis splits into two halves:
// each half closed under both products, each half isotropic for the standard
// pairing, and the pairing a 2-cocycle of the whole algebra.
Report checkManinDD(const DendriformAlgebra& d, std::size_t n);

// f preserves each listed product: f(op_X(x, y)) = op_Y(f x, f y).
Report checkOpHomomorphism(const LinearMap& f,
                           const std::vector<const BilinearOp*>& opsX,
                           const std::vector<const BilinearOp*>& opsY,
                           const std::vector<std::string>& tags);

}  // namespace quadralg
