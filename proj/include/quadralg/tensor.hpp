#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quadralg/cube.hpp"
#include "quadralg/linalg.hpp"

namespace quadralg {

// Element of A (x) A over the fixed ordered basis: r = sum coeffs[i][j] e_i (x) e_j.
struct TensorElement {
    std::size_t dim = 0;
    Matrix coeffs;

    bool skew() const { return coeffs == -coeffs.transpose(); }
    bool symmetric() const { return coeffs == coeffs.transpose(); }
};

// Flip of the two legs.
TensorElement twist(const TensorElement& r);

struct MapOfTensor {
    LinearMap t;  // dual space -> space, matrix = coefficient matrix of r
    bool invertible = false;
    std::optional<BilinearForm> omega;  // inverse coefficient matrix, when it exists
};

MapOfTensor mapOfTensor(const TensorElement& r);

// Element of the triple tensor power. Two storage regimes:
//   unitLeg == 0: a full cube, entry (i, j, k) on legs (1, 2, 3);
//   unitLeg == L: the formal unit occupies leg L and `emb` holds the
//                 coefficients on the two remaining legs in increasing order.
// The formal unit is a reserved marker, not a basis vector; embedded tensors
// are only ever consumed by legProduct, which eliminates the marker.
struct Tensor3 {
    std::size_t dim = 0;
    int unitLeg = 0;
    std::vector<Rational> cube;  // dim^3 entries when unitLeg == 0
    Matrix emb;                  // dim x dim when unitLeg != 0

    static Tensor3 zeroCube(std::size_t dim);

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return cube[(i * dim + j) * dim + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return cube[(i * dim + j) * dim + k];
    }

    bool isZero() const;
    bool operator==(const Tensor3& o) const = default;

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    Tensor3 operator-() const;
};

enum class Placement { Legs12, Legs13, Legs23 };

// r placed on two of three legs, formal unit on the remaining one.
Tensor3 legEmbed(const TensorElement& r, Placement where);

// Product of two embedded tensors under one bilinear operation: the factors
// multiply on their shared non-unit leg and pass through on the legs where
// the other factor carries the unit. Requires distinct unit legs; a pair of
// full cubes (or matching unit legs) has no shared unit to absorb and is
// rejected.
Tensor3 legProduct(const Tensor3& u, const Tensor3& v, const BilinearOp& op);

// Apply a matrix to one leg of a full cube.
Tensor3 applyLeg(const Tensor3& t, int leg, const Matrix& m);

}  // namespace quadralg
