#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadralg/dendriform.hpp"
#include "quadralg/quadri.hpp"
#include "quadralg/tensor.hpp"

namespace quadralg {

// Bit-stable generator: identical sequences on every platform, unlike the
// standard distributions.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}
    std::uint64_t next();
    // Uniform value in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound);
};

enum class StructureKind { Dendriform, Quadri };

// Candidate space: every structure-constant slot allowed by the mask takes
// any value from the coefficient set (others stay zero); an optional cap on
// the number of nonzero slots shrinks the space further. Slot order is
// cube-major (nw, ne, sw, se / prec, succ), then row-major (i, j, k).
struct SearchSpec {
    StructureKind kind = StructureKind::Quadri;
    std::size_t dim = 1;
    std::vector<Rational> coefficientSet;
    std::optional<std::vector<bool>> mask;  // length = cubes * dim^3
    std::optional<std::size_t> maxNonzero;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
};

struct SearchOutcome {
    bool exhaustive = false;
    std::size_t candidatesExamined = 0;
    Rational coverage;  // examined / candidate-space size, exact
    std::vector<DendriformAlgebra> dendriform;
    std::vector<QuadriAlgebra> quadri;
};

// Exhaustive in lexicographic order when the candidate space fits the
// budget; otherwise seeded sampling of exactly budget candidates. Results
// are the candidates that pass the full axiom check, sorted canonically
// and deduplicated.
SearchOutcome enumerateStructures(const SearchSpec& spec);

struct QSolutionSearch {
    bool exhaustive = false;
    std::size_t candidatesExamined = 0;
    Rational coverage;
    std::vector<TensorElement> solutions;
};

// Tensors over the coefficient set passing the defining-equation check,
// with optional skewness (strict upper-triangle parameterization) and
// nondegeneracy side conditions, plus an optional entry mask (row-major).
// Every hit is re-verified through an independent second computation of
// the obstruction pair before it is returned.
QSolutionSearch searchQSolutions(const QuadriAlgebra& q,
                                 const std::vector<Rational>& coefficientSet,
                                 std::size_t budget, bool requireSkew,
                                 bool requireNondegenerate,
                                 const std::optional<std::vector<bool>>& mask = {},
                                 std::uint64_t seed = 0);

// Seeded skew matrix with integer entries in [-bound, bound].
TensorElement randomSkewTensor(std::size_t dim, std::uint64_t seed,
                               std::int64_t bound);

// Second route to the first obstruction pair: direct index sums, no shared
// code with the leg-embedding path.
std::pair<Tensor3, Tensor3> bruteObstructionPair(const QuadriAlgebra& q,
                                                 const TensorElement& r);

}  // namespace quadralg
