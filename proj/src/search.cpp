#include "quadralg/search.hpp"

#include <gmpxx.h>

#include "quadralg/bialgebra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace quadralg {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("zero bound");
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
}

namespace {

std::vector<Rational> normalizedSet(std::vector<Rational> set) {
    if (set.empty()) throw std::invalid_argument("empty coefficient set");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

// Size of the candidate space: every free slot ranges over the value set,
// optionally capped to maxNonzero nonzero slots.
mpz_class spaceSize(std::size_t freeSlots, const std::vector<Rational>& values,
                    const std::optional<std::size_t>& maxNonzero) {
    const bool hasZero =
        std::any_of(values.begin(), values.end(), [](const Rational& r) {
            return r.isZero();
        });
    const std::size_t nonzeroValues = values.size() - (hasZero ? 1 : 0);
    if (!maxNonzero) {
        mpz_class total = 1;
        for (std::size_t i = 0; i < freeSlots; ++i) total *= mpz_class(values.size());
        return total;
    }
    mpz_class total = 0;
    const std::size_t cap = std::min(*maxNonzero, freeSlots);
    for (std::size_t m = 0; m <= cap; ++m) {
        if (m < freeSlots && !hasZero) continue;
        mpz_class term;
        mpz_bin_uiui(term.get_mpz_t(), freeSlots, m);
        for (std::size_t i = 0; i < m; ++i) term *= mpz_class(nonzeroValues);
        total += term;
    }
    return total;
}

Rational coverageOf(std::size_t examined, const mpz_class& total) {
    if (total == 0) return Rational(1);
    mpq_class frac(mpz_class(static_cast<unsigned long>(examined)), total);
    frac.canonicalize();
    return Rational(frac);
}

std::size_t countNonzero(const std::vector<std::size_t>& valueIdx,
                         const std::vector<Rational>& values) {
    std::size_t nnz = 0;
    for (std::size_t v : valueIdx)
        if (!values[v].isZero()) ++nnz;
    return nnz;
}

// Odometer step in lexicographic order; false once the space is exhausted.
bool advance(std::vector<std::size_t>& valueIdx, std::size_t base) {
    for (std::size_t pos = valueIdx.size(); pos-- > 0;) {
        if (++valueIdx[pos] < base) return true;
        valueIdx[pos] = 0;
    }
    return false;
}

Vec flattenQuadri(const QuadriAlgebra& q) {
    Vec out;
    const BilinearOp* cubes[4] = {&q.nw, &q.ne, &q.sw, &q.se};
    for (const BilinearOp* c : cubes)
        for (std::size_t i = 0; i < q.dim; ++i)
            for (std::size_t j = 0; j < q.dim; ++j)
                for (std::size_t k = 0; k < q.dim; ++k) out.push_back(c->at(i, j, k));
    return out;
}

Vec flattenDendriform(const DendriformAlgebra& a) {
    Vec out;
    const BilinearOp* cubes[2] = {&a.prec, &a.succ};
    for (const BilinearOp* c : cubes)
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                for (std::size_t k = 0; k < a.dim; ++k) out.push_back(c->at(i, j, k));
    return out;
}

bool lexLess(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

SearchOutcome enumerateStructures(const SearchSpec& spec) {
    if (spec.dim == 0) throw std::invalid_argument("dimension must be positive");
    const std::vector<Rational> values = normalizedSet(spec.coefficientSet);
    const std::size_t cubes = spec.kind == StructureKind::Quadri ? 4 : 2;
    const std::size_t slotCount = cubes * spec.dim * spec.dim * spec.dim;

    std::vector<std::size_t> freeSlots;
    if (spec.mask) {
        if (spec.mask->size() != slotCount)
            throw std::invalid_argument("mask length does not match slot count");
        for (std::size_t s = 0; s < slotCount; ++s)
            if ((*spec.mask)[s]) freeSlots.push_back(s);
    } else {
        for (std::size_t s = 0; s < slotCount; ++s) freeSlots.push_back(s);
    }

    const mpz_class total = spaceSize(freeSlots.size(), values, spec.maxNonzero);
    SearchOutcome out;
    out.exhaustive = total <= mpz_class(static_cast<unsigned long>(spec.budget));

    const std::size_t d = spec.dim;
    auto buildAndCheck = [&](const std::vector<std::size_t>& valueIdx) {
        std::vector<BilinearOp> ops(cubes, BilinearOp(d));
        for (std::size_t pos = 0; pos < freeSlots.size(); ++pos) {
            const std::size_t s = freeSlots[pos];
            const std::size_t cube = s / (d * d * d);
            const std::size_t rem = s % (d * d * d);
            ops[cube].at(rem / (d * d), (rem / d) % d, rem % d) = values[valueIdx[pos]];
        }
        if (spec.kind == StructureKind::Quadri) {
            QuadriAlgebra q{d, ops[0], ops[1], ops[2], ops[3]};
            if (checkQuadri(q).passed()) out.quadri.push_back(std::move(q));
        } else {
            DendriformAlgebra a{d, ops[0], ops[1]};
            if (checkDendriform(a).passed()) out.dendriform.push_back(std::move(a));
        }
    };

    if (out.exhaustive) {
        std::vector<std::size_t> valueIdx(freeSlots.size(), 0);
        bool more = true;
        do {
            if (!spec.maxNonzero ||
                countNonzero(valueIdx, values) <= *spec.maxNonzero) {
                ++out.candidatesExamined;
                buildAndCheck(valueIdx);
            }
            more = advance(valueIdx, values.size());
        } while (more);
    } else {
        SplitMix64 rng(spec.seed);
        for (std::size_t draw = 0; draw < spec.budget; ++draw) {
            std::vector<std::size_t> valueIdx(freeSlots.size());
            do {
                for (auto& v : valueIdx)
                    v = static_cast<std::size_t>(rng.below(values.size()));
            } while (spec.maxNonzero &&
                     countNonzero(valueIdx, values) > *spec.maxNonzero);
            ++out.candidatesExamined;
            buildAndCheck(valueIdx);
        }
    }
    out.coverage = coverageOf(out.candidatesExamined, total);

    if (spec.kind == StructureKind::Quadri) {
        std::sort(out.quadri.begin(), out.quadri.end(),
                  [](const QuadriAlgebra& a, const QuadriAlgebra& b) {
                      return lexLess(flattenQuadri(a), flattenQuadri(b));
                  });
        out.quadri.erase(std::unique(out.quadri.begin(), out.quadri.end(),
                                     [](const QuadriAlgebra& a, const QuadriAlgebra& b) {
                                         return flattenQuadri(a) == flattenQuadri(b);
                                     }),
                         out.quadri.end());
    } else {
        std::sort(out.dendriform.begin(), out.dendriform.end(),
                  [](const DendriformAlgebra& a, const DendriformAlgebra& b) {
                      return lexLess(flattenDendriform(a), flattenDendriform(b));
                  });
        out.dendriform.erase(
            std::unique(out.dendriform.begin(), out.dendriform.end(),
                        [](const DendriformAlgebra& a, const DendriformAlgebra& b) {
                            return flattenDendriform(a) == flattenDendriform(b);
                        }),
            out.dendriform.end());
    }
    return out;
}

std::pair<Tensor3, Tensor3> bruteObstructionPair(const QuadriAlgebra& q,
                                                 const TensorElement& r) {
    if (r.dim != q.dim) throw std::invalid_argument("obstruction: dim mismatch");
    const std::size_t n = q.dim;
    const Matrix& rho = r.coeffs;
    const DerivedOps ops = derivedOps(q);

    // Leg placements written out as raw index sums.
    auto prod23_12 = [&](const BilinearOp& op) {
        Tensor3 out = Tensor3::zeroCube(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (rho.at(i, j).isZero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        if (rho.at(k, l).isZero()) continue;
                        const Rational c = rho.at(i, j) * rho.at(k, l);
                        for (std::size_t p = 0; p < n; ++p)
                            if (!op.at(i, l, p).isZero())
                                out.at(k, p, j) += c * op.at(i, l, p);
                    }
            }
        return out;
    };
    auto prod13_23 = [&](const BilinearOp& op) {
        Tensor3 out = Tensor3::zeroCube(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (rho.at(i, j).isZero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        if (rho.at(k, l).isZero()) continue;
                        const Rational c = rho.at(i, j) * rho.at(k, l);
                        for (std::size_t p = 0; p < n; ++p)
                            if (!op.at(j, l, p).isZero())
                                out.at(i, k, p) += c * op.at(j, l, p);
                    }
            }
        return out;
    };
    auto prod12_13 = [&](const BilinearOp& op) {
        Tensor3 out = Tensor3::zeroCube(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (rho.at(a, b).isZero()) continue;
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t e = 0; e < n; ++e) {
                        if (rho.at(c, e).isZero()) continue;
                        const Rational w = rho.at(a, b) * rho.at(c, e);
                        for (std::size_t p = 0; p < n; ++p)
                            if (!op.at(a, c, p).isZero())
                                out.at(p, b, e) += w * op.at(a, c, p);
                    }
            }
        return out;
    };

    Tensor3 first = prod23_12(ops.wedge) - prod13_23(ops.succ) + prod12_13(q.sw);
    Tensor3 second = prod23_12(ops.vee) - prod12_13(ops.prec) + prod13_23(q.ne);
    return {std::move(first), std::move(second)};
}

QSolutionSearch searchQSolutions(const QuadriAlgebra& q,
                                 const std::vector<Rational>& coefficientSet,
                                 std::size_t budget, bool requireSkew,
                                 bool requireNondegenerate,
                                 const std::optional<std::vector<bool>>& mask,
                                 std::uint64_t seed) {
    const std::size_t n = q.dim;
    const std::vector<Rational> values = normalizedSet(coefficientSet);
    if (mask && mask->size() != n * n)
        throw std::invalid_argument("mask length does not match matrix size");
    auto allowed = [&](std::size_t i, std::size_t j) {
        return !mask || (*mask)[i * n + j];
    };

    std::vector<std::pair<std::size_t, std::size_t>> slots;
    if (requireSkew) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (allowed(i, j) && allowed(j, i)) slots.emplace_back(i, j);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (allowed(i, j)) slots.emplace_back(i, j);
    }

    const mpz_class total = spaceSize(slots.size(), values, std::nullopt);
    QSolutionSearch out;
    out.exhaustive = total <= mpz_class(static_cast<unsigned long>(budget));

    auto tryCandidate = [&](const std::vector<std::size_t>& valueIdx) {
        Matrix m(n, n);
        for (std::size_t pos = 0; pos < slots.size(); ++pos) {
            const auto [i, j] = slots[pos];
            m.at(i, j) = values[valueIdx[pos]];
            if (requireSkew) m.at(j, i) = -values[valueIdx[pos]];
        }
        TensorElement r{n, m};
        if (requireNondegenerate && !m.inverse()) return;
        const Report rep = checkQEquation(q, r);
        const auto brute = bruteObstructionPair(q, r);
        const bool bruteClean = brute.first.isZero() && brute.second.isZero();
        if (rep.passed() != bruteClean)
            throw std::logic_error("obstruction routes disagree");
        if (rep.passed()) out.solutions.push_back(std::move(r));
    };

    if (out.exhaustive) {
        std::vector<std::size_t> valueIdx(slots.size(), 0);
        bool more = true;
        do {
            ++out.candidatesExamined;
            tryCandidate(valueIdx);
            more = advance(valueIdx, values.size());
        } while (more);
    } else {
        SplitMix64 rng(seed);
        for (std::size_t draw = 0; draw < budget; ++draw) {
            std::vector<std::size_t> valueIdx(slots.size());
            for (auto& v : valueIdx)
                v = static_cast<std::size_t>(rng.below(values.size()));
            ++out.candidatesExamined;
            tryCandidate(valueIdx);
        }
    }
    out.coverage = coverageOf(out.candidatesExamined, total);

    auto flat = [](const TensorElement& t) {
        Vec v;
        for (std::size_t i = 0; i < t.dim; ++i)
            for (std::size_t j = 0; j < t.dim; ++j) v.push_back(t.coeffs.at(i, j));
        return v;
    };
    std::sort(out.solutions.begin(), out.solutions.end(),
              [&](const TensorElement& a, const TensorElement& b) {
                  return lexLess(flat(a), flat(b));
              });
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end(),
                                    [&](const TensorElement& a, const TensorElement& b) {
                                        return flat(a) == flat(b);
                                    }),
                        out.solutions.end());
    return out;
}

TensorElement randomSkewTensor(std::size_t dim, std::uint64_t seed,
                               std::int64_t bound) {
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    SplitMix64 rng(seed);
    Matrix m(dim, dim);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            const std::int64_t v =
                static_cast<std::int64_t>(rng.below(span)) - bound;
            m.at(i, j) = Rational(static_cast<long long>(v));
            m.at(j, i) = Rational(static_cast<long long>(-v));
        }
    return TensorElement{dim, m};
}

}  // namespace quadralg
