#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadralg/linalg.hpp"

namespace quadralg {

// One failed identity: which rule, at which basis indices, and the exact
// nonzero residual vector (lhs - rhs expanded over the basis).
struct Violation {
    std::string tag;
    std::vector<std::size_t> index;
    Vec residual;
};

struct Report {
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool passed() const { return violations.empty(); }

    void flag(std::string tag, std::vector<std::size_t> index, Vec residual) {
        violations.push_back({std::move(tag), std::move(index), std::move(residual)});
    }
    // Records lhs - rhs when nonzero; no-op otherwise.
    void require(const std::string& tag, std::vector<std::size_t> index,
                 const Vec& lhs, const Vec& rhs);
    void requireZero(const std::string& tag, std::vector<std::size_t> index,
                     const Vec& value);
    void absorb(const Report& inner, const std::string& prefix);

    std::string summary() const;  // short human-readable digest
};

// Precondition failure whose diagnosis is itself a Report (e.g. a construction
// that refuses an invalid ingredient and hands back the evidence).
class ReportError : public std::runtime_error {
public:
    ReportError(const std::string& what, Report rep)
        : std::runtime_error(what + ": " + rep.summary()), report(std::move(rep)) {}

    Report report;
};

}  // namespace quadralg
