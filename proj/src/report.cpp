#include "quadralg/report.hpp"

#include <sstream>

namespace quadralg {

void Report::require(const std::string& tag, std::vector<std::size_t> index,
                     const Vec& lhs, const Vec& rhs) {
    Vec d = vecSub(lhs, rhs);
    if (!vecIsZero(d)) flag(tag, std::move(index), std::move(d));
}

void Report::requireZero(const std::string& tag, std::vector<std::size_t> index,
                         const Vec& value) {
    if (!vecIsZero(value)) flag(tag, std::move(index), value);
}

void Report::absorb(const Report& inner, const std::string& prefix) {
    for (const auto& v : inner.violations)
        violations.push_back({prefix + "." + v.tag, v.index, v.residual});
    for (const auto& n : inner.notes) notes.push_back(prefix + ": " + n);
}

std::string Report::summary() const {
    std::ostringstream os;
    if (passed()) {
        os << "pass";
    } else {
        os << "fail (" << violations.size() << " violation"
           << (violations.size() == 1 ? "" : "s") << "):";
        std::size_t shown = 0;
        for (const auto& v : violations) {
            if (shown == 8) {
                os << " ...";
                break;
            }
            os << " " << v.tag << "[";
            for (std::size_t i = 0; i < v.index.size(); ++i)
                os << (i ? "," : "") << v.index[i];
            os << "]";
            ++shown;
        }
    }
    return os.str();
}

}  // namespace quadralg
