#include "quadralg/rational.hpp"

#include <cctype>
#include <ostream>

namespace quadralg {

namespace {

bool isIntegerToken(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational::Rational(int num, int den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

mpq_class Rational::fromLongLong(long long n) {
    // mpq_class has no long long ctor on LP64-agnostic paths; go through text.
    return mpq_class(std::to_string(n));
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("rational: empty string");

    const std::size_t slash = s.find('/');
    std::string numPart = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string denPart = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!isIntegerToken(numPart) || !isIntegerToken(denPart))
        throw std::invalid_argument("rational: bad syntax: " + text);

    mpz_class num(numPart);
    mpz_class den(denPart);
    if (den == 0) throw std::invalid_argument("rational: zero denominator: " + text);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.isZero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (isZero()) throw std::domain_error("rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace quadralg
