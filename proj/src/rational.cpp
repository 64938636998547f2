#include "dets2/rational.hpp"

#include <cctype>
#include <ostream>

namespace dets2 {

namespace {

// -?digits, optionally followed by /-?digits
bool well_formed(const std::string& s) {
    std::size_t i = 0;
    auto digits = [&]() {
        std::size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return i > start;
    };
    if (!digits()) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    return digits() && i == s.size();
}

} // namespace

Rational::Rational(long long num, long long den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw FieldError("Rational: zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::parse(const std::string& s) {
    if (!well_formed(s)) throw InputError("not a rational scalar: \"" + s + "\"");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("not a rational scalar: \"" + s + "\"");
    if (q.get_den() == 0) throw InputError("zero denominator in scalar \"" + s + "\"");
    q.canonicalize();
    Rational out;
    out.q_ = std::move(q);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace dets2
