#pragma once

#include <cstdint>
#include <string>

#include "dets2/prime_field.hpp"
#include "dets2/rational.hpp"

namespace dets2 {

// Runtime description of the ground field. Prime moduli are validated here,
// once, so elements never have to re-check.
class FieldSpec {
public:
    enum class Kind { rational, prime };

    static FieldSpec rational() { return FieldSpec(Kind::rational, 0); }

    static FieldSpec prime(std::uint64_t p) {
        if (p >= kMaxPrimeExclusive)
            throw InputError("modulus " + std::to_string(p) + " exceeds the 2^62 bound");
        if (!is_prime_u64(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
        return FieldSpec(Kind::prime, p);
    }

    Kind kind() const { return kind_; }
    std::uint64_t p() const { return p_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

// Field handles: small value types that mint scalars and parse/print their
// textual form. Templated code takes one of these instead of a scalar type.
struct RationalField {
    using Scalar = Rational;

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long long v) const { return Rational(v); }
    Rational parse(const std::string& s) const { return Rational::parse(s); }
    std::string str(const Rational& x) const { return x.str(); }
    FieldSpec spec() const { return FieldSpec::rational(); }
};

struct PrimeField {
    using Scalar = Fp;

    std::uint64_t p;

    explicit PrimeField(std::uint64_t modulus) : p(FieldSpec::prime(modulus).p()) {}
    explicit PrimeField(const FieldSpec& s) : p(s.p()) {
        if (s.kind() != FieldSpec::Kind::prime)
            throw InputError("PrimeField requires a prime-field spec");
    }

    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_int(long long v) const { return Fp::of(v, p); }
    Fp parse(const std::string& s) const;
    std::string str(const Fp& x) const { return x.str(); }
    FieldSpec spec() const { return FieldSpec::prime(p); }
};

inline Fp PrimeField::parse(const std::string& s) const {
    std::size_t i = 0;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        i = 1;
    }
    if (i == s.size()) throw InputError("not a prime-field scalar: \"" + s + "\"");
    std::uint64_t acc = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw InputError("not a prime-field scalar: \"" + s + "\"");
        acc = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(acc) * 10 + (s[i] - '0')) % p);
    }
    Fp out(acc, p);
    return neg ? -out : out;
}

template <class S>
struct FieldOf;

template <>
struct FieldOf<Rational> {
    using type = RationalField;
};

template <>
struct FieldOf<Fp> {
    using type = PrimeField;
};

} // namespace dets2
