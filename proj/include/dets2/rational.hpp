#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <utility>

#include "dets2/errors.hpp"

namespace dets2 {

// Arbitrary-precision rational. Always canonical: lowest terms, positive
// denominator, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(long long num, long long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "a" or "a/b" in base 10, optional leading '-' on either part.
    static Rational parse(const std::string& s);

    std::string str() const { return q_.get_str(); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational inverse() const {
        if (is_zero()) throw FieldError("Rational: inverse of zero");
        return Rational(from_canonical{}, mpq_class(1 / q_));
    }

    Rational operator-() const { return Rational(from_canonical{}, mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw FieldError("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }

private:
    struct from_canonical {};
    Rational(from_canonical, mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

} // namespace dets2

namespace Eigen {

template <>
struct NumTraits<dets2::Rational> : GenericNumTraits<dets2::Rational> {
    typedef dets2::Rational Real;
    typedef dets2::Rational NonInteger;
    typedef dets2::Rational Nested;

    static inline Real epsilon() { return dets2::Rational(0); }
    static inline Real dummy_precision() { return dets2::Rational(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
};

} // namespace Eigen
