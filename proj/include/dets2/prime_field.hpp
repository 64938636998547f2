#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "dets2/errors.hpp"

namespace dets2 {

// Moduli must be prime and below this bound so that products fit in 128 bits
// and the extended-Euclid inverse can work in signed 64-bit.
inline constexpr std::uint64_t kMaxPrimeExclusive = std::uint64_t(1) << 62;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Element of Z/pZ for a word-sized prime p.
//
// An element with modulus() == 0 is an unattached integer literal (the value
// is read as a signed 64-bit integer). Literals adopt the modulus of the
// other operand on first contact; combining elements of two distinct prime
// fields throws FieldError. Attached values are always reduced to [0, p).
class Fp {
public:
    Fp() = default;
    explicit Fp(long long raw) : v_(static_cast<std::uint64_t>(raw)) {}
    Fp(std::uint64_t value, std::uint64_t p) : p_(p) {
        if (p == 0) throw FieldError("Fp: zero modulus");
        v_ = value % p;
    }

    static Fp of(std::int64_t value, std::uint64_t p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t modulus() const { return p_; }
    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    std::string str() const;

    Fp inverse() const;

    Fp operator-() const {
        if (p_ == 0) return Fp(std::uint64_t(0) - v_, raw_tag{});
        return Fp(v_ == 0 ? 0 : p_ - v_, p_);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = common_modulus(a, b);
        if (p == 0) return Fp(a.v_ + b.v_, raw_tag{});
        std::uint64_t x = a.residue(p) + b.residue(p);
        if (x >= p) x -= p;
        return Fp(x, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = common_modulus(a, b);
        if (p == 0) return Fp(a.v_ * b.v_, raw_tag{});
        auto prod = static_cast<unsigned __int128>(a.residue(p)) * b.residue(p);
        return Fp(static_cast<std::uint64_t>(prod % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    // Comparison is not arithmetic: elements of distinct fields are unequal
    // rather than an error.
    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) return false;
        std::uint64_t p = a.p_ != 0 ? a.p_ : b.p_;
        if (p == 0) return a.v_ == b.v_;
        return a.residue(p) == b.residue(p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    struct raw_tag {};
    Fp(std::uint64_t raw, raw_tag) : v_(raw) {}

    static std::uint64_t common_modulus(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw FieldError("Fp: mixing elements of GF(" + std::to_string(a.p_) +
                             ") and GF(" + std::to_string(b.p_) + ")");
        return a.p_ != 0 ? a.p_ : b.p_;
    }

    std::uint64_t residue(std::uint64_t p) const {
        if (p_ != 0) return v_;
        return of(static_cast<std::int64_t>(v_), p).v_;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

inline bool is_zero(const Fp& x) { return x.is_zero(); }

} // namespace dets2

namespace Eigen {

template <>
struct NumTraits<dets2::Fp> : GenericNumTraits<dets2::Fp> {
    typedef dets2::Fp Real;
    typedef dets2::Fp NonInteger;
    typedef dets2::Fp Nested;

    static inline Real epsilon() { return dets2::Fp(0); }
    static inline Real dummy_precision() { return dets2::Fp(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 0,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 9,
    };
};

} // namespace Eigen
