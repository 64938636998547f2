#include <doctest.h>

#include "dets2/field.hpp"
#include "dets2/random.hpp"

using namespace dets2;

TEST_SUITE("field") {

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3) * Rational(0) == Rational(0));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(1).inverse() == Rational(1));
    CHECK((-Rational(1, 2)).str() == "-1/2");
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");

    SeededRng rng(11);
    RationalField f;
    for (int i = 0; i < 200; ++i) {
        Rational a = random_scalar(rng, f);
        Rational b = random_scalar(rng, f);
        for (Rational r : {a + b, a - b, a * b}) {
            CHECK(r.den() > 0);
            CHECK(gcd(abs(r.num()), r.den()) == 1);
        }
    }
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), FieldError);
    CHECK_THROWS_AS(Rational(0).inverse(), FieldError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), FieldError);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("5/6") == Rational(5, 6));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("123456789012345678901234567890").den() == 1);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1/"), InputError);
    CHECK_THROWS_AS(Rational::parse("a/b"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse(" 1"), InputError);
    CHECK_THROWS_AS(Rational::parse("0x10"), InputError);
}

TEST_CASE("prime field arithmetic mod 7") {
    PrimeField f(7);
    CHECK(f.from_int(5) + f.from_int(4) == f.from_int(2));
    CHECK(f.from_int(3).inverse() == f.from_int(5));
    CHECK(f.from_int(1).inverse() == f.from_int(1));
    CHECK(f.from_int(-1) == f.from_int(6));
    CHECK((f.from_int(3) * f.from_int(5)).str() == "1");
    CHECK(f.parse("13") == f.from_int(6));
}

TEST_CASE("prime field errors") {
    PrimeField f7(7), f11(11);
    CHECK_THROWS_AS(f7.from_int(1) + f11.from_int(1), FieldError);
    CHECK_THROWS_AS(f7.zero().inverse(), FieldError);
    CHECK_THROWS_AS(f7.from_int(3) / f7.zero(), FieldError);
    // distinct fields are unequal, not an error
    CHECK(f7.from_int(1) != f11.from_int(1));
}

TEST_CASE("unattached literals adopt a modulus") {
    PrimeField f(13);
    Fp lit(-1);
    CHECK(lit + f.zero() == f.from_int(12));
    CHECK(Fp(0) == f.zero());
    CHECK(Fp(26) == f.zero());
}

TEST_CASE("field spec validates moduli") {
    CHECK(FieldSpec::prime(2).p() == 2);
    CHECK(FieldSpec::prime(32003).p() == 32003);
    CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
    CHECK_THROWS_AS(FieldSpec::prime(32004), InputError);
    CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t(1) << 62), InputError);
    CHECK(FieldSpec::rational().kind() == FieldSpec::Kind::rational);
}

TEST_CASE("primality check") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(32003));
    CHECK(is_prime_u64((std::uint64_t(1) << 61) - 1));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(32001)); // 3 * 10667
    CHECK_FALSE(is_prime_u64(std::uint64_t(3215031751))); // strong pseudoprime to bases 2,3,5,7
}

template <class F>
static void axioms(const F& field, std::uint64_t seed) {
    SeededRng rng(seed);
    for (int i = 0; i < 300; ++i) {
        auto a = random_scalar(rng, field);
        auto b = random_scalar(rng, field);
        auto c = random_scalar(rng, field);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + field.zero() == a);
        CHECK(a * field.one() == a);
        CHECK(a + (-a) == field.zero());
        if (!is_zero(a)) CHECK(a * a.inverse() == field.one());
    }
}

TEST_CASE("field axioms on random triples") {
    axioms(RationalField{}, 17);
    axioms(PrimeField(32003), 18);
    axioms(PrimeField(2), 19);
}

} // TEST_SUITE
