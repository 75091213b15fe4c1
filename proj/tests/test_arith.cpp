#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kstab/arith.hpp"

#include <random>

using namespace kstab;

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
    CHECK(BigRational(1, 2) * 2 == BigRational(1));
    CHECK((BigRational(1, 2) * 2).is_integer());
    CHECK(BigRational(6, -4).numerator() == -3);
    CHECK(BigRational(6, -4).denominator() == 2);
    CHECK(BigRational(0, 7).denominator() == 1);
    CHECK(BigRational(3, 4) - BigRational(3, 4) == BigRational());
    CHECK(BigRational(-3, 4) < BigRational(1, 5));
    CHECK(pow(BigRational(2, 3), 3) == BigRational(8, 27));
    CHECK(pow(BigRational(2, 3), -2) == BigRational(9, 4));
    CHECK(pow(BigRational(-5), 0) == BigRational(1));
}

TEST_CASE("the (8-x)/2 table entry at x = 3") {
    const BigRational x = 3;
    CHECK((BigRational(8) - x) / 2 == BigRational(5, 2));
}

TEST_CASE("division by zero is a distinct error") {
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), DivisionByZero);
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DivisionByZero);
    CHECK_THROWS_AS(pow(BigRational(0), -1), DivisionByZero);
}

TEST_CASE("parsing rationals") {
    CHECK(BigRational::parse("3/2") == BigRational(3, 2));
    CHECK(BigRational::parse(" -4 ") == BigRational(-4));
    CHECK(BigRational::parse("10/4") == BigRational(5, 2));
    CHECK(BigRational::parse("+7") == BigRational(7));
    CHECK_THROWS_AS(BigRational::parse("1/0"), InputError);
    CHECK_THROWS_AS(BigRational::parse("x"), InputError);
    CHECK_THROWS_AS(BigRational::parse(""), InputError);
    CHECK_THROWS_AS(BigRational::parse("1.5"), InputError);
}

TEST_CASE("field laws on random rationals") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    auto draw = [&] { return BigRational(BigInt(num(rng)), BigInt(den(rng))); };
    for (int i = 0; i < 500; ++i) {
        const BigRational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * (BigRational(1) / a) == BigRational(1));
        CHECK(a - a == BigRational());
        const BigInt g = gcd(a.numerator(), a.denominator());
        CHECK(abs(g) == 1);
        CHECK(a.denominator() > 0);
    }
}

TEST_CASE("factorize small cases") {
    const Factorization twelve = factorize(12);
    CHECK(twelve.sign == 1);
    REQUIRE(twelve.factors.size() == 2);
    CHECK(twelve.factors[0] == PrimePower{2, 2});
    CHECK(twelve.factors[1] == PrimePower{3, 1});
    CHECK(twelve.to_string() == "2^2 · 3");

    const Factorization one = factorize(1);
    CHECK(one.sign == 1);
    CHECK(one.factors.empty());
    CHECK(one.to_string() == "1");

    const Factorization minus_one = factorize(-1);
    CHECK(minus_one.sign == -1);
    CHECK(minus_one.to_string() == "-1");

    const Factorization zero = factorize(0);
    CHECK(zero.sign == 0);
    CHECK(zero.factors.empty());
    CHECK(zero.to_string() == "0");

    CHECK(factorize(-360).to_string() == "-2^3 · 3^2 · 5");
}

TEST_CASE("factorize reproduces the product of the A1xG2 xi factors") {
    const BigInt n = BigInt(16) * 19683 * 5 * 11;  // 2^4 3^9 5 11
    const Factorization f = factorize(n);
    CHECK(f.to_string() == "2^4 · 3^9 · 5 · 11");
    CHECK(f.value() == n);
}

TEST_CASE("factorize splits cofactors beyond trial division") {
    // 1000003 and 1000033 are primes above the trial-division limit.
    const BigInt p("1000003"), q("1000033");
    CHECK(is_prime(p));
    CHECK(is_prime(q));
    const Factorization f = factorize(p * q * q * 8);
    CHECK(f.to_string() == "2^3 · 1000003 · 1000033^2");
    CHECK(f.value() == p * q * q * 8);
    CHECK(factorize(p * p).to_string() == "1000003^2");
    const BigInt product = BigInt("1000000007") * BigInt("998244353") * BigInt("2305843009213693951");
    CHECK(factorize(product).value() == product);
    CHECK(factorize(product).factors.size() == 3);
}

TEST_CASE("factorize across word-size boundaries") {
    // two 31-bit primes: 62-bit product
    const BigInt a("2147483647"), b("2147483629");
    CHECK(factorize(a * b).to_string() == "2147483629 · 2147483647");
    // two ~50-bit primes: too far apart for a short rho run
    const BigInt p("999999999999989"), q("1000000000000037");
    CHECK(factorize(p * q).to_string() == "999999999999989 · 1000000000000037");
    CHECK(factorize(p * q * q * 9).to_string() == "3^2 · 999999999999989 · 1000000000000037^2");
    const BigInt r("1000000000039"), s("1000000000000000003");
    CHECK(factorize(r * s).to_string() == "1000000000039 · 1000000000000000003");
    // beyond two machine words
    const BigInt m127("170141183460469231731687303715884105727");
    CHECK(factorize(m127 * r).to_string() == "1000000000039 · 170141183460469231731687303715884105727");
}

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(41));
    CHECK_FALSE(is_prime(561));                      // Carmichael
    CHECK_FALSE(is_prime(BigInt("3215031751")));     // strong pseudoprime to 2,3,5,7
    CHECK(is_prime(BigInt("2305843009213693951")));  // 2^61 - 1
    CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST_CASE("factorization round-trip on random integers below 10^40") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(42);
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, 40);
    for (int i = 0; i < 40; ++i) {
        const BigInt n = rng.get_z_range(bound) * (i % 2 == 0 ? 1 : -1);
        const Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
            CHECK(is_prime(f.factors[k].prime));
            CHECK(f.factors[k].exponent > 0);
            if (k > 0) CHECK(f.factors[k - 1].prime < f.factors[k].prime);
        }
    }
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(7) == 5040);
    CHECK(binomial(22, 11) == 705432);
    CHECK(binomial(5, 7) == 0);
}
