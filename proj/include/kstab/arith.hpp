#pragma once

/**
 * @file arith.hpp
 * @brief Exact integers, rationals and integer factorization.
 *
 * BigRational is a value type over GMP's mpq. It is always kept in lowest
 * terms with a positive denominator, so equality is structural and zero is
 * uniquely 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kstab {

using BigInt = mpz_class;

/// Malformed user input (bad diagram string, unparsable rational, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed (non-dominant weight, degenerate volume, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class BigRational {
public:
    BigRational() = default;
    template <std::integral T>
    BigRational(T v) {
        if constexpr (std::is_signed_v<T>) {
            value_ = static_cast<long>(v);
        } else {
            value_ = static_cast<unsigned long>(v);
        }
    }
    BigRational(const BigInt& v) : value_(v) {}
    /// Throws DivisionByZero when den == 0.
    BigRational(const BigInt& num, const BigInt& den);

    /// Parses "p", "-p" or "p/q" (decimal integers, optional surrounding blanks).
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Numerator when integral; throws PreconditionError otherwise.
    BigInt to_integer() const;
    std::string to_string() const { return value_.get_str(); }
    double to_double() const { return value_.get_d(); }

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

/// Integer power; negative exponents invert (DivisionByZero on 0^-k).
BigRational pow(const BigRational& base, long exponent);
BigRational abs(const BigRational& v);

std::ostream& operator<<(std::ostream& os, const BigRational& v);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    int sign = 0;  // -1, 0 or +1
    std::vector<PrimePower> factors;  // strictly increasing primes

    /// sign * prod prime^exponent
    BigInt value() const;
    /// `[-]p1^e1 · p2^e2 · …`, exponent omitted when 1; units render as 1 / -1.
    std::string to_string() const;
};

/// Deterministic Miller-Rabin below 3.3e24, Baillie-PSW style (GMP) above.
bool is_prime(const BigInt& n);

/// Trial division below 2^16, then Pollard rho (Brent) and Lenstra ECM on the cofactors.
Factorization factorize(const BigInt& n);

}  // namespace kstab
