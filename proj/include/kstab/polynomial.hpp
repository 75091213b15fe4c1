#pragma once

// Exact dense univariate and sparse bivariate polynomials over BigRational.

#include "kstab/arith.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kstab {

/// Dense polynomial in x; coefficient i multiplies x^i, trailing zeros trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coeffs);
    UniPoly(const BigRational& constant);
    template <std::integral T>
    UniPoly(T constant) : UniPoly(BigRational(constant)) {}

    static UniPoly x() { return UniPoly(std::vector<BigRational>{0, 1}); }
    /// constant + slope * x
    static UniPoly linear(const BigRational& constant, const BigRational& slope);
    /// Product of `constant_i + slope_i x`.
    static UniPoly product_of_linear(std::span<const std::pair<BigRational, BigRational>> factors);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational coefficient(int power) const;

    BigRational operator()(const BigRational& at) const { return evaluate(at); }
    BigRational evaluate(const BigRational& at) const;
    UniPoly antiderivative() const;
    UniPoly derivative() const;
    UniPoly pow(unsigned exponent) const;

    /// Descending powers, e.g. "-2048/3*x^5 + x^2 - 1"; "0" for zero.
    std::string to_string() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const BigRational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const BigRational& s) { return a *= s; }
    friend UniPoly operator*(const BigRational& s, UniPoly a) { return a *= s; }
    UniPoly operator-() const { return *this * BigRational(-1); }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Exact integral of p over [lo, hi] via the power rule.
BigRational definite_integral(const UniPoly& p, const BigRational& lo, const BigRational& hi);

/// Sparse polynomial in s, t; key (i, j) is the exponent pair of s^i t^j.
class BiPoly {
public:
    using Monomial = std::pair<int, int>;

    BiPoly() = default;
    BiPoly(const BigRational& constant);

    /// a * s + b * t
    static BiPoly linear(const BigRational& a, const BigRational& b);
    /// Product of `a_i s + b_i t`; homogeneous of degree factors.size().
    static BiPoly product_of_linear(std::span<const std::pair<BigRational, BigRational>> factors);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, BigRational>& terms() const { return terms_; }
    BigRational coefficient(int i, int j) const;
    /// Total degree when homogeneous, -1 when zero; throws PreconditionError otherwise.
    int homogeneous_degree() const;

    BigRational evaluate(const BigRational& s, const BigRational& t) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const BigRational& k);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(BiPoly a, const BigRational& k) { return a *= k; }
    friend BiPoly operator*(const BigRational& k, BiPoly a) { return a *= k; }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void add_term(const Monomial& m, const BigRational& c);
    std::map<Monomial, BigRational> terms_;
};

inline BigRational coefficient(const BiPoly& b, int i, int j) { return b.coefficient(i, j); }

/// b(x, c - m x)
UniPoly specialize(const BiPoly& b, const BigRational& c, const BigRational& m);

}  // namespace kstab
