#include "kstab/arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>

namespace kstab {

BigRational::BigRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) throw DivisionByZero();
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw InputError("not a rational number: '" + std::string(text) + "'");
        }
        std::string owned(s.front() == '+' ? s.substr(1) : s);
        return BigInt(owned, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_int(text));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return BigRational(parse_int(text.substr(0, slash)), den);
}

BigInt BigRational::to_integer() const {
    if (!is_integer()) throw PreconditionError("expected an integer, got " + to_string());
    return value_.get_num();
}

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.value_ = -value_;
    return r;
}

BigRational pow(const BigRational& base, long exponent) {
    if (exponent < 0) return BigRational(1) / pow(base, -exponent);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

BigRational abs(const BigRational& v) { return v.sign() < 0 ? -v : v; }

std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.to_string(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// ---------------------------------------------------------------------------
// Factorization

BigInt Factorization::value() const {
    BigInt v = sign;
    for (const auto& [p, e] : factors) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

std::string Factorization::to_string() const {
    if (sign == 0) return "0";
    std::string out = sign < 0 ? "-" : "";
    if (factors.empty()) return out + "1";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += " · ";
        out += factors[i].prime.get_str();
        if (factors[i].exponent != 1) out += "^" + std::to_string(factors[i].exponent);
    }
    return out;
}

namespace {

constexpr unsigned long kTrialLimit = 1 << 16;

// Largest n for which Miller-Rabin with the first 13 prime bases is proven exact.
const BigInt& mr_deterministic_bound() {
    static const BigInt bound("3317044064679887385961981", 10);
    return bound;
}

bool miller_rabin(const BigInt& n, unsigned long base) {
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt a = base, x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const BigInt n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n_minus_1) return true;
    }
    return false;
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Montgomery arithmetic on one or two machine words. Rho runs entirely in
// Montgomery form: the iteration z -> z*z/R + c is still a quadratic map mod
// every prime factor, and R is a unit, so gcds are unaffected.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Mont64 {
    using word = u64;
    u64 n;
    u64 n_neg_inv;

    explicit Mont64(u64 modulus) : n(modulus), n_neg_inv(0) {
        u64 inv = modulus;  // correct to 3 bits for odd modulus
        for (int i = 0; i < 5; ++i) inv *= 2 - modulus * inv;
        n_neg_inv = ~inv + 1;
    }
    u64 mul(u64 a, u64 b) const {
        const u128 t = static_cast<u128>(a) * b;
        const u64 m = static_cast<u64>(t) * n_neg_inv;
        const u64 hi = static_cast<u64>(t >> 64);
        const u64 mh = static_cast<u64>((static_cast<u128>(m) * n) >> 64);
        u64 r = hi + mh + (static_cast<u64>(t) != 0);
        return r >= n ? r - n : r;
    }
};

inline void mul_wide(u128 a, u128 b, u128& hi, u128& lo) {
    const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
    const u128 p00 = static_cast<u128>(a0) * b0, p01 = static_cast<u128>(a0) * b1;
    const u128 p10 = static_cast<u128>(a1) * b0, p11 = static_cast<u128>(a1) * b1;
    const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    lo = (mid << 64) | static_cast<u64>(p00);
}

struct Mont128 {
    using word = u128;
    u128 n;
    u128 n_neg_inv;

    explicit Mont128(u128 modulus) : n(modulus), n_neg_inv(0) {
        u128 inv = modulus;
        for (int i = 0; i < 6; ++i) inv *= 2 - modulus * inv;
        n_neg_inv = ~inv + 1;
    }
    u128 mul(u128 a, u128 b) const {
        u128 hi, lo, mh, ml;
        mul_wide(a, b, hi, lo);
        const u128 m = lo * n_neg_inv;
        mul_wide(m, n, mh, ml);
        const u128 r = hi + mh + (lo != 0);
        return r >= n ? r - n : r;
    }
};

template <class W>
int trailing_zeros(W v) {
    if constexpr (sizeof(W) == 8) {
        return __builtin_ctzll(v);
    } else {
        const u64 low = static_cast<u64>(v);
        return low != 0 ? __builtin_ctzll(low) : 64 + __builtin_ctzll(static_cast<u64>(v >> 64));
    }
}

template <class W>
W binary_gcd(W a, W b) {
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = trailing_zeros(a | b);
    a >>= trailing_zeros(a);
    do {
        b >>= trailing_zeros(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

constexpr u64 kUnlimited = ~u64{0};

// Brent's cycle detection with batched gcds. Returns a divisor of n: a
// nontrivial one on success, n when the cycle closed without splitting, or
// 1 when the cycle length passed max_steps.
template <class Mont>
typename Mont::word brent_rho(const Mont& mont, typename Mont::word c, u64 max_steps) {
    using W = typename Mont::word;
    constexpr u64 kBatch = 128;
    const W n = mont.n;
    auto step = [&](W v) {
        W r = mont.mul(v, v) + c;
        return r >= n ? r - n : r;
    };
    auto distance = [](W a, W b) { return a > b ? a - b : b - a; };
    W y = 2, x = 2, ys = 2, q = 1, g = 1;
    u64 r = 1;
    do {
        if (r > max_steps) return 1;
        x = y;
        for (u64 i = 0; i < r; ++i) y = step(y);
        u64 k = 0;
        do {
            ys = y;
            const u64 batch = std::min(kBatch, r - k);
            for (u64 i = 0; i < batch; ++i) {
                y = step(y);
                q = mont.mul(q, distance(x, y));
            }
            g = binary_gcd(q, n);
            k += batch;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = step(ys);
            g = binary_gcd(distance(x, ys), n);
        } while (g == 1);
    }
    return g;
}

u128 to_u128(const BigInt& v) {
    BigInt high, low;
    mpz_fdiv_q_2exp(high.get_mpz_t(), v.get_mpz_t(), 64);
    mpz_fdiv_r_2exp(low.get_mpz_t(), v.get_mpz_t(), 64);
    return (static_cast<u128>(high.get_ui()) << 64) | low.get_ui();
}

BigInt from_u128(u128 v) {
    BigInt out = static_cast<unsigned long>(v >> 64);
    out <<= 64;
    out += static_cast<unsigned long>(static_cast<u64>(v));
    return out;
}

BigInt brent_rho_big(const BigInt& n, unsigned long c, u64 max_steps) {
    constexpr unsigned long kBatch = 128;
    BigInt y = 2, x, ys, q = 1, g = 1, diff;
    auto step = [&](BigInt& v) {
        mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
        mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), c);
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    unsigned long r = 1;
    do {
        if (r > max_steps) return 1;
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        do {
            ys = y;
            const unsigned long batch = std::min(kBatch, r - k);
            for (unsigned long i = 0; i < batch; ++i) {
                step(y);
                mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += batch;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        // The batch overshot; replay it one step at a time.
        do {
            step(ys);
            mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

// Residues mod n for the elliptic-curve method, in Montgomery form on two words.
struct Field128 {
    using elem = u128;
    Mont128 mont;
    u128 r2;  // R^2 mod n

    explicit Field128(const BigInt& n) : mont(to_u128(n)), r2(0) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, 256);
        r2 = to_u128(r % n);
    }
    elem mul(elem a, elem b) const { return mont.mul(a, b); }
    elem add(elem a, elem b) const {
        const u128 r = a + b;
        return r >= mont.n ? r - mont.n : r;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + (mont.n - b); }
    elem from_int(const BigInt& v) const { return mont.mul(to_u128(v), r2); }
    BigInt gcd_with_n(elem a) const { return from_u128(binary_gcd(a, mont.n)); }
};

// The same operations on GMP integers, for moduli beyond two words.
struct FieldBig {
    using elem = BigInt;
    BigInt n;

    elem mul(const elem& a, const elem& b) const {
        elem r = a * b;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        return r;
    }
    elem add(const elem& a, const elem& b) const {
        elem r = a + b;
        if (r >= n) r -= n;
        return r;
    }
    elem sub(const elem& a, const elem& b) const {
        elem r = a - b;
        if (r < 0) r += n;
        return r;
    }
    elem from_int(const BigInt& v) const { return v; }
    BigInt gcd_with_n(const elem& a) const { return gcd(a, n); }
};

const std::vector<bool>& prime_table(unsigned long limit) {
    static std::vector<bool> table;
    if (table.size() <= limit) {
        table.assign(limit + 1, true);
        table[0] = table[1] = false;
        for (unsigned long i = 2; i * i <= limit; ++i) {
            if (!table[i]) continue;
            for (unsigned long j = i * i; j <= limit; j += i) table[j] = false;
        }
    }
    return table;
}

// Lenstra's elliptic-curve method on Montgomery curves with x-only
// arithmetic, Suyama parametrization, and a baby-step giant-step stage 2.
template <class F>
class EcmCurve {
public:
    using E = typename F::elem;
    struct Point {
        E x;
        E z;
    };

    EcmCurve(const F& field, const E& a24) : f_(field), a24_(a24) {}

    Point dbl(const Point& p) const {
        const E s = f_.add(p.x, p.z), d = f_.sub(p.x, p.z);
        const E t1 = f_.mul(s, s), t2 = f_.mul(d, d), t3 = f_.sub(t1, t2);
        return {f_.mul(t1, t2), f_.mul(t3, f_.add(t2, f_.mul(a24_, t3)))};
    }
    // a + b given a - b
    Point add(const Point& a, const Point& b, const Point& diff) const {
        const E u = f_.mul(f_.sub(a.x, a.z), f_.add(b.x, b.z));
        const E v = f_.mul(f_.add(a.x, a.z), f_.sub(b.x, b.z));
        const E plus = f_.add(u, v), minus = f_.sub(u, v);
        return {f_.mul(diff.z, f_.mul(plus, plus)), f_.mul(diff.x, f_.mul(minus, minus))};
    }
    Point multiply(const Point& p, u64 k) const {
        if (k == 1) return p;
        Point r0 = p, r1 = dbl(p);
        for (int bit = 62 - __builtin_clzll(k); bit >= 0; --bit) {
            if ((k >> bit) & 1U) {
                r0 = add(r1, r0, p);
                r1 = dbl(r1);
            } else {
                r1 = add(r0, r1, p);
                r0 = dbl(r0);
            }
        }
        return r0;
    }

private:
    const F& f_;
    E a24_;
};

template <class F>
BigInt ecm_one_curve(const F& f, const BigInt& n, unsigned long sigma, unsigned long b1, unsigned long b2) {
    using E = typename F::elem;
    const BigInt s = sigma;
    const BigInt u = (s * s - 5) % n, v = (4 * s) % n;
    const BigInt u3 = u * u * u % n, v3 = v * v * v % n;
    BigInt num = (v - u) % n;
    num = num * num % n * num % n * ((3 * u + v) % n) % n;
    if (num < 0) num += n;
    BigInt den = 16 * u3 % n * v % n, inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0) return gcd(den, n);
    const EcmCurve<F> curve(f, f.from_int(num * inv % n));
    using Point = typename EcmCurve<F>::Point;
    Point q{f.from_int(u3), f.from_int(v3)};

    const auto& primes = prime_table(b2);
    for (unsigned long p = 2; p <= b1; ++p) {
        if (!primes[p]) continue;
        u64 pe = p;
        while (pe * p <= b1) pe *= p;
        q = curve.multiply(q, pe);
    }
    BigInt g = f.gcd_with_n(q.z);
    if (g != 1) return g;

    constexpr unsigned long kD = 210;
    std::vector<Point> baby;
    std::vector<unsigned long> baby_index;
    const Point q2 = curve.dbl(q);
    Point prev = q, cur = curve.add(q2, q, q);  // q, 3q
    for (unsigned long b = 1; b < kD / 2; b += 2) {
        const Point& pb = b == 1 ? q : cur;
        if (std::gcd(b, kD) == 1) {
            baby.push_back(pb);
            baby_index.push_back(b);
        }
        if (b > 1) {
            const Point next = curve.add(cur, q2, prev);
            prev = cur;
            cur = next;
        }
    }
    const Point giant = curve.multiply(q, kD);
    unsigned long m = std::max(1UL, b1 / kD);
    Point g_prev = curve.multiply(giant, m), g_cur = curve.multiply(giant, m + 1);
    E acc = f.from_int(1);
    auto fold = [&](const Point& gm, unsigned long mm) {
        for (std::size_t i = 0; i < baby.size(); ++i) {
            const unsigned long lo = mm * kD - baby_index[i], hi = mm * kD + baby_index[i];
            const bool hit = (lo > b1 && lo <= b2 && primes[lo]) || (hi > b1 && hi <= b2 && primes[hi]);
            if (!hit) continue;
            acc = f.mul(acc, f.sub(f.mul(gm.x, baby[i].z), f.mul(baby[i].x, gm.z)));
        }
    };
    fold(g_prev, m);
    for (++m; (m - 1) * kD <= b2; ++m) {
        fold(g_cur, m);
        const Point next = curve.add(g_cur, giant, g_prev);
        g_prev = g_cur;
        g_cur = next;
    }
    return f.gcd_with_n(acc);
}

template <class F>
BigInt ecm(const F& f, const BigInt& n) {
    struct Round {
        unsigned long b1, b2, curves;
    };
    static constexpr std::array<Round, 4> kRounds{{{300, 15'000, 20}, {2000, 150'000, 40}, {11'000, 1'100'000, 90}, {50'000, 5'000'000, 200}}};
    unsigned long sigma = 6;
    for (const auto& round : kRounds) {
        for (unsigned long i = 0; i < round.curves; ++i, ++sigma) {
            const BigInt g = ecm_one_curve(f, n, sigma, round.b1, round.b2);
            if (g != 1 && g != n) return g;
        }
    }
    return 1;
}

// Picks the narrowest arithmetic that holds n (odd, composite, no factor
// below the trial-division limit). Small factors fall to a short rho run,
// larger ones to ECM; an unbounded rho is the last resort.
BigInt find_divisor(const BigInt& n) {
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (bits <= 62) {
        for (u64 c = 1;; ++c) {
            const u64 d = brent_rho(Mont64(n.get_ui()), c, kUnlimited);
            if (d != 1 && d != n.get_ui()) return BigInt(static_cast<unsigned long>(d));
        }
    }
    constexpr u64 kShortRho = 1 << 13;
    if (bits <= 126) {
        const Mont128 mont(to_u128(n));
        const u128 d = brent_rho(mont, 1, kShortRho);
        if (d != 1 && d != mont.n) return from_u128(d);
        if (BigInt g = ecm(Field128(n), n); g != 1) return g;
        for (u128 c = 2;; ++c) {
            const u128 e = brent_rho(mont, c, kUnlimited);
            if (e != 1 && e != mont.n) return from_u128(e);
        }
    }
    const BigInt d = brent_rho_big(n, 1, kShortRho);
    if (d != 1 && d != n) return d;
    if (BigInt g = ecm(FieldBig{n}, n); g != 1) return g;
    for (unsigned long c = 2;; ++c) {
        const BigInt e = brent_rho_big(n, c, kUnlimited);
        if (e != 1 && e != n) return e;
    }
}

void split_large(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split_large(root, out);
        split_large(root, out);
        return;
    }
    if (mpz_even_p(n.get_mpz_t())) {
        ++out[BigInt(2)];
        split_large(n / 2, out);
        return;
    }
    const BigInt d = find_divisor(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned long, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long p : kBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < mr_deterministic_bound()) {
        return std::all_of(kBases.begin(), kBases.end(), [&](unsigned long b) { return miller_rabin(n, b); });
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Factorization factorize(const BigInt& n) {
    Factorization f;
    f.sign = sgn(n);
    if (f.sign == 0) return f;
    BigInt rest = abs(n);
    for (unsigned long p : small_primes()) {
        if (mpz_fits_ulong_p(rest.get_mpz_t()) && p * p > rest.get_ui()) break;  // rest is 1 or prime
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) f.factors.push_back({BigInt(p), e});
    }
    std::map<BigInt, unsigned> large;
    split_large(rest, large);
    for (auto& [p, e] : large) f.factors.push_back({p, e});
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
}

}  // namespace kstab
