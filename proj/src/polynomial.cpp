#include "kstab/polynomial.hpp"

#include <algorithm>

namespace kstab {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const BigRational& constant) : coeffs_{constant} { trim(); }

UniPoly UniPoly::linear(const BigRational& constant, const BigRational& slope) {
    return UniPoly(std::vector<BigRational>{constant, slope});
}

UniPoly UniPoly::product_of_linear(std::span<const std::pair<BigRational, BigRational>> factors) {
    UniPoly p(1);
    for (const auto& [c, s] : factors) p *= linear(c, s);
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational UniPoly::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(power)];
}

BigRational UniPoly::evaluate(const BigRational& at) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::antiderivative() const {
    std::vector<BigRational> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / BigRational(i + 1);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * BigRational(i);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned exponent) const {
    UniPoly result(1), base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string UniPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const BigRational mag = abs(c);
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != BigRational(1)) out += mag.to_string() + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

BigRational definite_integral(const UniPoly& p, const BigRational& lo, const BigRational& hi) {
    const UniPoly anti = p.antiderivative();
    return anti(hi) - anti(lo);
}

// ---------------------------------------------------------------------------

BiPoly::BiPoly(const BigRational& constant) { add_term({0, 0}, constant); }

BiPoly BiPoly::linear(const BigRational& a, const BigRational& b) {
    BiPoly p;
    p.add_term({1, 0}, a);
    p.add_term({0, 1}, b);
    return p;
}

BiPoly BiPoly::product_of_linear(std::span<const std::pair<BigRational, BigRational>> factors) {
    BiPoly p(1);
    for (const auto& [a, b] : factors) p *= linear(a, b);
    return p;
}

void BiPoly::add_term(const Monomial& m, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigRational BiPoly::coefficient(int i, int j) const {
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? BigRational() : it->second;
}

int BiPoly::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    const int d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [m, c] : terms_) {
        if (m.first + m.second != d) throw PreconditionError("bivariate polynomial is not homogeneous");
    }
    return d;
}

BigRational BiPoly::evaluate(const BigRational& s, const BigRational& t) const {
    BigRational acc;
    for (const auto& [m, c] : terms_) acc += c * pow(s, m.first) * pow(t, m.second);
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    BiPoly out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) out.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    }
    terms_ = std::move(out.terms_);
    return *this;
}

BiPoly& BiPoly::operator*=(const BigRational& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
}

UniPoly specialize(const BiPoly& b, const BigRational& c, const BigRational& m) {
    const UniPoly t = UniPoly::linear(c, -m);
    UniPoly out;
    for (const auto& [mono, coeff] : b.terms()) {
        out += coeff * UniPoly::x().pow(static_cast<unsigned>(mono.first)) * t.pow(static_cast<unsigned>(mono.second));
    }
    return out;
}

}  // namespace kstab
