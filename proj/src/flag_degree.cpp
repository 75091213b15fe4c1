#include "kstab/flag_degree.hpp"

#include <algorithm>

namespace kstab {

namespace {

void require_supported(const Marking& marked, const Weight& w, const char* what) {
    for (Eigen::Index i = 0; i < w.coeffs.size(); ++i) {
        if (!w.coeffs(i).is_zero() && !marked.contains(static_cast<int>(i) + 1)) {
            throw PreconditionError(std::string(what) + " " + w.to_string() + " is not supported on the marking " +
                                    marked.to_string());
        }
    }
}

std::string signed_term(const BigInt& k, bool with_x, bool leading) {
    std::string out = k < 0 ? "-" : leading ? "" : "+";
    const BigInt mag = abs(k);
    if (!with_x) return out + mag.get_str();
    if (mag != 1) out += mag.get_str();
    return out + "x";
}

}  // namespace

Marking::Marking(std::vector<int> nodes, int rank) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    if (nodes_.empty()) throw InputError("marking must contain at least one node");
    if (nodes_.front() < 1 || nodes_.back() > rank) {
        throw InputError("marked node out of range 1.." + std::to_string(rank));
    }
}

Marking Marking::from_support(std::span<const Weight> weights) {
    if (weights.empty()) throw InputError("marking from an empty weight list");
    const auto rank = static_cast<int>(weights.front().coeffs.size());
    std::vector<int> nodes;
    for (const auto& w : weights) {
        if (w.coeffs.size() != rank) throw InputError("weights of different dimensions");
        for (int i = 0; i < rank; ++i) {
            if (!w.coeffs(i).is_zero()) nodes.push_back(i + 1);
        }
    }
    return Marking(std::move(nodes), rank);
}

bool Marking::contains(int node) const { return std::binary_search(nodes_.begin(), nodes_.end(), node); }

std::string Marking::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(nodes_[i]);
    }
    return out + "}";
}

std::string LinearForm::to_string() const {
    BigInt den;
    mpz_lcm(den.get_mpz_t(), constant.denominator().get_mpz_t(), slope.denominator().get_mpz_t());
    const BigInt a = (constant * BigRational(den)).to_integer();
    const BigInt b = (slope * BigRational(den)).to_integer();
    std::string body;
    bool two_terms = false;
    if (b == 0) {
        body = a.get_str();
    } else if (a == 0) {
        body = signed_term(b, true, true);
    } else if (a < 0 && b > 0) {
        body = signed_term(b, true, true) + signed_term(a, false, false);
        two_terms = true;
    } else {
        body = signed_term(a, false, true) + signed_term(b, true, false);
        two_terms = true;
    }
    if (den == 1) return body;
    return (two_terms ? "(" + body + ")" : body) + "/" + den.get_str();
}

std::vector<Root> complementary_roots(const RootSystem& rs, const Marking& marked) {
    std::vector<Root> out;
    for (const auto& g : rs.positive_roots()) {
        const bool touches = std::any_of(marked.nodes().begin(), marked.nodes().end(),
                                         [&](int node) { return g.coeffs(node - 1) != 0; });
        if (touches) out.push_back(g);
    }
    return out;
}

BigRational rho_product(const RootSystem& rs, const Marking& marked) {
    const Weight r = rho(rs);
    BigRational prod(1);
    for (const auto& g : complementary_roots(rs, marked)) prod *= pairing(rs, r, g);
    return prod;
}

BigRational degree(const RootSystem& rs, const Marking& marked, const Weight& w) {
    if (w.coeffs.size() != rs.rank()) throw InputError("degree: weight has wrong dimension");
    if (!w.is_dominant()) throw PreconditionError("degree: weight " + w.to_string() + " is not dominant");
    require_supported(marked, w, "degree: weight");
    const auto roots = complementary_roots(rs, marked);
    const Weight r = rho(rs);
    BigRational value(factorial(static_cast<unsigned>(roots.size())));
    for (const auto& g : roots) value *= pairing(rs, w, g) / pairing(rs, r, g);
    return value;
}

std::vector<PencilRow> pencil_table(const RootSystem& rs, const Marking& marked, const WeightPencil& pencil) {
    require_supported(marked, pencil.constant, "pencil constant part");
    require_supported(marked, pencil.slope, "pencil slope part");
    const Weight r = rho(rs);
    std::vector<PencilRow> rows;
    for (auto& g : complementary_roots(rs, marked)) {
        LinearForm num{pairing(rs, pencil.constant, g), pairing(rs, pencil.slope, g)};
        BigRational den = pairing(rs, r, g);
        rows.push_back({std::move(g), std::move(num), std::move(den)});
    }
    return rows;
}

UniPoly pencil_numerator_product(const RootSystem& rs, const Marking& marked, const WeightPencil& pencil) {
    std::vector<std::pair<BigRational, BigRational>> factors;
    for (const auto& row : pencil_table(rs, marked, pencil)) factors.emplace_back(row.numerator.constant, row.numerator.slope);
    return UniPoly::product_of_linear(factors);
}

UniPoly degree_pencil(const RootSystem& rs, const Marking& marked, const WeightPencil& pencil) {
    const auto rows = pencil_table(rs, marked, pencil);
    std::vector<std::pair<BigRational, BigRational>> factors;
    BigRational scale(factorial(static_cast<unsigned>(rows.size())));
    for (const auto& row : rows) {
        factors.emplace_back(row.numerator.constant, row.numerator.slope);
        scale /= row.denominator;
    }
    return UniPoly::product_of_linear(factors) * scale;
}

BiPoly degree_bivariate(const RootSystem& rs, const Marking& marked, const Weight& w_a, const Weight& w_b) {
    require_supported(marked, w_a, "weight");
    require_supported(marked, w_b, "weight");
    const auto roots = complementary_roots(rs, marked);
    const Weight r = rho(rs);
    std::vector<std::pair<BigRational, BigRational>> factors;
    BigRational scale(factorial(static_cast<unsigned>(roots.size())));
    for (const auto& g : roots) {
        factors.emplace_back(pairing(rs, w_a, g), pairing(rs, w_b, g));
        scale /= pairing(rs, r, g);
    }
    return BiPoly::product_of_linear(factors) * scale;
}

std::vector<BigRational> mixed_degrees(const BiPoly& p, int d) {
    if (const int hd = p.homogeneous_degree(); hd >= 0 && hd != d) {
        throw PreconditionError("mixed_degrees: polynomial is not of degree " + std::to_string(d));
    }
    std::vector<BigRational> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        out.push_back(p.coefficient(k, d - k) /
                      BigRational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(k))));
    }
    return out;
}

}  // namespace kstab
