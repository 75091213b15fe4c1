#pragma once

/**
 * @file flag_degree.hpp
 * @brief Degrees of line bundles on flag varieties G/P_S.
 *
 * For a dominant weight w supported on the marked nodes S, the line bundle
 * of w on G/P_S has degree
 *
 *     |C|! * prod_{g in C} (w, g) / (rho, g),
 *
 * where C is the set of positive roots with a nonzero coefficient on some
 * node of S (so |C| = dim G/P_S). The same product, taken over weights that
 * vary linearly, gives the degree polynomial of a pencil (univariate) or of
 * a two-weight mix (bivariate, homogeneous of degree |C|).
 */

#include "kstab/polynomial.hpp"
#include "kstab/root_system.hpp"

#include <span>
#include <string>
#include <vector>

namespace kstab {

/// The set S of marked simple roots defining P_S (sorted 1-based node indices).
class Marking {
public:
    /// Throws InputError when empty or out of range for `rank`.
    Marking(std::vector<int> nodes, int rank);

    /// Union of the supports of the given weights.
    static Marking from_support(std::span<const Weight> weights);

    const std::vector<int>& nodes() const { return nodes_; }
    bool contains(int node) const;
    std::string to_string() const;

private:
    std::vector<int> nodes_;
};

/// `constant + slope * x`, the numerator (w(x), g) of one complementary root.
struct LinearForm {
    BigRational constant;
    BigRational slope;

    BigRational at(const BigRational& x) const { return constant + slope * x; }
    UniPoly as_poly() const { return UniPoly::linear(constant, slope); }
    /// Integer-normalized text, e.g. "x", "(24-x)/2", "6-2x", "16".
    std::string to_string() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// w(x) = constant + x * slope, node by node.
struct WeightPencil {
    Weight constant;
    Weight slope;

    Weight at(const BigRational& x) const { return constant + x * slope; }
};

struct PencilRow {
    Root root;
    LinearForm numerator;
    BigRational denominator;  // (rho, root)
};

std::vector<Root> complementary_roots(const RootSystem& rs, const Marking& marked);

/// Throws PreconditionError when w is not dominant or not supported on `marked`.
BigRational degree(const RootSystem& rs, const Marking& marked, const Weight& w);

/// prod_{g in C} (rho, g)
BigRational rho_product(const RootSystem& rs, const Marking& marked);

/// One row per complementary root: ((w(x), g), (rho, g)).
std::vector<PencilRow> pencil_table(const RootSystem& rs, const Marking& marked, const WeightPencil& pencil);

/// prod_{g in C} (w(x), g)
UniPoly pencil_numerator_product(const RootSystem& rs, const Marking& marked, const WeightPencil& pencil);

/// |C|! * prod (w(x), g) / (rho, g) as a polynomial in x.
UniPoly degree_pencil(const RootSystem& rs, const Marking& marked, const WeightPencil& pencil);

/// P(s, t) = |C|! * prod (s w_a + t w_b, g) / (rho, g). The mixed number
/// A^k B^(d-k) on G/P_S equals coefficient(P, k, d-k) / binomial(d, k).
BiPoly degree_bivariate(const RootSystem& rs, const Marking& marked, const Weight& w_a, const Weight& w_b);

/// coefficient(P, k, d-k) / binomial(d, k) for every k = 0..d, where P is
/// homogeneous of degree d (or zero).
std::vector<BigRational> mixed_degrees(const BiPoly& p, int d);

}  // namespace kstab
