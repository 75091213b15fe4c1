#pragma once

/**
 * @file root_system.hpp
 * @brief Root systems of simple types A-G and their finite products.
 *
 * Nodes are numbered globally and 1-based by concatenating the Bourbaki
 * numbering of each component in diagram order. Roots are integer vectors
 * over the simple roots; weights are rational vectors over the fundamental
 * weights. The Cartan matrix follows c_ij = <alpha_i, alpha_j^vee>.
 */

#include "kstab/arith.hpp"
#include "kstab/linalg.hpp"

#include <Eigen/Core>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kstab {

struct DynkinComponent {
    char letter = 'A';
    int rank = 1;

    friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

class DynkinDiagram {
public:
    DynkinDiagram() = default;
    /// Throws InputError on an invalid letter/rank pair or an empty list.
    explicit DynkinDiagram(std::vector<DynkinComponent> components);

    /// "F4", "A1xG2", "B3xA2" (case-insensitive letter, components joined by 'x').
    static DynkinDiagram parse(std::string_view text);

    const std::vector<DynkinComponent>& components() const { return components_; }
    int rank() const;
    /// 0-based global index of the first node of component c.
    int offset(std::size_t c) const;
    /// Component containing the 1-based global node.
    std::size_t component_of(int node) const;
    std::string to_string() const;

    friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;

private:
    std::vector<DynkinComponent> components_;
};

/// Integer coordinates over the simple roots (global node order).
struct Root {
    Eigen::VectorXi coeffs;

    int height() const { return coeffs.sum(); }
    std::string to_string() const;

    friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
};

/// Rational coordinates over the fundamental weights (global node order).
struct Weight {
    RationalVector coeffs;

    static Weight zero(int rank) { return {RationalVector::Zero(rank)}; }
    /// omega_node, node 1-based.
    static Weight fundamental(int rank, int node);

    bool is_dominant() const;
    std::string to_string() const;

    friend Weight operator+(const Weight& a, const Weight& b) { return {a.coeffs + b.coeffs}; }
    friend Weight operator-(const Weight& a, const Weight& b) { return {a.coeffs - b.coeffs}; }
    friend Weight operator*(const BigRational& s, const Weight& w) { return {w.coeffs * s}; }
    friend bool operator==(const Weight& a, const Weight& b) { return a.coeffs == b.coeffs; }
};

class RootSystem {
public:
    /// Builds Cartan data and enumerates positive roots. `scales` holds one
    /// positive factor per component applied to the default symmetrizers
    /// (minimal d_i = 1 per component); empty means all ones.
    static RootSystem build(const DynkinDiagram& diagram, std::span<const BigRational> scales = {});

    const DynkinDiagram& diagram() const { return diagram_; }
    int rank() const { return static_cast<int>(cartan_.rows()); }
    const Eigen::MatrixXi& cartan() const { return cartan_; }
    /// d_i with d_j c_ij symmetric.
    const RationalVector& symmetrizers() const { return symmetrizers_; }
    /// Ordered by height, then lexicographically descending.
    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    /// Row i holds omega_i over the simple roots.
    const RationalMatrix& fundamental_weights() const { return fundamental_weights_; }

    /// Expansion of w over the simple roots.
    RationalVector to_simple_basis(const Weight& w) const;

private:
    DynkinDiagram diagram_;
    Eigen::MatrixXi cartan_;
    RationalVector symmetrizers_;
    std::vector<Root> positive_roots_;
    RationalMatrix fundamental_weights_;
};

/// Gram matrix of the simple roots of one simple component, scaled so all
/// entries are integers (Bourbaki numbering).
Eigen::MatrixXi simple_gram_matrix(const DynkinComponent& component);

/// Height-by-height root-string closure driven by the Cartan matrix alone.
std::vector<Root> enumerate_positive_roots(const Eigen::MatrixXi& cartan);

inline const std::vector<Root>& positive_roots(const RootSystem& rs) { return rs.positive_roots(); }
inline const RationalMatrix& fundamental_weights(const RootSystem& rs) { return rs.fundamental_weights(); }

/// The all-ones weight.
Weight rho(const RootSystem& rs);

/// (w, g) = sum_i c_i m_i d_i for w = sum c_i omega_i and g = sum m_i alpha_i.
BigRational pairing(const RootSystem& rs, const Weight& w, const Root& g);

/// dim of the Lie algebra: 2 |Phi+| + rank.
int dim_adjoint(const RootSystem& rs);

/// Classical positive-root count of a simple type.
int classical_positive_root_count(const DynkinComponent& component);

}  // namespace kstab
