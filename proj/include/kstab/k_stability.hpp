#pragma once

/**
 * @file k_stability.hpp
 * @brief xi- and beta-invariants of the exceptional divisor of a two-orbit blow-up.
 *
 * Setting: X is a Fano manifold of dimension n with -K_X = k H_X, Z is the
 * closed orbit of codimension r, phi: X~ -> X is the blow-up along Z with
 * exceptional divisor E, and pi: X~ -> Y is a second fibration. On X~ the
 * divisor lattice used here is spanned by E and pi^*H_Y, with
 *
 *     E = a_Y pi^*H_Y + a_X phi^*H_X.
 *
 * E is the flag variety G/P_{Y,Z} and restriction to E sends pi^*H_Y to the
 * weight omega_Y and phi^*H_X to omega_Z. Every top intersection number on
 * X~ reduces to a degree on E:
 *
 *     (pi^*H_Y)^n = 0,   E^b (pi^*H_Y)^(n-b) = (E|_E)^(b-1) (omega_Y)^(n-b)   (b >= 1).
 *
 * The volume of phi^*(-K_X) - xE is its top self-intersection on [0, eps]
 * and zero beyond, which gives S(E), A(E) = r, and beta(E) = L^n (A - S).
 * Independently, xi(Z) = n int_0^eps (r - x) deg_E((phi^*(-K_X) - xE)|_E) dx
 * is computed straight from the degree-pencil product. The two agree
 * whenever the class at x = eps is a multiple of pi^*H_Y.
 */

#include "kstab/arith.hpp"
#include "kstab/flag_degree.hpp"
#include "kstab/polynomial.hpp"
#include "kstab/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kstab {

/// E = a_Y pi^*H_Y + a_X phi^*H_X
struct ExceptionalClass {
    int a_Y = -1;
    int a_X = 1;

    friend bool operator==(const ExceptionalClass&, const ExceptionalClass&) = default;
};

struct TwoOrbitConfig {
    std::string name;
    DynkinDiagram diagram;
    std::vector<BigRational> symmetrizer_scales;  // one per component, empty = default
    Weight omega_Y;
    Weight omega_Z;
    int dim_X = 0;
    int codim = 0;
    BigRational epsilon;
    int minus_KX_multiple = 0;
    ExceptionalClass E_class;
};

/// Coefficients over {E, pi^*H_Y}.
struct DivisorClass {
    BigRational e;
    BigRational h_Y;

    static DivisorClass exceptional() { return {1, 0}; }
    static DivisorClass pullback_H_Y() { return {0, 1}; }
    /// phi^*H_X = (E - a_Y pi^*H_Y) / a_X
    static DivisorClass pullback_H_X(const ExceptionalClass& ec);
    /// h_X phi^*H_X + h_Y pi^*H_Y + e E, rewritten over {E, pi^*H_Y}.
    static DivisorClass from_pullbacks(const BigRational& h_X, const BigRational& h_Y, const BigRational& e,
                                       const ExceptionalClass& ec);

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return {a.e + b.e, a.h_Y + b.h_Y}; }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return {a.e - b.e, a.h_Y - b.h_Y}; }
    friend DivisorClass operator*(const BigRational& s, const DivisorClass& d) { return {s * d.e, s * d.h_Y}; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// A class on E written as y omega_Y + z omega_Z.
struct RestrictedClass {
    BigRational y;
    BigRational z;

    Weight to_weight(const Weight& omega_Y, const Weight& omega_Z) const { return y * omega_Y + z * omega_Z; }
    friend bool operator==(const RestrictedClass&, const RestrictedClass&) = default;
};

/// pi^*H_Y -> omega_Y, phi^*H_X -> omega_Z, E -> a_Y omega_Y + a_X omega_Z.
RestrictedClass restrict_to_E(const DivisorClass& c, const ExceptionalClass& ec);

/// A validated configuration together with the root data and the degree
/// polynomial of E that every invariant is read from.
class BlowUpModel {
public:
    /// Throws InputError when the configuration is inconsistent.
    explicit BlowUpModel(TwoOrbitConfig config);

    const TwoOrbitConfig& config() const { return config_; }
    const RootSystem& root_system() const { return roots_; }
    /// S_E = supp(omega_Y) u supp(omega_Z)
    const Marking& marking() const { return marking_; }
    int dim() const { return config_.dim_X; }
    /// deg_E(s omega_Y + t omega_Z), homogeneous of degree n - 1.
    const BiPoly& degree_polynomial() const { return degree_poly_; }
    /// omega_Y^k omega_Z^(n-1-k) on E, k = 0..n-1.
    const std::vector<BigRational>& mixed_degrees() const { return mixed_; }

private:
    TwoOrbitConfig config_;
    RootSystem roots_;
    Marking marking_;
    BiPoly degree_poly_;
    std::vector<BigRational> mixed_;
};

/// E^b (pi^*H_Y)^(n-b) on X~.
BigRational intersection_number(const BlowUpModel& model, int e_power);

/// D^n by binomial expansion over {E, pi^*H_Y}.
BigRational top_self_intersection(const BlowUpModel& model, const DivisorClass& d);

/// E . D^(n-1), evaluated as the degree of D|_E on E.
BigRational degree_on_E(const BlowUpModel& model, const DivisorClass& d);

/// phi^*(-K_X) = k phi^*H_X
DivisorClass anticanonical_pullback(const TwoOrbitConfig& config);

/// (phi^*(-K_X) - xE)|_E as a weight pencil in x.
WeightPencil restricted_pencil(const BlowUpModel& model);

/// Throws PreconditionError when the restricted pencil leaves the dominant
/// cone somewhere on [0, eps].
void require_dominant_on_window(const BlowUpModel& model);

/// H_X^n on X.
BigRational hyperplane_degree(const BlowUpModel& model);

/// v(x) = (phi^*(-K_X) - xE)^n; the volume on [0, eps].
UniPoly volume_polynomial(const BlowUpModel& model);

/// A(E) = r for a smooth blow-up center of codimension r.
BigRational log_discrepancy(const TwoOrbitConfig& config);

/// (1 / v(0)) int_0^eps v; PreconditionError when v(0) = 0.
BigRational S_invariant(const BlowUpModel& model);

/// n (r - x) deg_E((phi^*(-K_X) - xE)|_E)
UniPoly xi_integrand(const BlowUpModel& model);

BigRational xi(const BlowUpModel& model);

/// v(0) (A(E) - S(E))
BigRational beta(const BlowUpModel& model);

enum class Verdict { positive, zero, negative };

std::string to_string(Verdict v);

struct InvariantReport {
    std::string name;
    BigRational xi;
    std::optional<Factorization> xi_factored;  // present when xi is an integer
    BigRational beta;
    BigRational A;
    BigRational S;
    BigRational L_to_n;
    BigRational H_X_to_n;
    UniPoly volume_poly;
    UniPoly integrand_poly;
    LinearForm pencil_Y;  // w(x) = pencil_Y(x) omega_Y + pencil_Z(x) omega_Z on E
    LinearForm pencil_Z;
    std::vector<PencilRow> per_root_table;
    BigRational rho_product;
    UniPoly numerator_product;
    Verdict verdict = Verdict::zero;
};

InvariantReport report(const BlowUpModel& model);

}  // namespace kstab
