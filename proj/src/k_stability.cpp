#include "kstab/k_stability.hpp"

#include <array>

namespace kstab {

DivisorClass DivisorClass::pullback_H_X(const ExceptionalClass& ec) {
    if (ec.a_X == 0) throw InputError("E_class.a_X must be nonzero");
    return {BigRational(1) / BigRational(ec.a_X), BigRational(-ec.a_Y) / BigRational(ec.a_X)};
}

DivisorClass DivisorClass::from_pullbacks(const BigRational& h_X, const BigRational& h_Y, const BigRational& e,
                                          const ExceptionalClass& ec) {
    return h_X * pullback_H_X(ec) + h_Y * pullback_H_Y() + e * exceptional();
}

RestrictedClass restrict_to_E(const DivisorClass& c, const ExceptionalClass& ec) {
    return {c.h_Y + c.e * BigRational(ec.a_Y), c.e * BigRational(ec.a_X)};
}

BlowUpModel::BlowUpModel(TwoOrbitConfig config)
    : config_(std::move(config)),
      roots_(RootSystem::build(config_.diagram, config_.symmetrizer_scales)),
      marking_([&] {
          const int rank = config_.diagram.rank();
          if (config_.omega_Y.coeffs.size() != rank || config_.omega_Z.coeffs.size() != rank) {
              throw InputError("omega_Y and omega_Z need " + std::to_string(rank) + " coefficients for " +
                               config_.diagram.to_string());
          }
          const std::array<Weight, 2> ws{config_.omega_Y, config_.omega_Z};
          return Marking::from_support(ws);
      }()) {
    const auto& c = config_;
    if (!c.omega_Y.is_dominant() || !c.omega_Z.is_dominant()) throw InputError("omega_Y and omega_Z must be dominant");
    if (c.E_class.a_X == 0) throw InputError("E_class.a_X must be nonzero");
    if (c.dim_X < 2) throw InputError("dim_X must be at least 2");
    if (c.codim < 1 || c.codim >= c.dim_X) throw InputError("codim must satisfy 1 <= codim < dim_X");
    if (c.epsilon.sign() < 0) throw InputError("epsilon must be nonnegative");
    if (c.minus_KX_multiple < 1) throw InputError("minus_KX_multiple must be positive");
    const auto dim_E = static_cast<int>(complementary_roots(roots_, marking_).size());
    if (dim_E != c.dim_X - 1) {
        throw InputError("dim_X - 1 = " + std::to_string(c.dim_X - 1) + " but the exceptional divisor G/P" +
                         marking_.to_string() + " has dimension " + std::to_string(dim_E));
    }
    degree_poly_ = degree_bivariate(roots_, marking_, c.omega_Y, c.omega_Z);
    mixed_ = kstab::mixed_degrees(degree_poly_, dim_E);
}

BigRational intersection_number(const BlowUpModel& model, int e_power) {
    const int n = model.dim();
    if (e_power < 0 || e_power > n) throw InputError("intersection_number: exponent out of range");
    if (e_power == 0) return {};
    const auto& ec = model.config().E_class;
    const auto& mixed = model.mixed_degrees();
    // (a_Y omega_Y + a_X omega_Z)^(b-1) omega_Y^(n-b)
    const int b = e_power;
    BigRational total;
    for (int j = 0; j <= b - 1; ++j) {
        const BigRational term = BigRational(binomial(static_cast<unsigned>(b - 1), static_cast<unsigned>(j))) *
                                 pow(BigRational(ec.a_Y), j) * pow(BigRational(ec.a_X), b - 1 - j);
        if (term.is_zero()) continue;
        total += term * mixed[static_cast<std::size_t>(j + n - b)];
    }
    return total;
}

BigRational top_self_intersection(const BlowUpModel& model, const DivisorClass& d) {
    const int n = model.dim();
    BigRational total;
    for (int b = 1; b <= n; ++b) {
        total += BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(b))) * pow(d.e, b) *
                 pow(d.h_Y, n - b) * intersection_number(model, b);
    }
    return total;
}

BigRational degree_on_E(const BlowUpModel& model, const DivisorClass& d) {
    const RestrictedClass r = restrict_to_E(d, model.config().E_class);
    return model.degree_polynomial().evaluate(r.y, r.z);
}

DivisorClass anticanonical_pullback(const TwoOrbitConfig& config) {
    return BigRational(config.minus_KX_multiple) * DivisorClass::pullback_H_X(config.E_class);
}

WeightPencil restricted_pencil(const BlowUpModel& model) {
    const auto& c = model.config();
    const RestrictedClass l = restrict_to_E(anticanonical_pullback(c), c.E_class);
    const RestrictedClass e = restrict_to_E(DivisorClass::exceptional(), c.E_class);
    return {l.to_weight(c.omega_Y, c.omega_Z), BigRational(-1) * e.to_weight(c.omega_Y, c.omega_Z)};
}

void require_dominant_on_window(const BlowUpModel& model) {
    const WeightPencil p = restricted_pencil(model);
    // Each coefficient is linear in x, so the endpoints decide.
    for (const BigRational& x : {BigRational(0), model.config().epsilon}) {
        const Weight w = p.at(x);
        if (!w.is_dominant()) {
            throw PreconditionError("restricted class at x = " + x.to_string() + " is " + w.to_string() +
                                    ", outside the dominant cone");
        }
    }
}

BigRational hyperplane_degree(const BlowUpModel& model) {
    return top_self_intersection(model, DivisorClass::pullback_H_X(model.config().E_class));
}

UniPoly volume_polynomial(const BlowUpModel& model) {
    const int n = model.dim();
    const DivisorClass l = anticanonical_pullback(model.config());
    // L - xE = (l.e - x) E + l.h_Y pi^*H_Y
    const UniPoly e_coeff = UniPoly::linear(l.e, -1);
    UniPoly v;
    for (int b = 1; b <= n; ++b) {
        const BigRational i_b = intersection_number(model, b);
        if (i_b.is_zero()) continue;
        const BigRational scalar =
            BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(b))) * pow(l.h_Y, n - b) * i_b;
        v += e_coeff.pow(static_cast<unsigned>(b)) * scalar;
    }
    return v;
}

BigRational log_discrepancy(const TwoOrbitConfig& config) { return BigRational(config.codim); }

BigRational S_invariant(const BlowUpModel& model) {
    const UniPoly v = volume_polynomial(model);
    const BigRational l_n = v(0);
    if (l_n.is_zero()) throw PreconditionError("S-invariant undefined: L^n = 0");
    return definite_integral(v, 0, model.config().epsilon) / l_n;
}

UniPoly xi_integrand(const BlowUpModel& model) {
    const auto& c = model.config();
    const UniPoly pencil_degree = degree_pencil(model.root_system(), model.marking(), restricted_pencil(model));
    return UniPoly::linear(c.codim, -1) * pencil_degree * BigRational(c.dim_X);
}

BigRational xi(const BlowUpModel& model) {
    require_dominant_on_window(model);
    return definite_integral(xi_integrand(model), 0, model.config().epsilon);
}

BigRational beta(const BlowUpModel& model) {
    const BigRational l_n = volume_polynomial(model)(0);
    return l_n * (log_discrepancy(model.config()) - S_invariant(model));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::positive: return "positive";
        case Verdict::zero: return "zero";
        case Verdict::negative: return "negative";
    }
    return "zero";
}

InvariantReport report(const BlowUpModel& model) {
    const auto& c = model.config();
    require_dominant_on_window(model);
    InvariantReport r;
    r.name = c.name;
    r.volume_poly = volume_polynomial(model);
    r.integrand_poly = xi_integrand(model);
    r.xi = definite_integral(r.integrand_poly, 0, c.epsilon);
    if (r.xi.is_integer()) r.xi_factored = factorize(r.xi.to_integer());
    r.L_to_n = r.volume_poly(0);
    r.H_X_to_n = hyperplane_degree(model);
    r.A = log_discrepancy(c);
    if (r.L_to_n.is_zero()) throw PreconditionError("S-invariant undefined: L^n = 0");
    r.S = definite_integral(r.volume_poly, 0, c.epsilon) / r.L_to_n;
    r.beta = r.L_to_n * (r.A - r.S);
    const RestrictedClass l = restrict_to_E(anticanonical_pullback(c), c.E_class);
    const RestrictedClass e = restrict_to_E(DivisorClass::exceptional(), c.E_class);
    r.pencil_Y = {l.y, -e.y};
    r.pencil_Z = {l.z, -e.z};
    const WeightPencil pencil = restricted_pencil(model);
    r.per_root_table = pencil_table(model.root_system(), model.marking(), pencil);
    r.rho_product = rho_product(model.root_system(), model.marking());
    r.numerator_product = pencil_numerator_product(model.root_system(), model.marking(), pencil);
    r.verdict = r.xi.sign() > 0 ? Verdict::positive : r.xi.sign() < 0 ? Verdict::negative : Verdict::zero;
    return r;
}

}  // namespace kstab
