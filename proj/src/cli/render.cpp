#include "cli/render.hpp"

#include <algorithm>
#include <sstream>

namespace kstab::cli {

namespace {

std::string pad(std::string s, std::size_t width) {
    // Width counts code points so "·" and friends do not skew the columns.
    std::size_t shown = 0;
    for (unsigned char ch : s) shown += (ch & 0xC0U) != 0x80U;
    if (shown < width) s.append(width - shown, ' ');
    return s;
}

std::string exceptional_class_text(const ExceptionalClass& ec) {
    auto term = [](int k, const char* what, bool leading) {
        std::string out = k < 0 ? (leading ? "-" : " - ") : (leading ? "" : " + ");
        const int mag = k < 0 ? -k : k;
        if (mag != 1) out += std::to_string(mag) + "*";
        return out + what;
    };
    if (ec.a_Y == 0) return term(ec.a_X, "phi^*H_X", true);
    return term(ec.a_Y, "pi^*H_Y", true) + term(ec.a_X, "phi^*H_X", false);
}

std::string coefficient_text(const LinearForm& f) {
    const std::string s = f.to_string();
    return s.find_first_of("+-", 1) != std::string::npos && s.front() != '(' ? "(" + s + ")" : s;
}

}  // namespace

std::string render_value(const BigRational& v, bool factor) {
    std::string out = v.to_string();
    if (factor && v.is_integer() && !v.is_zero()) out += "  (= " + factorize(v.to_integer()).to_string() + ")";
    return out;
}

std::string render_text(const TwoOrbitConfig& c, const InvariantReport& r, const RenderOptions& opt) {
    std::ostringstream os;
    constexpr std::size_t kLabel = 16;
    auto line = [&](const std::string& label, const std::string& value) { os << pad(label, kLabel) << value << '\n'; };

    line("configuration", r.name);
    line("diagram", c.diagram.to_string());
    line("omega_Y", c.omega_Y.to_string());
    line("omega_Z", c.omega_Z.to_string());
    line("dim X", std::to_string(c.dim_X));
    line("codim Z", std::to_string(c.codim));
    line("epsilon(Z)", c.epsilon.to_string());
    line("-K_X", std::to_string(c.minus_KX_multiple) + "*H_X");
    line("E", exceptional_class_text(c.E_class));
    line("pencil on E", coefficient_text(r.pencil_Y) + "*omega_Y + " + coefficient_text(r.pencil_Z) + "*omega_Z");

    if (opt.table) {
        os << '\n';
        std::size_t w_root = 4, w_num = 8;
        for (const auto& row : r.per_root_table) {
            w_root = std::max(w_root, row.root.to_string().size());
            w_num = std::max(w_num, row.numerator.to_string().size());
        }
        os << pad("root", w_root) << " | " << pad("(w(x),-)", w_num) << " | (rho,-)\n";
        os << std::string(w_root, '-') << "-+-" << std::string(w_num, '-') << "-+-" << std::string(7, '-') << '\n';
        for (const auto& row : r.per_root_table) {
            os << pad(row.root.to_string(), w_root) << " | " << pad(row.numerator.to_string(), w_num) << " | "
               << row.denominator.to_string() << '\n';
        }
        os << '\n';
        line("prod (rho,g)", render_value(r.rho_product, opt.factor));
        line("prod (w(x),g)", r.numerator_product.to_string());
    }

    os << '\n';
    line("volume v(x)", r.volume_poly.to_string());
    line("integrand", r.integrand_poly.to_string());
    line("H_X^n", render_value(r.H_X_to_n, opt.factor));
    line("L^n", render_value(r.L_to_n, opt.factor));
    line("A(E)", r.A.to_string());
    line("S(E)", r.S.to_string());
    line("beta(E)", render_value(r.beta, opt.factor));
    line("xi(Z)", render_value(r.xi, opt.factor));

    std::string verdict = to_string(r.verdict);
    if (opt.color) verdict = (r.verdict == Verdict::positive ? "\x1b[32m" : "\x1b[31m") + verdict + "\x1b[0m";
    if (r.verdict == Verdict::positive) {
        verdict += " (K-polystable, given that E is the unique G-invariant prime divisor over X and Aut^0(X) is reductive)";
    }
    line("verdict", verdict);
    return os.str();
}

nlohmann::json report_to_json(const InvariantReport& r) {
    using nlohmann::json;
    json table = json::array();
    for (const auto& row : r.per_root_table) {
        table.push_back({{"root", row.root.to_string()},
                         {"numerator", row.numerator.to_string()},
                         {"denominator", row.denominator.to_string()}});
    }
    return {
        {"name", r.name},
        {"xi", {{"value", r.xi.to_string()}, {"factored", r.xi_factored ? json(r.xi_factored->to_string()) : json()}}},
        {"beta", r.beta.to_string()},
        {"S", r.S.to_string()},
        {"A", r.A.to_string()},
        {"L_to_n", r.L_to_n.to_string()},
        {"volume_poly", r.volume_poly.to_string()},
        {"integrand_poly", r.integrand_poly.to_string()},
        {"table", table},
        {"verdict", to_string(r.verdict)},
    };
}

std::string render_roots(const RootSystem& rs) {
    std::ostringstream os;
    const auto& roots = rs.positive_roots();
    os << rs.diagram().to_string() << ": rank " << rs.rank() << ", " << roots.size() << " positive roots, dim g = "
       << dim_adjoint(rs) << '\n';
    os << "positive roots (simple-root coordinates, by height):\n";
    for (const auto& g : roots) os << "  " << pad(std::to_string(g.height()), 4) << g.to_string() << '\n';
    os << "fundamental weights (simple-root coordinates):\n";
    const auto& m = rs.fundamental_weights();
    for (int i = 0; i < rs.rank(); ++i) {
        os << "  omega_" << i + 1 << " = " << Weight{m.row(i).transpose()}.to_string() << '\n';
    }
    os << "symmetrizers d = " << Weight{rs.symmetrizers()}.to_string() << '\n';
    os << "rho = " << Weight{rs.to_simple_basis(rho(rs))}.to_string() << '\n';
    return os.str();
}

}  // namespace kstab::cli
