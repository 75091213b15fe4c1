#pragma once

#include "kstab/k_stability.hpp"

#include <json.hpp>

#include <string>

namespace kstab::cli {

struct RenderOptions {
    bool table = true;
    bool factor = true;
    bool color = false;
};

std::string render_text(const TwoOrbitConfig& config, const InvariantReport& report, const RenderOptions& options);

/// Keys: name, xi {value, factored}, beta, S, A, L_to_n, volume_poly,
/// integrand_poly, table, verdict. Rationals are strings.
nlohmann::json report_to_json(const InvariantReport& report);

std::string render_roots(const RootSystem& rs);

/// "v" or "v  (= p1^e1 · …)" for integers when factor is set.
std::string render_value(const BigRational& v, bool factor);

}  // namespace kstab::cli
