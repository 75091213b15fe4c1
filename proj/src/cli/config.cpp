#include "cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace kstab::cli {

namespace {

using nlohmann::json;

BigRational rational_field(const json& v, const std::string& where) {
    if (v.is_string()) return BigRational::parse(v.get<std::string>());
    if (v.is_number_integer()) return BigRational(v.get<long>());
    throw InputError(where + ": expected a rational string such as \"3/2\"");
}

int int_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw InputError(std::string("missing key '") + key + "'");
    const json& v = doc.at(key);
    if (!v.is_number_integer()) throw InputError(std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

Weight weight_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw InputError(std::string("missing key '") + key + "'");
    const json& v = doc.at(key);
    if (!v.is_array() || v.empty()) throw InputError(std::string("'") + key + "' must be a nonempty array");
    Weight w = Weight::zero(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        w.coeffs(static_cast<Eigen::Index>(i)) = rational_field(v[i], key);
    }
    return w;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [k, _] : obj.items()) {
        if (!allowed.contains(k)) throw InputError("unknown key '" + k + "' in " + where);
    }
}

json weight_json(const Weight& w) {
    json arr = json::array();
    for (const auto& c : w.coeffs) arr.push_back(c.to_string());
    return arr;
}

TwoOrbitConfig make_config(std::string name, const char* diagram, std::vector<BigRational> scales, Weight y, Weight z,
                           int n, int r, int eps, int k, ExceptionalClass ec) {
    TwoOrbitConfig c;
    c.name = std::move(name);
    c.diagram = DynkinDiagram::parse(diagram);
    c.symmetrizer_scales = std::move(scales);
    c.omega_Y = std::move(y);
    c.omega_Z = std::move(z);
    c.dim_X = n;
    c.codim = r;
    c.epsilon = eps;
    c.minus_KX_multiple = k;
    c.E_class = ec;
    return c;
}

}  // namespace

TwoOrbitConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("configuration must be a JSON object");
    reject_unknown(doc,
                   {"name", "diagram", "omega_Y", "omega_Z", "dim_X", "codim", "epsilon", "minus_KX_multiple",
                    "E_class", "symmetrizer_scales"},
                   "configuration");
    TwoOrbitConfig c;
    if (!doc.contains("name") || !doc.at("name").is_string()) throw InputError("'name' must be a string");
    c.name = doc.at("name").get<std::string>();
    if (!doc.contains("diagram") || !doc.at("diagram").is_string()) throw InputError("'diagram' must be a string");
    c.diagram = DynkinDiagram::parse(doc.at("diagram").get<std::string>());
    c.omega_Y = weight_field(doc, "omega_Y");
    c.omega_Z = weight_field(doc, "omega_Z");
    c.dim_X = int_field(doc, "dim_X");
    c.codim = int_field(doc, "codim");
    if (!doc.contains("epsilon")) throw InputError("missing key 'epsilon'");
    c.epsilon = rational_field(doc.at("epsilon"), "epsilon");
    c.minus_KX_multiple = int_field(doc, "minus_KX_multiple");
    if (!doc.contains("E_class") || !doc.at("E_class").is_object()) throw InputError("'E_class' must be an object");
    const json& ec = doc.at("E_class");
    reject_unknown(ec, {"a_Y", "a_X"}, "E_class");
    c.E_class = {int_field(ec, "a_Y"), int_field(ec, "a_X")};
    if (doc.contains("symmetrizer_scales")) {
        const json& s = doc.at("symmetrizer_scales");
        if (!s.is_array()) throw InputError("'symmetrizer_scales' must be an array");
        for (const auto& v : s) c.symmetrizer_scales.push_back(rational_field(v, "symmetrizer_scales"));
        if (c.symmetrizer_scales.size() != c.diagram.components().size()) {
            throw InputError("'symmetrizer_scales' needs one entry per diagram component");
        }
    }
    const int rank = c.diagram.rank();
    if (c.omega_Y.coeffs.size() != rank || c.omega_Z.coeffs.size() != rank) {
        throw InputError("omega_Y and omega_Z need " + std::to_string(rank) + " coefficients for " +
                         c.diagram.to_string());
    }
    return c;
}

json config_to_json(const TwoOrbitConfig& c) {
    json doc = {
        {"name", c.name},
        {"diagram", c.diagram.to_string()},
        {"omega_Y", weight_json(c.omega_Y)},
        {"omega_Z", weight_json(c.omega_Z)},
        {"dim_X", c.dim_X},
        {"codim", c.codim},
        {"epsilon", c.epsilon.to_string()},
        {"minus_KX_multiple", c.minus_KX_multiple},
        {"E_class", {{"a_Y", c.E_class.a_Y}, {"a_X", c.E_class.a_X}}},
    };
    if (!c.symmetrizer_scales.empty()) {
        json scales = json::array();
        for (const auto& s : c.symmetrizer_scales) scales.push_back(s.to_string());
        doc["symmetrizer_scales"] = scales;
    }
    return doc;
}

TwoOrbitConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open configuration file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return config_from_json(doc);
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = [] {
        std::vector<Preset> out;
        out.push_back({"pas-f4", "Pasquier's 23-dimensional two-orbit variety with G = F4",
                       make_config("pas-f4", "F4", {BigRational(1, 2)}, Weight::fundamental(4, 1),
                                   Weight::fundamental(4, 3), 23, 3, 8, 8, {-1, 1})});
        // A1 node alpha_0 is global node 1, G2's alpha_1, alpha_2 are nodes 2, 3.
        out.push_back({"pas-a1g2", "Pasquier's 8-dimensional two-orbit variety with G = A1 x G2",
                       make_config("pas-a1g2", "A1xG2", {1, 1}, Weight::fundamental(3, 3),
                                   Weight::fundamental(3, 1) + Weight::fundamental(3, 2), 8, 2, 3, 6, {-1, 2})});
        return out;
    }();
    return all;
}

const Preset* find_preset(std::string_view name) {
    const auto& all = presets();
    const auto it = std::find_if(all.begin(), all.end(), [&](const Preset& p) { return p.name == name; });
    return it == all.end() ? nullptr : &*it;
}

std::vector<BigRational> parse_rational_list(std::string_view text) {
    std::vector<BigRational> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(BigRational::parse(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<int> parse_index_list(std::string_view text) {
    std::vector<int> out;
    for (const auto& v : parse_rational_list(text)) {
        if (!v.is_integer() || !v.numerator().fits_sint_p()) throw InputError("expected integer node indices");
        out.push_back(static_cast<int>(v.numerator().get_si()));
    }
    return out;
}

}  // namespace kstab::cli
