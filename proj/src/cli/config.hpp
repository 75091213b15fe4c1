#pragma once

// JSON configuration files, built-in presets and list parsing for the kstab tool.

#include "kstab/k_stability.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kstab::cli {

/// Validates keys and types; throws InputError on any problem.
TwoOrbitConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const TwoOrbitConfig& config);
TwoOrbitConfig load_config(const std::filesystem::path& path);

struct Preset {
    std::string name;
    std::string description;
    TwoOrbitConfig config;
};

const std::vector<Preset>& presets();
/// nullptr when unknown.
const Preset* find_preset(std::string_view name);

/// "1,0,1/2" -> rationals
std::vector<BigRational> parse_rational_list(std::string_view text);
/// "1,3" -> integers
std::vector<int> parse_index_list(std::string_view text);

}  // namespace kstab::cli
