// kstab: exact xi/beta invariants, root systems and flag-variety degrees.
//
// Exit codes: 0 success (xi > 0), 1 success with xi <= 0, 2 input error,
// 3 mathematical precondition failure.

#include "cli/config.hpp"
#include "cli/render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <unistd.h>

namespace {

using namespace kstab;

constexpr int kInputError = 2;
constexpr int kPreconditionError = 3;

struct ReportFlags {
    bool json = false;
    bool table = false;
    bool factor = false;
};

bool use_color() { return std::getenv("KSTAB_NO_COLOR") == nullptr && ::isatty(STDOUT_FILENO) != 0; }

int emit_report(const TwoOrbitConfig& config, const ReportFlags& flags) {
    const BlowUpModel model(config);
    const InvariantReport r = report(model);
    if (flags.json) {
        std::cout << cli::report_to_json(r).dump(2) << '\n';
    } else {
        std::cout << cli::render_text(config, r, {flags.table, flags.factor, use_color()});
    }
    return r.verdict == Verdict::positive ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact K-stability invariants for two-orbit blow-ups", "kstab"};
    app.require_subcommand(1);

    auto* preset = app.add_subcommand("preset", "Built-in configurations");
    preset->require_subcommand(1);
    preset->add_subcommand("list", "List preset names");
    auto* preset_run = preset->add_subcommand("run", "Compute the report for a preset");
    std::string preset_name;
    ReportFlags preset_flags;
    preset_run->add_option("name", preset_name, "Preset name")->required();
    preset_run->add_flag("--json", preset_flags.json, "Machine-readable output");
    preset_run->add_flag("--table", preset_flags.table, "Per-root table (always shown for presets)");
    preset_run->add_flag("--factor", preset_flags.factor, "Factor integer outputs (always on for presets)");
    auto* preset_show = preset->add_subcommand("show", "Print a preset as a configuration file");
    preset_show->add_option("name", preset_name, "Preset name")->required();

    auto* xi_cmd = app.add_subcommand("xi", "Compute the report for a JSON configuration file");
    std::string config_path;
    ReportFlags xi_flags;
    xi_cmd->add_option("--config", config_path, "Configuration file")->required();
    xi_cmd->add_flag("--json", xi_flags.json, "Machine-readable output");
    xi_cmd->add_flag("--table", xi_flags.table, "Include the per-root table");
    xi_cmd->add_flag("--factor", xi_flags.factor, "Factor integer outputs");

    auto* roots_cmd = app.add_subcommand("roots", "Positive roots, fundamental weights and rho");
    std::string roots_diagram;
    roots_cmd->add_option("diagram", roots_diagram, "Diagram such as F4 or A1xG2")->required();

    auto* degree_cmd = app.add_subcommand("degree", "Degree of a line bundle on G/P");
    std::string degree_diagram, marked, weight;
    degree_cmd->add_option("diagram", degree_diagram, "Diagram such as F4 or A1xG2")->required();
    degree_cmd->add_option("--marked", marked, "Marked nodes, e.g. 1,3")->required();
    degree_cmd->add_option("--weight", weight, "Fundamental-weight coefficients, e.g. 1,0,1,0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    if (preset->parsed()) {
        if (preset->got_subcommand("list")) {
            for (const auto& p : cli::presets()) std::cout << p.name << "  " << p.description << '\n';
            return 0;
        }
        const cli::Preset* p = cli::find_preset(preset_name);
        if (p == nullptr) {
            std::cerr << "kstab: unknown preset '" << preset_name << "' (try 'kstab preset list')\n";
            return kInputError;
        }
        if (preset_show->parsed()) {
            std::cout << cli::config_to_json(p->config).dump(2) << '\n';
            return 0;
        }
        return emit_report(p->config, {preset_flags.json, true, true});
    }
    if (xi_cmd->parsed()) return emit_report(cli::load_config(config_path), xi_flags);
    if (roots_cmd->parsed()) {
        std::cout << cli::render_roots(RootSystem::build(DynkinDiagram::parse(roots_diagram)));
        return 0;
    }
    if (degree_cmd->parsed()) {
        const RootSystem rs = RootSystem::build(DynkinDiagram::parse(degree_diagram));
        const Marking marking(cli::parse_index_list(marked), rs.rank());
        const auto coeffs = cli::parse_rational_list(weight);
        if (static_cast<int>(coeffs.size()) != rs.rank()) {
            throw InputError("--weight needs " + std::to_string(rs.rank()) + " coefficients");
        }
        Weight w = Weight::zero(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) w.coeffs(i) = coeffs[static_cast<std::size_t>(i)];
        std::cout << cli::render_value(degree(rs, marking, w), true) << '\n';
        return 0;
    }
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kstab::InputError& e) {
        std::cerr << "kstab: " << e.what() << '\n';
        return kInputError;
    } catch (const kstab::PreconditionError& e) {
        std::cerr << "kstab: " << e.what() << '\n';
        return kPreconditionError;
    } catch (const kstab::DivisionByZero& e) {
        std::cerr << "kstab: " << e.what() << '\n';
        return kPreconditionError;
    } catch (const std::exception& e) {
        std::cerr << "kstab: internal error: " << e.what() << '\n';
        return kInputError;
    }
}
