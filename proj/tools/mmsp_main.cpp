#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmsp/presets.hpp"
#include "mmsp/report.hpp"

namespace {

struct CommonOpts {
    double v0 = 1.0, a = 1.0, b = 0.0, alpha = 1.0, mu = 1.0, hbar = 1.0;
    double c0 = mmsp::kDefaultC0;
    std::vector<int> l_list;
    int n_max = 0;
    std::string scheme = "both";
    bool oracle = false;
    int grid_points = 4000;
    double r_max = 0.0;
    std::string format = "csv";
    std::string out_path;
    std::string preset, preset_file;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--v0", o.v0, "potential depth V0");
    cmd->add_option("--a", o.a, "shape constant A");
    cmd->add_option("--b", o.b, "shape constant B");
    cmd->add_option("--alpha", o.alpha, "screening parameter");
    cmd->add_option("--mu", o.mu, "reduced mass (default 1)");
    cmd->add_option("--hbar", o.hbar, "reduced Planck constant (default 1)");
    cmd->add_option("--c0", o.c0, "Pekeris offset C0 (default 1/12)");
    cmd->add_option("--l", o.l_list, "orbital quantum number (repeatable)");
    cmd->add_option("--n-max", o.n_max, "largest radial quantum number");
    cmd->add_option("--scheme", o.scheme, "pekeris|greene-aldrich|both")
        ->check(CLI::IsMember({"pekeris", "greene-aldrich", "both"}));
    cmd->add_flag("--oracle", o.oracle, "enable the finite-difference oracle");
    cmd->add_option("--grid-points", o.grid_points, "oracle grid points");
    cmd->add_option("--r-max", o.r_max, "oracle outer cutoff");
    cmd->add_option("--format", o.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_option("--preset", o.preset, "preset name");
    cmd->add_option("--preset-file", o.preset_file, "preset file path");
}

int build_config(const CLI::App* cmd, const CommonOpts& o, mmsp::RunConfig& cfg) {
    if (!o.preset.empty() || !o.preset_file.empty()) {
        if (o.preset.empty() || o.preset_file.empty()) {
            std::cerr << "error: --preset and --preset-file must be used together\n";
            return mmsp::kExitUsage;
        }
        try {
            const mmsp::Preset pr = mmsp::find_preset(o.preset_file, o.preset);
            cfg.params = pr.params;
            cfg.ctx = pr.ctx;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return mmsp::kExitUsage;
        }
    }
    // Explicit flags override preset values.
    if (cmd->count("--v0")) cfg.params.v0 = o.v0;
    if (cmd->count("--a")) cfg.params.a_coef = o.a;
    if (cmd->count("--b")) cfg.params.b_coef = o.b;
    if (cmd->count("--alpha")) cfg.params.alpha = o.alpha;
    if (cmd->count("--mu")) cfg.ctx.mu = o.mu;
    if (cmd->count("--hbar")) cfg.ctx.hbar = o.hbar;

    cfg.l_list = o.l_list.empty() ? std::vector<int>{0} : o.l_list;
    cfg.n_limit = o.n_max;
    cfg.schemes.clear();
    if (o.scheme == "pekeris" || o.scheme == "both")
        cfg.schemes.push_back(mmsp::ApproximationScheme::pekeris(o.c0));
    if (o.scheme == "greene-aldrich" || o.scheme == "both")
        cfg.schemes.push_back(mmsp::ApproximationScheme::greene_aldrich());
    cfg.oracle_enabled = o.oracle;
    cfg.grid_points = o.grid_points;
    cfg.r_max = o.r_max;
    cfg.format = o.format == "json" ? mmsp::OutputFormat::Json : mmsp::OutputFormat::Csv;
    cfg.out_path = o.out_path;
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mmsp::kExitUsage;
    }
    return mmsp::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-state spectra for the Modified Mobius Square potential"};
    app.require_subcommand(1);

    CommonOpts so, co, wo;
    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form energy table");
    add_common_flags(spectrum, so);
    CLI::App* compare =
        app.add_subcommand("compare", "closed form vs finite-difference oracle");
    add_common_flags(compare, co);
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep (long format)");
    add_common_flags(sweep, wo);
    std::string axis;
    std::vector<double> range;
    int steps = 0;
    sweep->add_option("--axis", axis, "v0|alpha|a|b")
        ->check(CLI::IsMember({"v0", "alpha", "a", "b"}));
    sweep->add_option("--range", range, "sweep range: LO HI")->expected(2);
    sweep->add_option("--steps", steps, "number of sweep points (>= 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "\n";
        if (e.get_exit_code() != 0) std::cerr << "error: " << e.what() << "\n";
        return e.get_exit_code() == 0 ? 0 : mmsp::kExitUsage;
    }

    mmsp::RunConfig cfg;
    try {
        if (spectrum->parsed()) {
            if (int rc = build_config(spectrum, so, cfg)) return rc;
            return mmsp::cmd_spectrum(cfg, std::cerr);
        }
        if (compare->parsed()) {
            if (int rc = build_config(compare, co, cfg)) return rc;
            cfg.oracle_enabled = true;  // compare implies the oracle
            return mmsp::cmd_compare(cfg, std::cerr);
        }
        if (int rc = build_config(sweep, wo, cfg)) return rc;
        if (axis.empty() || range.size() != 2 || !sweep->count("--steps")) {
            std::cerr << "error: sweep requires --axis, --range LO HI and --steps\n";
            return mmsp::kExitUsage;
        }
        mmsp::SweepSpec spec;
        spec.axis = axis == "v0"      ? mmsp::SweepSpec::Axis::V0
                    : axis == "alpha" ? mmsp::SweepSpec::Axis::Alpha
                    : axis == "a"     ? mmsp::SweepSpec::Axis::A
                                      : mmsp::SweepSpec::Axis::B;
        spec.lo = range[0];
        spec.hi = range[1];
        spec.steps = steps;
        return mmsp::cmd_sweep(cfg, spec, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
