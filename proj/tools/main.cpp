#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "steinfix/cli/commands.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string seed;
    std::string out;
    std::map<std::string, std::string> overrides;
};

void add_flag_option(CLI::App* cmd, CommonOpts& opts, const std::string& key,
                     const std::string& help) {
    cmd->add_option_function<std::string>(
        "--" + key, [&opts, key](const std::string& v) { opts.overrides[key] = v; }, help);
}

int run(const std::string& command, const CommonOpts& opts) {
    std::string text;
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) {
            std::cerr << "error: cannot open config file " << opts.config_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    std::map<std::string, std::string> overrides = opts.overrides;
    if (!opts.seed.empty()) overrides["seed"] = opts.seed;
    if (!opts.out.empty()) overrides["out"] = opts.out;

    try {
        steinfix::cli::RunConfig cfg = steinfix::cli::parse_config(text, command, overrides);
        std::ostringstream report;
        int code = steinfix::cli::run_command(cfg, report);
        std::cout << report.str();
        if (!cfg.out_path.empty()) {
            std::ofstream out(cfg.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << cfg.out_path << "\n";
                return 1;
            }
            out << report.str();
        }
        return code;
    } catch (const steinfix::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const steinfix::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "steinfix: finite Steinberg subgroups, invariant-subspace angles, and "
        "fat-triangle energy minimization on model Hadamard manifolds"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd;
        CommonOpts opts;
        std::vector<std::string> keys;
    };
    std::vector<std::unique_ptr<Sub>> subs;

    auto add_command = [&](const std::string& name, const std::string& help,
                           std::vector<std::string> keys) {
        auto sub = std::make_unique<Sub>();
        sub->cmd = app.add_subcommand(name, help);
        sub->keys = std::move(keys);
        sub->cmd->add_option("--config", sub->opts.config_path, "key = value config file");
        sub->cmd->add_option("--seed", sub->opts.seed, "random seed (default 0)");
        sub->cmd->add_option("--out", sub->opts.out, "also write the report to this path");
        for (const auto& key : sub->keys) add_flag_option(sub->cmd, sub->opts, key, "");
        subs.push_back(std::move(sub));
    };

    add_command("angle", "angle between a pair of Steinberg subgroups",
                {"p", "n", "k", "D", "pair", "cap"});
    add_command("heisenberg", "irreducible representations and angles at order p^3", {"p"});
    add_command("enumerate", "enumerate a pairwise subgroup or generator family",
                {"p", "n", "k", "D", "pair", "subgroup", "cap"});
    add_command("relations", "exhaustive check of the defining relations",
                {"p", "n", "k", "D", "maxdeg"});
    add_command("solve", "fat-triangle energy minimization on a scenario",
                {"scenario", "model", "dim", "curvature", "tol", "max-iter", "p",
                 "mirror-angle"});
    add_command("fh-check", "barycenter inequality over random triangles", {"dim", "trials"});
    add_command("flatness", "midpoint-defect decay under metric rescaling",
                {"scales", "side", "curvature"});
    add_command("verify", "property sweeps: relations | geometry | monitors | all",
                {"suite"});

    CLI11_PARSE(app, argc, argv);

    for (const auto& sub : subs)
        if (sub->cmd->parsed()) return run(sub->cmd->get_name(), sub->opts);
    return 2;
}
