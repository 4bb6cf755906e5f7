#ifndef QENS_CLI_APP_HPP
#define QENS_CLI_APP_HPP

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qens_cli/commands.hpp"
#include "qens_cli/run.hpp"

namespace qens::cli {

/// Parses the command line (without the program name), merges it over an
/// optional config file and executes the run.
inline int main_entry(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum-ensemble numerical experiments", "qens-cli"};
    app.allow_extras();
    app.require_subcommand(0, 1);

    std::string out_dir, seed_text, config_path;
    bool svg = false;
    app.add_option("--out", out_dir, "output directory (default: $QENS_OUT_DIR, then .)");
    app.add_option("--seed", seed_text, "random seed (default 0)");
    app.add_flag("--svg", svg, "also write SVG plots");
    app.add_option("--config", config_path, "flat key = value configuration file");

    std::map<std::string, std::map<std::string, std::string>> given;
    std::map<std::string, CLI::App*> subs;
    for (const auto& cmd : commands()) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->fallthrough();
        for (const auto& p : cmd.params) {
            std::string help = p.help;
            help += p.default_value.empty() ? " (required)" : " (default " + p.default_value + ")";
            sub->add_option("--" + p.name, given[cmd.name][p.name], help);
        }
        subs[cmd.name] = sub;
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        return report(err, bad_parameter, "bad_parameter", e.what());
    }
    for (const auto& [name, sub] : subs) {
        if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
            out << sub->help();
            return ok;
        }
    }

    RunConfig cfg;
    if (!config_path.empty()) {
        try {
            cfg = load_config(config_path);
        } catch (const ConfigParseError& e) {
            return report(err, config_error, "config_error", e.what());
        }
    }

    const CLI::App* chosen = nullptr;
    for (const auto* s : app.get_subcommands()) chosen = s;
    const auto extras = app.remaining();
    if (chosen) {
        cfg.subcommand = chosen->get_name();
        if (!extras.empty()) return report(err, bad_parameter, "bad_parameter", "unexpected argument '" + extras.front() + "'");
        for (const auto* opt : chosen->get_options()) {
            const std::string name = opt->get_name(false, true);
            if (opt->count() == 0 || name.rfind("--", 0) != 0) continue;
            const std::string key = name.substr(2);
            if (auto it = given[cfg.subcommand].find(key); it != given[cfg.subcommand].end())
                cfg.parameters[key] = it->second;
        }
    } else if (!extras.empty()) {
        return report(err, unknown_subcommand, "unknown_subcommand", "unknown subcommand '" + extras.front() + "'");
    }
    if (cfg.subcommand.empty())
        return report(err, unknown_subcommand, "unknown_subcommand", "no subcommand given");

    if (app.get_option("--out")->count() > 0) cfg.output_dir = out_dir;
    if (app.get_option("--seed")->count() > 0) {
        const auto s = parse_unsigned(seed_text);
        if (!s) return report(err, bad_parameter, "bad_parameter", "--seed must be a non-negative integer");
        cfg.seed = *s;
    }
    if (svg) cfg.emit_svg = true;
    return run(cfg, out, err);
}

}  // namespace qens::cli

#endif
