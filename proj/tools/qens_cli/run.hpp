#ifndef QENS_CLI_RUN_HPP
#define QENS_CLI_RUN_HPP

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ios>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qens/error.hpp"
#include "qens_cli/config.hpp"

namespace qens::cli {

enum ExitCode : int {
    ok = 0,
    unknown_subcommand = 2,
    bad_parameter = 3,
    unwritable_output = 4,
    computation_error = 5,
    config_error = 6,
};

enum class ParamType { integer, decimal, boolean, string, decimal_list };

struct ParamSpec {
    std::string name;
    ParamType type = ParamType::decimal;
    std::string default_value;  // empty: required
    std::string help;
};

struct RunConfig {
    std::string subcommand;
    std::map<std::string, std::string> parameters;
    std::string output_dir;  // empty: QENS_OUT_DIR, then the working directory
    std::uint64_t seed = 0;
    bool emit_svg = false;
};

/// Keys accepted in a config file besides the subcommand parameters.
inline const std::set<std::string>& global_keys() {
    static const std::set<std::string> keys{"out", "seed", "svg", "subcommand"};
    return keys;
}

/// Typed read access to the parameters of one run, checked against a schema.
class Params {
public:
    Params(const std::vector<ParamSpec>& spec, const std::map<std::string, std::string>& given) {
        for (const auto& p : spec) {
            auto it = given.find(p.name);
            std::string value = it != given.end() ? it->second : p.default_value;
            if (value.empty()) throw ParameterError("missing required parameter '" + p.name + "'");
            bool good = true;
            switch (p.type) {
                case ParamType::integer: good = parse_integer(value).has_value(); break;
                case ParamType::decimal: good = parse_decimal(value).has_value(); break;
                case ParamType::boolean: good = parse_boolean(value).has_value(); break;
                case ParamType::decimal_list: good = parse_decimal_list(value).has_value(); break;
                case ParamType::string: break;
            }
            if (!good) throw ParameterError("parameter '" + p.name + "' has an ill-typed value '" + value + "'");
            values_[p.name] = value;
        }
    }
    double num(const std::string& k) const { return *parse_decimal(at(k)); }
    long long integer(const std::string& k) const { return *parse_integer(at(k)); }
    bool flag(const std::string& k) const { return *parse_boolean(at(k)); }
    std::vector<double> list(const std::string& k) const { return *parse_decimal_list(at(k)); }
    const std::string& str(const std::string& k) const { return at(k); }

private:
    const std::string& at(const std::string& k) const {
        auto it = values_.find(k);
        if (it == values_.end()) throw std::logic_error("undeclared parameter '" + k + "'");
        return it->second;
    }
    std::map<std::string, std::string> values_;
};

struct RunContext {
    const Params& params;
    std::filesystem::path out_dir;
    std::uint64_t seed;
    bool svg;
    std::ostream& log;   // summary line
    std::ostream& warn;  // non-fatal diagnostics
    std::filesystem::path file(const std::string& name) const { return out_dir / name; }
};

struct Command {
    std::string name;
    std::string help;
    std::vector<ParamSpec> params;
    std::function<void(const RunContext&)> action;
};

const std::vector<Command>& commands();  // defined in commands.hpp

inline const Command* find_command(const std::string& name) {
    for (const auto& c : commands())
        if (c.name == name) return &c;
    return nullptr;
}

/// Reads a config file into a RunConfig. Unknown keys are reported on `warn`
/// once the subcommand is known (see run).
inline RunConfig load_config(const std::string& path) {
    const ConfigFile file = load_config_file(path);
    RunConfig cfg;
    for (const auto& [k, v] : file.values) {
        if (k == "out") {
            cfg.output_dir = v;
        } else if (k == "seed") {
            const auto s = parse_unsigned(v);
            if (!s) throw ConfigParseError(path, file.lines.at(k), "seed must be a non-negative integer");
            cfg.seed = *s;
        } else if (k == "svg") {
            const auto b = parse_boolean(v);
            if (!b) throw ConfigParseError(path, file.lines.at(k), "svg must be a boolean");
            cfg.emit_svg = *b;
        } else if (k == "subcommand") {
            cfg.subcommand = v;
        } else {
            cfg.parameters[k] = v;
        }
    }
    return cfg;
}

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += (c == '\n') ? ' ' : c;
    }
    return out + "\"";
}

inline int report(std::ostream& err, int code, const std::string& kind, const std::string& message) {
    err << "error: code=" << code << " kind=" << kind << " message=" << quote(message) << '\n';
    return code;
}

inline std::filesystem::path resolve_output_dir(const RunConfig& cfg) {
    if (!cfg.output_dir.empty()) return cfg.output_dir;
    if (const char* env = std::getenv("QENS_OUT_DIR"); env && *env) return env;
    return ".";
}

/// Executes one configured run. Returns the process exit status; failures
/// print one `error: code=N kind=K message="..."` line on `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Command* cmd = find_command(cfg.subcommand);
    if (!cmd) return report(err, unknown_subcommand, "unknown_subcommand", "unknown subcommand '" + cfg.subcommand + "'");

    std::set<std::string> known;
    for (const auto& p : cmd->params) known.insert(p.name);
    for (const auto& [k, v] : cfg.parameters)
        if (!known.count(k)) err << "warning: ignoring unknown key '" << k << "' for " << cmd->name << '\n';

    try {
        const Params params(cmd->params, cfg.parameters);
        const auto dir = resolve_output_dir(cfg);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec || !std::filesystem::is_directory(dir))
            return report(err, unwritable_output, "unwritable_output", "cannot create output directory '" + dir.string() + "'");
        const RunContext ctx{params, dir, cfg.seed, cfg.emit_svg, out, err};
        cmd->action(ctx);
        return ok;
    } catch (const ParameterError& e) {
        return report(err, bad_parameter, "bad_parameter", e.what());
    } catch (const std::ios_base::failure& e) {
        return report(err, unwritable_output, "unwritable_output", e.what());
    } catch (const qens::unsupported_regime& e) {
        return report(err, computation_error, "unsupported_regime", e.what());
    } catch (const qens::resolution_error& e) {
        return report(err, computation_error, "resolution_error", e.what());
    } catch (const qens::convergence_error& e) {
        return report(err, computation_error, "convergence_error", e.what());
    } catch (const std::domain_error& e) {
        return report(err, computation_error, "domain_error", e.what());
    } catch (const std::exception& e) {
        return report(err, computation_error, "internal_error", e.what());
    }
}

}  // namespace qens::cli

#endif
