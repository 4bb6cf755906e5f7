#ifndef QENS_CLI_CONFIG_HPP
#define QENS_CLI_CONFIG_HPP

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace qens::cli {

class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ": line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ParameterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat `key = value` file. Values are bare tokens (no whitespace or '=')
/// or double-quoted strings; '#' starts a comment outside quotes.
struct ConfigFile {
    std::map<std::string, std::string> values;
    std::map<std::string, int> lines;  // key -> defining line
};

namespace detail {
inline std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}
}  // namespace detail

inline ConfigFile parse_config(std::istream& in, const std::string& source = "config") {
    static const std::regex blank(R"(^\s*$)");
    static const std::regex entry(R"(^\s*([A-Za-z_][A-Za-z0-9_.\-]*)\s*=\s*(\"[^\"]*\"|[^\s=\"]+)\s*$)");
    ConfigFile cfg;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string line = detail::strip_comment(raw);
        if (std::regex_match(line, blank)) continue;
        std::smatch m;
        if (!std::regex_match(line, m, entry))
            throw ConfigParseError(source, line_no, "malformed line, expected `key = value`: " + raw);
        std::string value = m[2].str();
        if (value.size() >= 2 && value.front() == '"') value = value.substr(1, value.size() - 2);
        const std::string key = m[1].str();
        if (cfg.lines.count(key))
            throw ConfigParseError(source, line_no,
                                   "duplicate key '" + key + "' (first set on line " + std::to_string(cfg.lines[key]) + ")");
        cfg.values[key] = value;
        cfg.lines[key] = line_no;
    }
    return cfg;
}

inline ConfigFile load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError(path, 0, "cannot open config file");
    return parse_config(in, path);
}

// ---------------------------------------------------------------------------
// Typed conversions shared by config values and flags

inline std::optional<long long> parse_integer(const std::string& s) {
    long long v = 0;
    const auto* end = s.data() + s.size();
    const auto r = std::from_chars(s.data(), end, v);
    if (r.ec != std::errc() || r.ptr != end || s.empty()) return std::nullopt;
    return v;
}

inline std::optional<std::uint64_t> parse_unsigned(const std::string& s) {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    const auto r = std::from_chars(s.data(), end, v);
    if (r.ec != std::errc() || r.ptr != end || s.empty()) return std::nullopt;
    return v;
}

inline std::optional<double> parse_decimal(const std::string& s) {
    double v = 0.0;
    const auto* begin = s.data() + (!s.empty() && s.front() == '+' ? 1 : 0);
    const auto* end = s.data() + s.size();
    const auto r = std::from_chars(begin, end, v);
    if (r.ec != std::errc() || r.ptr != end || begin == end) return std::nullopt;
    return v;
}

inline std::optional<bool> parse_boolean(const std::string& s) {
    if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
    if (s == "false" || s == "no" || s == "off" || s == "0") return false;
    return std::nullopt;
}

inline std::optional<std::vector<double>> parse_decimal_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto v = parse_decimal(item);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace qens::cli

#endif
