#include "steinfix/cli/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace steinfix::cli {

namespace {

struct KeySpec {
    enum class Type { Int, Real, Str };
    std::string name;
    Type type = Type::Int;
    bool required = false;
    std::string default_value;  // empty = none
    double lo = 0, hi = 0;      // numeric range (inclusive); unused for Str
    std::vector<std::string> choices;  // for Str, empty = free form
};

struct CommandSpec {
    std::string name;
    std::vector<KeySpec> keys;
    const KeySpec* find(const std::string& key) const {
        for (const auto& k : keys)
            if (k.name == key) return &k;
        return nullptr;
    }
};

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

const std::vector<CommandSpec>& command_specs() {
    using T = KeySpec::Type;
    static const std::vector<CommandSpec> specs = {
        {"angle",
         {{"p", T::Int, true, "", 2, 13},
          {"n", T::Int, false, "3", 3, 6},
          {"k", T::Int, false, "1", 1, 4},
          {"D", T::Int, false, "", 1, 16},
          {"pair", T::Str, false, "1,2", 0, 0, {"1,2", "1,3", "2,3"}},
          {"cap", T::Int, false, "20000", 1, 2000000}}},
        {"heisenberg", {{"p", T::Int, true, "", 2, 13}}},
        {"enumerate",
         {{"p", T::Int, true, "", 2, 13},
          {"n", T::Int, false, "3", 3, 6},
          {"k", T::Int, false, "1", 1, 4},
          {"D", T::Int, false, "", 1, 16},
          {"pair", T::Str, false, "", 0, 0, {"1,2", "1,3", "2,3"}},
          {"subgroup", T::Int, false, "", 1, 3},
          {"cap", T::Int, false, "20000", 1, 2000000}}},
        {"relations",
         {{"p", T::Int, true, "", 2, 13},
          {"n", T::Int, false, "3", 3, 6},
          {"k", T::Int, false, "1", 1, 4},
          {"D", T::Int, false, "", 1, 16},
          {"maxdeg", T::Int, false, "1", 0, 4}}},
        {"solve",
         {{"scenario", T::Str, false, "mirrors", 0, 0,
           {"mirrors", "coboundary", "rep-embedded", "stress"}},
          {"model", T::Str, false, "euclidean", 0, 0, {"euclidean", "hyperboloid"}},
          {"dim", T::Int, false, "2", 1, 256},
          {"curvature", T::Real, false, "1.0", 1e-6, 64},
          {"tol", T::Real, false, "0", 0, 1},
          {"max-iter", T::Int, false, "10000", 1, 10000000},
          {"p", T::Int, false, "2", 2, 7},
          {"mirror-angle", T::Real, false, "70", 1, 179}}},
        {"fh-check",
         {{"dim", T::Int, false, "8", 2, 64}, {"trials", T::Int, false, "10000", 1, 10000000}}},
        {"flatness",
         {{"scales", T::Str, false, "1,2,4,8,64"},
          {"side", T::Real, false, "1.0", 1e-6, 10},
          {"curvature", T::Real, false, "1.0", 1e-6, 64}}},
        {"verify",
         {{"suite", T::Str, false, "all", 0, 0,
           {"relations", "geometry", "monitors", "all"}}}},
    };
    return specs;
}

const CommandSpec& spec_for(const std::string& command) {
    for (const auto& s : command_specs())
        if (s.name == command) return s;
    std::string names;
    for (const auto& s : command_specs()) names += s.name + " ";
    throw ConfigError("unknown command '" + command + "' (known: " + names + ")");
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& key, const std::string& v) {
    char* end = nullptr;
    long long r = std::strtoll(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("key '" + key + "': malformed integer '" + v + "'");
    return r;
}

double parse_real(const std::string& key, const std::string& v) {
    char* end = nullptr;
    double r = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("key '" + key + "': malformed number '" + v + "'");
    return r;
}

}  // namespace

long long RunConfig::get_int(const std::string& key) const {
    return parse_int(key, get_str(key));
}

double RunConfig::get_real(const std::string& key) const {
    return parse_real(key, get_str(key));
}

const std::string& RunConfig::get_str(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw ConfigError("missing key '" + key + "'");
    return it->second;
}

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : command_specs()) out.push_back(s.name);
        return out;
    }();
    return names;
}

RunConfig parse_config_text(const std::string& text, const std::string& command_hint) {
    RunConfig cfg;
    cfg.command = command_hint;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        if (key == "command") {
            cfg.command = value;
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int("seed", value));
        } else if (key == "out") {
            cfg.out_path = value;
        } else {
            if (cfg.values.count(key))
                throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                                  key + "'");
            cfg.values[key] = value;
        }
    }
    return cfg;
}

void validate_config(RunConfig& cfg) {
    if (cfg.command.empty()) {
        std::string names;
        for (const auto& s : known_commands()) names += s + " ";
        throw ConfigError("no command given; choose one of: " + names);
    }
    const CommandSpec& spec = spec_for(cfg.command);

    for (const auto& [key, value] : cfg.values) {
        const KeySpec* ks = spec.find(key);
        if (!ks)
            throw ConfigError("unknown key '" + key + "' for command '" + cfg.command + "'");
        switch (ks->type) {
            case KeySpec::Type::Int: {
                long long v = parse_int(key, value);
                if (v < ks->lo || v > ks->hi)
                    throw ConfigError("key '" + key + "': value " + value +
                                      " outside [" + std::to_string((long long)ks->lo) + ", " +
                                      std::to_string((long long)ks->hi) + "]");
                break;
            }
            case KeySpec::Type::Real: {
                double v = parse_real(key, value);
                if (v < ks->lo || v > ks->hi)
                    throw ConfigError("key '" + key + "': value " + value + " out of range");
                break;
            }
            case KeySpec::Type::Str: {
                if (!ks->choices.empty() &&
                    std::find(ks->choices.begin(), ks->choices.end(), value) ==
                        ks->choices.end()) {
                    std::string opts;
                    for (const auto& c : ks->choices) opts += c + " ";
                    throw ConfigError("key '" + key + "': '" + value +
                                      "' is not one of: " + opts);
                }
                break;
            }
        }
    }

    std::string missing;
    for (const auto& ks : spec.keys) {
        if (cfg.values.count(ks.name)) continue;
        if (!ks.default_value.empty()) {
            cfg.values[ks.name] = ks.default_value;
        } else if (ks.required) {
            missing += ks.name + " ";
        }
    }
    if (!missing.empty())
        throw ConfigError("command '" + cfg.command + "' requires keys: " + missing);

    // Cross-key rules.
    if (cfg.values.count("p") && !is_prime(parse_int("p", cfg.values["p"])))
        throw ConfigError("key 'p': " + cfg.values["p"] + " is not prime");
    if ((cfg.command == "angle" || cfg.command == "enumerate" || cfg.command == "relations") &&
        !cfg.values.count("D")) {
        long long n = parse_int("n", cfg.values["n"]);
        cfg.values["D"] = std::to_string(cfg.command == "relations" ? 2 * n : n);
    }
    if (cfg.command == "enumerate" && cfg.values.count("pair") && cfg.values.count("subgroup"))
        throw ConfigError("enumerate takes either 'pair' or 'subgroup', not both");
    if (cfg.command == "enumerate" && !cfg.values.count("pair") && !cfg.values.count("subgroup"))
        cfg.values["pair"] = "1,2";
}

RunConfig parse_config(const std::string& text, const std::string& command_hint,
                       const std::map<std::string, std::string>& overrides) {
    RunConfig cfg = parse_config_text(text, command_hint);
    for (const auto& [key, value] : overrides) {
        if (key == "seed")
            cfg.seed = static_cast<std::uint64_t>(parse_int("seed", value));
        else if (key == "out")
            cfg.out_path = value;
        else
            cfg.values[key] = value;
    }
    validate_config(cfg);
    return cfg;
}

}  // namespace steinfix::cli
