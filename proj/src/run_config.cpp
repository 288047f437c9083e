#include "fractoda/run_config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fractoda {

namespace {

const char* const kKnownKeys[] = {"a",  "b", "c1", "c2",      "c3",         "q",  "k",
                                  "m",  "h", "N",  "epsilon", "controlled", "out"};

bool known_key(const std::string& key) {
    for (const char* k : kKnownKeys) {
        if (key == k) return true;
    }
    return false;
}

std::string strip(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& value, const std::string& key, int line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE) {
        throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                          "' expects a number, got '" + value + "'");
    }
    return v;
}

long long parse_count(const std::string& value, const std::string& key, int line) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE) {
        throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                          "' expects an integer, got '" + value + "'");
    }
    return v;
}

bool parse_bool(const std::string& value, const std::string& key, int line) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                      "' expects true/false, got '" + value + "'");
}

}  // namespace

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ParsedConfig parse_run_config(std::istream& in) {
    ParsedConfig parsed;
    RunConfig& cfg = parsed.config;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = strip(raw);
        if (text.empty() || text.front() == '#') continue;

        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line) + ": expected key=value, got '" +
                              text + "'");
        }
        const std::string key = strip(text.substr(0, eq));
        const std::string value = strip(text.substr(eq + 1));
        if (!known_key(key)) {
            throw ConfigError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
        if (!parsed.keys.insert(key).second) {
            throw ConfigError("config line " + std::to_string(line) + ": duplicate key '" + key +
                              "'");
        }

        if (key == "a") cfg.params.a = parse_double(value, key, line);
        else if (key == "b") cfg.params.b = parse_double(value, key, line);
        else if (key == "c1") cfg.params.c1 = parse_double(value, key, line);
        else if (key == "c2") cfg.params.c2 = parse_double(value, key, line);
        else if (key == "c3") cfg.params.c3 = parse_double(value, key, line);
        else if (key == "q") cfg.params.q = parse_double(value, key, line);
        else if (key == "k") cfg.target.k = parse_double(value, key, line);
        else if (key == "m") cfg.target.m = parse_double(value, key, line);
        else if (key == "h") cfg.integ.h = parse_double(value, key, line);
        else if (key == "N") cfg.integ.steps = parse_count(value, key, line);
        else if (key == "epsilon") cfg.integ.epsilon = parse_double(value, key, line);
        else if (key == "controlled") cfg.controlled = parse_bool(value, key, line);
        else if (key == "out") cfg.out = value;
    }
    return parsed;
}

ParsedConfig parse_run_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_run_config(in);
}

ParsedConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_run_config(in);
}

std::string serialize_run_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "a=" << format_g12(cfg.params.a) << '\n';
    out << "b=" << format_g12(cfg.params.b) << '\n';
    out << "c1=" << format_g12(cfg.params.c1) << '\n';
    out << "c2=" << format_g12(cfg.params.c2) << '\n';
    out << "c3=" << format_g12(cfg.params.c3) << '\n';
    out << "q=" << format_g12(cfg.params.q) << '\n';
    out << "k=" << format_g12(cfg.target.k) << '\n';
    out << "m=" << format_g12(cfg.target.m) << '\n';
    out << "h=" << format_g12(cfg.integ.h) << '\n';
    out << "N=" << cfg.integ.steps << '\n';
    out << "epsilon=" << format_g12(cfg.integ.epsilon) << '\n';
    out << "controlled=" << (cfg.controlled ? "true" : "false") << '\n';
    out << "out=" << cfg.out << '\n';
    return out.str();
}

}  // namespace fractoda
