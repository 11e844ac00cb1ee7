#include "disklab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace disklab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

LabConfig LabConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

LabConfig LabConfig::parse_string(const std::string& text) {
    LabConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigError("empty key or value", lineno);
        cfg.set(key, value);
    }
    return cfg;
}

bool LabConfig::has(const std::string& key) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&key](const auto& kv) { return kv.first == key; });
}

std::string LabConfig::get(const std::string& key, const std::string& fallback) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        if (it->first == key) return it->second;
    return fallback;
}

double LabConfig::get_double(const std::string& key, double fallback) const {
    const std::string v = get(key, "");
    if (v.empty()) return fallback;
    try {
        return std::stod(v);
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for key " + key, 0);
    }
}

int LabConfig::get_int(const std::string& key, int fallback) const {
    const std::string v = get(key, "");
    if (v.empty()) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for key " + key, 0);
    }
}

void LabConfig::set(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

QuadratureConfig LabConfig::quadrature() const {
    QuadratureConfig q;
    q.abs_tol = get_double("abs_tol", q.abs_tol);
    q.rel_tol = get_double("rel_tol", q.rel_tol);
    q.max_depth = get_int("max_depth", q.max_depth);
    q.divergence_threshold = get_double("divergence_threshold", q.divergence_threshold);
    q.theta_grid = get_int("theta_grid", q.theta_grid);
    q.validate();
    return q;
}

} // namespace disklab
