#pragma once

#include <string>
#include <utility>
#include <vector>

#include "disklab/quadrature.hpp"

namespace disklab {

/// `key = value` configuration lines; `#` starts a comment.
class LabConfig {
  public:
    LabConfig() = default;

    static LabConfig parse_file(const std::string& path);
    static LabConfig parse_string(const std::string& text);

    bool has(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;

    void set(const std::string& key, const std::string& value);

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    /// abs_tol, rel_tol, max_depth, theta_grid, divergence_threshold.
    QuadratureConfig quadrature() const;

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(const std::string& what, int line_number)
        : std::runtime_error(what), line(line_number) {}
};

} // namespace disklab
