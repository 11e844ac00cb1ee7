#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disklab/blaschke.hpp"
#include "disklab/config.hpp"
#include "disklab/report.hpp"

namespace disklab {

const std::vector<std::string>& experiment_names();

/// Runs one of the named experiments deterministically.  An optional zero
/// sequence overrides the experiment's built-in one where it applies.
ExperimentReport run_experiment(const std::string& name, const LabConfig& config,
                                const std::optional<ZeroSequence>& zeros_override = std::nullopt);

} // namespace disklab
