#pragma once

#include <string>
#include <vector>

#include "casson/cli/input.hpp"
#include "casson/cli/report.hpp"

namespace casson::cli {

// A report together with its exit status. Reports whose data fail an
// integrality lint are still emitted, but with exit code 1.
struct CommandResult {
    InvariantReport report;
    bool input_rejected = false;
};

InvariantReport knot_report(const KnotInput& in);
InvariantReport sphere_report(const SurgeryPresentation& p);
CommandResult mapping_torus_report(const MappingTorusInput& in);
InvariantReport floer_report(const FloerData& f);
InvariantReport torus_report(const TorusInput& in);
InvariantReport circle_bundle_report(const CircleBundleData& d, const std::string& knot_name);

const std::vector<std::string>& command_names();

/// Parses the document for `command` and builds its report, stamped with the
/// digest of `text`. Throws Error on bad input.
CommandResult run_command(const std::string& command, const std::string& text);

} // namespace casson::cli
