#pragma once

#include <map>
#include <string>
#include <vector>

#include "casson/cli/report.hpp"

namespace casson::cli {

/// "key=v1,v2,a..b;key2=..." with inclusive integer ranges a..b.
/// "key=" denotes an empty list. Throws ParseError.
using RangeSpec = std::map<std::string, std::vector<long>>;
RangeSpec parse_range(const std::string& text);

// Families and their range keys (defaults in parentheses):
//   torus-branched   n (2), q (3,5,7,9,11), r (3,5)
//   free-composite   n (2), q (-3,-1,1,3)
//   surgery-chains   length (1,2), q (-2,-1,1,2)
//   three-forms      triple (0,1), presentation (0..3), torus (1)
const std::vector<std::string>& family_names();

/// Reports are in deterministic instance order; `threads` = 0 picks the
/// hardware concurrency. Throws SchemaError for unknown families or keys.
SweepTable run_sweep(const std::string& family, const std::string& range, unsigned threads = 0);

} // namespace casson::cli
