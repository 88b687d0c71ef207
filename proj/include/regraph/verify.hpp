#pragma once

#include <ostream>
#include <string>

namespace regraph {

/// Re-checks every invariant a built library must satisfy: decodable,
/// round-trip-stable graph6 lines matching the manifest's canonical ids,
/// k-regular connected graphs, recomputed chi/mean distance in agreement with
/// the manifest and inside the bin's interval, chi within the feasible range,
/// no duplicate isomorphism classes, final bin sizes within limits, and
/// cross-checked counts between manifest, bins.csv and the bin files.
/// Returns the number of problems found (0 = clean); one diagnostic line per
/// problem goes to diag.
int verify_library(const std::string& dir, std::ostream& diag);

}  // namespace regraph
