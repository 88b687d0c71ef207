#pragma once

#include <optional>
#include <string>

namespace regraph {

/// Known census counts of connected 4-regular graphs (n = 5..20), used by the
/// estimate subcommand and the population reports.
std::optional<long long> known_population_count(int n);

/// Emits the analysis CSVs under <dir>/report: population estimates, per-bin
/// occupancy by source, source-overlap counts, normality scores and moments
/// before/after subsampling, and the per-bin mean-distance distributions of
/// the merged and final samples. Reads the library written by build_library.
void write_reports(const std::string& dir);

}  // namespace regraph
