#pragma once

#include <string>
#include <vector>

namespace regraph {

/// Minimal ZIP container, STORE method only. Entries are written in the order
/// given with a fixed timestamp, so identical inputs produce byte-identical
/// archives.
void zip_write(const std::string& zip_path, const std::string& base_dir,
               const std::vector<std::string>& relative_paths);

/// Extracts an archive written by zip_write (or any store-only zip with safe
/// relative paths). Throws std::runtime_error on compressed entries, CRC
/// mismatches, or path escapes.
void zip_extract(const std::string& zip_path, const std::string& dest_dir);

/// Entry names in central-directory order.
std::vector<std::string> zip_list(const std::string& zip_path);

}  // namespace regraph
