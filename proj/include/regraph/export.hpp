#pragma once

#include <string>

namespace regraph {

/// Packs a built library into a zip archive: config.json, manifest.csv,
/// bins.csv and the per-n bin files, entries sorted by path. Byte-stable for
/// identical inputs. Raw campaign records and reports are working data and
/// stay outside the archive.
void export_library(const std::string& dir, const std::string& zip_path);

/// Unpacks an archive produced by export_library.
void import_library(const std::string& zip_path, const std::string& dest_dir);

}  // namespace regraph
