#include "regraph/export.hpp"

#include <algorithm>
#include <filesystem>
#include <stdexcept>

#include "regraph/zipfile.hpp"

namespace fs = std::filesystem;

namespace regraph {

void export_library(const std::string& dir, const std::string& zip_path) {
    for (const char* required : {"config.json", "manifest.csv", "bins.csv"})
        if (!fs::exists(fs::path(dir) / required))
            throw std::runtime_error(std::string("export: missing ") + required + " in " + dir);

    std::vector<std::string> entries{"bins.csv", "config.json", "manifest.csv"};
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_directory()) continue;
        const std::string name = e.path().filename().string();
        if (name.rfind("n", 0) != 0 || name.size() < 2 ||
            name.find_first_not_of("0123456789", 1) != std::string::npos)
            continue;
        for (const auto& f : fs::directory_iterator(e.path())) {
            if (f.is_regular_file() && f.path().extension() == ".g6")
                entries.push_back(name + "/" + f.path().filename().string());
        }
    }
    std::sort(entries.begin(), entries.end());
    zip_write(zip_path, dir, entries);
}

void import_library(const std::string& zip_path, const std::string& dest_dir) {
    zip_extract(zip_path, dest_dir);
}

}  // namespace regraph
