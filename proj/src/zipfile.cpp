#include "regraph/zipfile.hpp"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <zlib.h>

namespace fs = std::filesystem;

namespace regraph {

namespace {

// 1980-01-01 00:00:00 in DOS date/time encoding
constexpr std::uint16_t kDosTime = 0;
constexpr std::uint16_t kDosDate = (1 << 5) | 1;

void put16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

std::uint16_t get16(const std::string& s, std::size_t off) {
    return static_cast<std::uint16_t>(static_cast<unsigned char>(s[off]) |
                                      (static_cast<unsigned char>(s[off + 1]) << 8));
}

std::uint32_t get32(const std::string& s, std::size_t off) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(s[off])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(s[off + 1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(s[off + 2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(s[off + 3])) << 24);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_safe(const std::string& name) {
    if (name.empty() || name.front() == '/' || name.find("..") != std::string::npos ||
        name.find('\\') != std::string::npos)
        throw std::runtime_error("zip: unsafe entry name: " + name);
}

}  // namespace

void zip_write(const std::string& zip_path, const std::string& base_dir,
               const std::vector<std::string>& relative_paths) {
    std::string out;
    std::string central;
    std::uint16_t entries = 0;

    for (const auto& rel : relative_paths) {
        check_safe(rel);
        const std::string data = read_file(fs::path(base_dir) / rel);
        const auto crc = static_cast<std::uint32_t>(
            crc32(0L, reinterpret_cast<const Bytef*>(data.data()),
                  static_cast<uInt>(data.size())));
        const auto offset = static_cast<std::uint32_t>(out.size());
        const auto size = static_cast<std::uint32_t>(data.size());

        put32(out, 0x04034b50);  // local file header
        put16(out, 20);          // version needed
        put16(out, 0);           // flags
        put16(out, 0);           // method: store
        put16(out, kDosTime);
        put16(out, kDosDate);
        put32(out, crc);
        put32(out, size);
        put32(out, size);
        put16(out, static_cast<std::uint16_t>(rel.size()));
        put16(out, 0);  // extra length
        out += rel;
        out += data;

        put32(central, 0x02014b50);  // central directory header
        put16(central, 20);          // version made by
        put16(central, 20);          // version needed
        put16(central, 0);
        put16(central, 0);
        put16(central, kDosTime);
        put16(central, kDosDate);
        put32(central, crc);
        put32(central, size);
        put32(central, size);
        put16(central, static_cast<std::uint16_t>(rel.size()));
        put16(central, 0);
        put16(central, 0);
        put16(central, 0);  // disk number
        put16(central, 0);  // internal attrs
        put32(central, 0);  // external attrs
        put32(central, offset);
        central += rel;
        ++entries;
    }

    const auto central_offset = static_cast<std::uint32_t>(out.size());
    const auto central_size = static_cast<std::uint32_t>(central.size());
    out += central;
    put32(out, 0x06054b50);  // end of central directory
    put16(out, 0);
    put16(out, 0);
    put16(out, entries);
    put16(out, entries);
    put32(out, central_size);
    put32(out, central_offset);
    put16(out, 0);  // comment length

    const fs::path target(zip_path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    std::ofstream ofs(target, std::ios::binary | std::ios::trunc);
    if (!ofs) throw std::runtime_error("cannot write " + zip_path);
    ofs << out;
}

namespace {

struct CentralEntry {
    std::string name;
    std::uint32_t crc = 0;
    std::uint32_t size = 0;
    std::uint32_t offset = 0;
    std::uint16_t method = 0;
};

std::vector<CentralEntry> read_central(const std::string& buf) {
    if (buf.size() < 22) throw std::runtime_error("zip: truncated archive");
    // locate end-of-central-directory (no comment support needed for our own
    // archives, but scan backwards anyway)
    std::size_t eocd = std::string::npos;
    for (std::size_t i = buf.size() - 22; ; --i) {
        if (get32(buf, i) == 0x06054b50) {
            eocd = i;
            break;
        }
        if (i == 0) break;
    }
    if (eocd == std::string::npos) throw std::runtime_error("zip: no end-of-central-directory");
    const std::uint16_t count = get16(buf, eocd + 10);
    std::size_t pos = get32(buf, eocd + 16);

    std::vector<CentralEntry> entries;
    for (std::uint16_t e = 0; e < count; ++e) {
        if (pos + 46 > buf.size() || get32(buf, pos) != 0x02014b50)
            throw std::runtime_error("zip: bad central directory entry");
        CentralEntry ce;
        ce.method = get16(buf, pos + 10);
        ce.crc = get32(buf, pos + 16);
        ce.size = get32(buf, pos + 24);
        ce.offset = get32(buf, pos + 42);
        const std::uint16_t name_len = get16(buf, pos + 28);
        const std::uint16_t extra_len = get16(buf, pos + 30);
        const std::uint16_t comment_len = get16(buf, pos + 32);
        ce.name = buf.substr(pos + 46, name_len);
        pos += 46 + name_len + extra_len + comment_len;
        entries.push_back(std::move(ce));
    }
    return entries;
}

std::string entry_data(const std::string& buf, const CentralEntry& ce) {
    if (ce.method != 0) throw std::runtime_error("zip: only store entries supported: " + ce.name);
    const std::size_t pos = ce.offset;
    if (pos + 30 > buf.size() || get32(buf, pos) != 0x04034b50)
        throw std::runtime_error("zip: bad local header for " + ce.name);
    const std::uint16_t name_len = get16(buf, pos + 26);
    const std::uint16_t extra_len = get16(buf, pos + 28);
    const std::size_t data_pos = pos + 30 + name_len + extra_len;
    if (data_pos + ce.size > buf.size()) throw std::runtime_error("zip: truncated entry " + ce.name);
    std::string data = buf.substr(data_pos, ce.size);
    const auto crc = static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
    if (crc != ce.crc) throw std::runtime_error("zip: crc mismatch for " + ce.name);
    return data;
}

}  // namespace

void zip_extract(const std::string& zip_path, const std::string& dest_dir) {
    const std::string buf = read_file(zip_path);
    for (const auto& ce : read_central(buf)) {
        check_safe(ce.name);
        const std::string data = entry_data(buf, ce);
        const fs::path target = fs::path(dest_dir) / ce.name;
        fs::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + target.string());
        out << data;
    }
}

std::vector<std::string> zip_list(const std::string& zip_path) {
    const std::string buf = read_file(zip_path);
    std::vector<std::string> names;
    for (const auto& ce : read_central(buf)) names.push_back(ce.name);
    return names;
}

}  // namespace regraph
