#include "tubings/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace tubings {

namespace {
std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}
}  // namespace

CensusCache::CensusCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

CensusCache CensusCache::from_environment() {
    if (const char* env = std::getenv("TUBINGS_CACHE_DIR"); env && *env)
        return CensusCache(env);
    return CensusCache(".tubings-cache");
}

std::filesystem::path CensusCache::path_for(const std::string& description) const {
    return dir_ / (fnv1a_hex(description) + ".census");
}

std::optional<FaceCount> CensusCache::lookup(const std::string& description) const {
    std::ifstream in(path_for(description));
    if (!in) return std::nullopt;
    std::string header;
    std::string line;
    // header: description length, then the description verbatim
    std::size_t desc_len = 0;
    if (!std::getline(in, line)) return std::nullopt;
    try {
        desc_len = std::stoul(line);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    std::string desc(desc_len, '\0');
    in.read(desc.data(), static_cast<std::streamsize>(desc_len));
    if (!in || desc != description) return std::nullopt;
    std::getline(in, line);  // newline after the description
    std::ostringstream rest;
    rest << in.rdbuf();
    try {
        return parse_face_count(rest.str());
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void CensusCache::store(const std::string& description, const FaceCount& census) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto target = path_for(description);
    auto tmp = target;
    tmp += "." + std::to_string(static_cast<long>(::getpid())) + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;  // cache is best-effort
        out << description.size() << "\n" << description << "\n" << to_string(census);
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace tubings
