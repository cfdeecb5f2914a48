#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "tubings/face_count.hpp"

namespace tubings {

/// Content-addressed census cache. Keys are canonical poset/graph
/// descriptions; files store the description alongside the census and are
/// verified on read, so a hash collision can never return a wrong census.
/// Writes go through a temp file and an atomic rename, which keeps
/// concurrent writers safe.
class CensusCache {
public:
    explicit CensusCache(std::filesystem::path dir);
    /// Directory from TUBINGS_CACHE_DIR, defaulting to ".tubings-cache".
    static CensusCache from_environment();

    std::optional<FaceCount> lookup(const std::string& description) const;
    void store(const std::string& description, const FaceCount& census) const;

    const std::filesystem::path& directory() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::filesystem::path path_for(const std::string& description) const;
};

}  // namespace tubings
