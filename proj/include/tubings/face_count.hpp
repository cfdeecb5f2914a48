#pragma once

#include <map>
#include <string>

namespace tubings {

/// Census of tubings grouped by the number of tubes.
///
/// For a connected poset this is the reverse-indexed f-vector of the
/// associahedron: a tubing with k tubes is a face of dimension |P|-2-k.
struct FaceCount {
    std::map<int, long long> by_tube_count;

    long long at(int k) const {
        auto it = by_tube_count.find(k);
        return it == by_tube_count.end() ? 0 : it->second;
    }
    void add(int k, long long count = 1) { by_tube_count[k] += count; }

    long long total() const;
    /// Largest tube count with a nonzero entry; -1 when empty.
    int max_tubes() const;

    bool operator==(const FaceCount&) const = default;
};

/// Census text: one line "k <tube-count> <number-of-tubings>" per entry.
std::string to_string(const FaceCount& census);
FaceCount parse_face_count(const std::string& text);

}  // namespace tubings
