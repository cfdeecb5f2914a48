#include "tubings/face_count.hpp"

#include <sstream>
#include <stdexcept>

namespace tubings {

long long FaceCount::total() const {
    long long t = 0;
    for (const auto& [k, c] : by_tube_count) t += c;
    return t;
}

int FaceCount::max_tubes() const {
    int m = -1;
    for (const auto& [k, c] : by_tube_count)
        if (c != 0 && k > m) m = k;
    return m;
}

std::string to_string(const FaceCount& census) {
    std::string out;
    for (const auto& [k, c] : census.by_tube_count)
        out += "k " + std::to_string(k) + " " + std::to_string(c) + "\n";
    return out;
}

FaceCount parse_face_count(const std::string& text) {
    FaceCount census;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        int k;
        long long c;
        if (!(ls >> tag >> k >> c) || tag != "k")
            throw std::invalid_argument("bad census line: " + line);
        census.by_tube_count[k] = c;
    }
    return census;
}

}  // namespace tubings
