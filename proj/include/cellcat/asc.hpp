#pragma once

// Abstract simplicial complexes: an ordered vertex list plus a family of
// nonempty vertex-index subsets closed under nonempty subsets.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cellcat/util.hpp"

namespace cellcat {

struct ASC {
    std::vector<std::string> vertices;
    std::set<std::vector<int>> faces;  // sorted, distinct vertex indices

    bool operator==(const ASC&) const = default;
};

inline void asc_validate(const ASC& a) {
    for (const auto& f : a.faces) {
        require(!f.empty(), "asc: empty face");
        for (std::size_t i = 0; i < f.size(); ++i) {
            require(f[i] >= 0 && f[i] < static_cast<int>(a.vertices.size()),
                    "asc: vertex index out of range");
            require(i == 0 || f[i - 1] < f[i], "asc: face not sorted/distinct");
        }
        if (f.size() > 1)
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                require(a.faces.count(sub) > 0, "asc: not closed under subsets");
            }
    }
    std::set<int> used;
    for (const auto& f : a.faces) used.insert(f.begin(), f.end());
    for (int v : used)
        require(a.faces.count({v}) > 0, "asc: used vertex missing as a singleton face");
}

// Builds an ASC from generating faces by closing downwards.
inline ASC asc_from_faces(std::vector<std::string> vertices,
                          const std::vector<std::vector<int>>& generators) {
    ASC a;
    a.vertices = std::move(vertices);
    std::vector<std::vector<int>> stack;
    for (auto f : generators) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        stack.push_back(std::move(f));
    }
    while (!stack.empty()) {
        auto f = stack.back();
        stack.pop_back();
        if (f.empty() || a.faces.count(f)) continue;
        a.faces.insert(f);
        if (f.size() > 1)
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                stack.push_back(std::move(sub));
            }
    }
    asc_validate(a);
    return a;
}

}  // namespace cellcat
