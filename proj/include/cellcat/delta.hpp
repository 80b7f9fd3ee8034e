#pragma once

// The simplex category: objects are the ordinals [n] = {0..n}, morphisms are
// weakly monotone maps.  Everything here is plain combinatorics; the rest of
// the library treats it both as the index category for towers and as the
// independent oracle that generated face/degeneracy tables are compared
// against.

#include <algorithm>
#include <vector>

#include "cellcat/util.hpp"

namespace cellcat {

// A monotone map [m] -> [n], stored as its image table.
struct DeltaMor {
    int m = 0;  // domain [m]
    int n = 0;  // codomain [n]
    std::vector<int> img;  // img.size() == m+1, weakly increasing, values in 0..n

    auto operator<=>(const DeltaMor&) const = default;
    bool operator==(const DeltaMor&) const = default;
};

inline bool delta_valid(const DeltaMor& f) {
    if (static_cast<int>(f.img.size()) != f.m + 1) return false;
    for (int j = 0; j <= f.m; ++j) {
        if (f.img[j] < 0 || f.img[j] > f.n) return false;
        if (j > 0 && f.img[j] < f.img[j - 1]) return false;
    }
    return true;
}

inline DeltaMor delta_identity(int n) {
    DeltaMor f{n, n, {}};
    f.img.resize(n + 1);
    for (int j = 0; j <= n; ++j) f.img[j] = j;
    return f;
}

// d_{n,i} : [n-1] -> [n], the injection that skips i.
inline DeltaMor delta_face(int n, int i) {
    require(n >= 1 && 0 <= i && i <= n, "delta_face: index out of range");
    DeltaMor f{n - 1, n, {}};
    f.img.resize(n);
    for (int j = 0; j <= n - 1; ++j) f.img[j] = j < i ? j : j + 1;
    return f;
}

// s_{n,i} : [n+1] -> [n], the surjection that repeats i.
inline DeltaMor delta_degeneracy(int n, int i) {
    require(n >= 0 && 0 <= i && i <= n, "delta_degeneracy: index out of range");
    DeltaMor f{n + 1, n, {}};
    f.img.resize(n + 2);
    for (int j = 0; j <= n + 1; ++j) f.img[j] = j <= i ? j : j - 1;
    return f;
}

inline DeltaMor delta_compose(const DeltaMor& g, const DeltaMor& f) {
    require(f.n == g.m, "delta_compose: middle object mismatch");
    DeltaMor h{f.m, g.n, {}};
    h.img.resize(f.m + 1);
    for (int j = 0; j <= f.m; ++j) h.img[j] = g.img[f.img[j]];
    return h;
}

// One generator of the canonical word: a face d_{level,index} or a
// degeneracy s_{level,index}.
struct DeltaGen {
    bool is_face = true;
    int level = 0;
    int index = 0;

    bool operator==(const DeltaGen&) const = default;
};

// Canonical epi-mono factorization: phi = d_{i_1} ... d_{i_p} s_{j_1} ... s_{j_q}
// (word listed outermost first).  Faces peel off the largest missed value
// first, degeneracies the smallest repeated position, which fixes the word
// uniquely.  Recomposing the word in Delta reproduces phi.
inline std::vector<DeltaGen> delta_factorize(const DeltaMor& phi) {
    require(delta_valid(phi), "delta_factorize: not a monotone map");
    std::vector<DeltaGen> faces, degens;

    // Epi part: collapse repeated positions.
    DeltaMor e = phi;
    while (true) {
        int p = -1;
        for (int j = 0; j < e.m; ++j) {
            if (e.img[j] == e.img[j + 1]) {
                p = j;
                break;
            }
        }
        if (p < 0) break;
        // e = e' o s_{e.m-1, p}
        degens.push_back({false, e.m - 1, p});
        e.img.erase(e.img.begin() + p);
        e.m -= 1;
    }
    std::reverse(degens.begin(), degens.end());

    // Mono part: insert missed values, largest first.
    DeltaMor mono = e;  // injective now
    std::vector<int> misses;
    {
        std::vector<bool> hit(mono.n + 1, false);
        for (int v : mono.img) hit[v] = true;
        for (int v = mono.n; v >= 0; --v)
            if (!hit[v]) misses.push_back(v);
    }
    int level = mono.n;
    for (int v : misses) {
        faces.push_back({true, level, v});
        level -= 1;
    }

    std::vector<DeltaGen> word = faces;
    word.insert(word.end(), degens.begin(), degens.end());
    return word;
}

// Recompose a generator word (outermost first) into a single monotone map.
// `dom` is the domain ordinal of the innermost generator's source.
inline DeltaMor delta_compose_word(const std::vector<DeltaGen>& word, int dom) {
    DeltaMor acc = delta_identity(dom);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        DeltaMor g = it->is_face ? delta_face(it->level, it->index)
                                 : delta_degeneracy(it->level, it->index);
        acc = delta_compose(g, acc);
    }
    return acc;
}

// All monotone maps [m] -> [n] in lexicographic order.
inline std::vector<DeltaMor> delta_hom(int m, int n) {
    std::vector<DeltaMor> out;
    DeltaMor cur{m, n, std::vector<int>(m + 1, 0)};
    while (true) {
        out.push_back(cur);
        int j = m;
        while (j >= 0 && cur.img[j] == n) --j;
        if (j < 0) break;
        int v = cur.img[j] + 1;
        for (int k = j; k <= m; ++k) cur.img[k] = v;
    }
    return out;
}

}  // namespace cellcat
