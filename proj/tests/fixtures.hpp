#pragma once

#include <random>
#include <vector>

#include "cw/cartan.hpp"
#include "cw/laurent.hpp"

namespace fx {

// 1 = 2 - 3 (double edge between 1 and 2)
inline cw::CartanMatrix double_edge() { return cw::CartanMatrix::from_edges(3, {{1, 2, 2}, {2, 3, 1}}); }
// triple edge 1-2, double edges 1-3 and 2-3
inline cw::CartanMatrix rank3_dense() {
    return cw::CartanMatrix::from_edges(3, {{1, 2, 3}, {1, 3, 2}, {2, 3, 2}});
}
inline cw::CartanMatrix triangle() { return cw::CartanMatrix::from_edges(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}}); }
inline cw::CartanMatrix typeA(int n) {
    std::vector<std::array<int, 3>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1, 1});
    return cw::CartanMatrix::from_edges(n, e);
}
inline cw::CartanMatrix star4() { return cw::CartanMatrix::from_edges(4, {{1, 4, 1}, {2, 4, 1}, {3, 4, 1}}); }

inline cw::LaurentPoly random_poly(std::mt19937& rng, const cw::Vars& v, int terms, int lo, int hi) {
    std::uniform_int_distribution<int> ed(lo, hi), cd(-5, 5);
    cw::LaurentPoly p(v);
    for (int t = 0; t < terms; ++t) {
        cw::Exponent e(v->size());
        for (auto& x : e) x = ed(rng);
        p.add_term(e, cd(rng));
    }
    return p;
}

// random reduced word of the given length, built by appending letters that keep it reduced
inline std::vector<int> random_reduced(std::mt19937& rng, const cw::CartanMatrix& C, int len) {
    std::vector<int> printed;
    std::uniform_int_distribution<int> ld(1, C.rank());
    int guard = 0;
    while (static_cast<int>(printed.size()) < len && guard++ < 1000) {
        std::vector<int> cand = printed;
        cand.insert(cand.begin(), ld(rng));
        if (cw::is_reduced(C, cand)) printed = cand;
    }
    return printed;
}

}  // namespace fx
