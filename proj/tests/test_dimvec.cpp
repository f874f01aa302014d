#include <doctest.h>

#include <random>

#include "cw/dimvec.hpp"
#include "cw/errors.hpp"
#include "fixtures.hpp"

using namespace cw;

namespace {

struct Ex143 {
    CartanMatrix C = fx::double_edge();
    ReducedWord w = make_reduced(C, {1, 3, 2, 1, 3, 2, 1});
    HomTables h = hom_tables(C, w);
    ExchangeMatrix B = b_matrix(gamma_i(C, w));
};

}  // namespace

TEST_CASE("dimvec: Hom tables for (1,3,2,1,3,2,1)") {
    Ex143 ex;
    for (int k = 1; k <= 7; ++k)
        for (int s = k; s <= 7; ++s) CHECK(ex.h.VM[k - 1][s - 1] == (k == s ? 1 : 0));
    CHECK(ex.h.delta_column(1) == DimVec{1, 2, 2, 3, 6, 4, 9});
    CHECK(ex.h.delta_column(2) == DimVec{0, 1, 1, 2, 4, 3, 6});
    CHECK(ex.h.delta_column(3) == DimVec{0, 0, 1, 0, 1, 0, 2});
    CHECK(ex.h.delta_column(4) == DimVec{0, 0, 0, 1, 2, 2, 3});
    CHECK(ex.h.delta_column(5) == DimVec{0, 0, 0, 0, 1, 1, 2});
    CHECK(ex.h.delta_column(6) == DimVec{0, 0, 0, 0, 0, 1, 0});
    CHECK(ex.h.delta_column(7) == DimVec{0, 0, 0, 0, 0, 0, 1});
    CHECK(ex.h.vv_column(4) == DimVec{1, 2, 2, 4, 8, 6, 12});
    CHECK(ex.h.d_delta == DimVec{27, 17, 4, 8, 4, 1, 1});
    // all other V columns shown in the paper
    CHECK(ex.h.vv_column(7) == DimVec{1, 2, 2, 4, 8, 6, 13});
    CHECK(ex.h.vv_column(5) == DimVec{0, 1, 1, 2, 5, 4, 8});
    CHECK(ex.h.vv_column(6) == DimVec{0, 0, 1, 0, 1, 1, 2});
}

TEST_CASE("dimvec: mutation at V_4") {
    Ex143 ex;
    auto labels = initial_dim_labels(ex.h);
    auto m = mutate_dimvec(labels, ex.B, 4);
    CHECK(m.in_side);
    CHECK(m.in_total == 70);
    CHECK(m.out_total == 69);
    CHECK(m.value == DimVec{0, 2, 2, 4, 8, 6, 13});
    CHECK(m.dominance);

    auto dl = initial_delta_labels(ex.w);
    CHECK(dl[3] == DimVec{1, 0, 0, 1, 0, 0, 0});
    auto dm = mutate_delta_dimvec(dl, ex.B, 4, ex.h.d_delta);
    CHECK(dm.in_side);
    CHECK(dm.value == DimVec{0, 2, 0, 0, 0, 0, 1});
    CHECK(delta_to_dim(ex.h, dm.value) == m.value);

    // twice returns the start
    auto L = labels;
    auto B = ex.B;
    apply_dimvec_mutation(L, B, 4);
    apply_dimvec_mutation(L, B, 4);
    CHECK(L == labels);
    CHECK(B == ex.B);
    CHECK_THROWS_AS(mutate_dimvec(labels, ex.B, 6), Error);
}

TEST_CASE("dimvec: random walks keep dominance and agree through VM") {
    std::mt19937 rng(21);
    auto C = fx::typeA(4);
    auto w = make_reduced(C, {1, 2, 1, 3, 2, 1, 4, 3, 2, 1});
    auto h = hom_tables(C, w);
    auto B0 = b_matrix(gamma_i(C, w));
    auto mv = B0.mutable_vertices();
    for (int walk = 0; walk < 30; ++walk) {
        auto dims = initial_dim_labels(h);
        auto del = initial_delta_labels(w);
        auto Bd = B0, Bv = B0;
        for (int d = 0; d < 6; ++d) {
            int k = mv[rng() % mv.size()];
            auto a = apply_delta_mutation(del, Bd, k, h.d_delta);
            auto b = apply_dimvec_mutation(dims, Bv, k);
            CHECK(b.dominance);
            CHECK(!b.tie);
            CHECK(delta_to_dim(h, del[k - 1]) == dims[k - 1]);
        }
    }
}

TEST_CASE("dimvec: Ringel form on standards") {
    Ex143 ex;
    auto beta = beta_sequence(ex.C, ex.w);
    CHECK(ringel_form_delta(ex.C, ex.w, 2, 5) == 0);
    CHECK(ringel_form_delta(ex.C, ex.w, 3, 3) == 1);
    CHECK(ringel_form_delta(ex.C, ex.w, 5, 2) == sym_form(ex.C, beta[4], beta[1]));
    // expanding a Delta-vector both ways
    std::mt19937 rng(8);
    for (int it = 0; it < 20; ++it) {
        DimVec a(7), b(7);
        for (auto& x : a) x = rng() % 3;
        for (auto& x : b) x = rng() % 3;
        long long direct = 0;
        for (int k = 1; k <= 7; ++k)
            for (int s = 1; s <= 7; ++s) direct += a[k - 1] * b[s - 1] * ringel_form_delta(ex.C, ex.w, k, s);
        CHECK(ringel_form_delta_vectors(ex.C, ex.w, a, b) == direct);
    }
}

TEST_CASE("dimvec: Delta columns are independent") {
    Ex143 ex;
    // unitriangular, so the determinant is 1
    std::vector<DimVec> cols;
    for (int s = 1; s <= 7; ++s) cols.push_back(ex.h.delta_column(s));
    for (int s = 1; s <= 7; ++s) {
        CHECK(cols[s - 1][s - 1] == 1);
        for (int k = 1; k < s; ++k) CHECK(cols[s - 1][k - 1] == 0);
    }
}
