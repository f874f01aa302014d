#include <doctest.h>

#include <random>

#include "cw/errors.hpp"
#include "cw/interval.hpp"
#include "fixtures.hpp"

using namespace cw;

namespace {

std::string strip_id(std::string s) {
    for (auto p = s.find("(id)"); p != std::string::npos; p = s.find("(id)")) s.erase(p, 4);
    return s;
}

struct Rank3 {
    CartanMatrix C = fx::rank3_dense();
    ReducedWord w = make_reduced(C, {2, 3, 2, 1, 2, 1, 3, 1, 2, 1});
};

}  // namespace

TEST_CASE("interval: labels") {
    ReducedWord w(3, {3, 1, 2, 3, 1, 2, 1});  // i_1..i_7 = 1,2,1,3,2,1,3
    CHECK(make_label(6, 1).str() == "M[6,1]");
    CHECK(make_label(1, 3).is_unit());
    CHECK(make_label(1, 3).str() == "1");
    CHECK(interval_length(w, make_label(6, 1)) == 3);
    CHECK(interval_length(w, make_label(6, 3)) == 2);
    CHECK(interval_indicator(w, make_label(6, 3)) == DimVec{0, 0, 1, 0, 0, 1, 0});
}

TEST_CASE("interval: plans") {
    Rank3 ex;
    auto p = mu_i_plan(ex.w);
    CHECK(p.grouped() == "(id)(id)(mu2)(id)(mu6mu2)(mu1)(mu4)(mu3mu1)(mu8mu6mu2)(mu5mu3mu1)");
    CHECK(static_cast<long long>(p.steps.size()) == r_of_i(ex.w));

    auto A4 = fx::typeA(4);
    auto wa = make_reduced(A4, {1, 2, 1, 3, 2, 1, 4, 3, 2, 1});
    auto pa = mu_i_plan(wa);
    CHECK(strip_id(pa.grouped()) == "(mu1)(mu2)(mu5mu1)(mu3)(mu6mu2)(mu8mu5mu1)");
    CHECK(pa.steps.size() == 10);
    CHECK(star(wa, 5) == 5);
    CHECK(star(wa, 6) == 2);
    CHECK(shift_sequence(wa, {5, 6}) == std::vector<int>{5, 2});
    CHECK_THROWS_AS(star(wa, 10), Error);
    for (int k = 1; k <= wa.length(); ++k)
        if (!wa.is_frozen(k)) CHECK(star(wa, star(wa, k)) == k);
}

TEST_CASE("interval: identity formula") {
    Rank3 ex;
    auto id = identity_formula(ex.C, ex.w, 2, 6);
    CHECK(id.old_label == make_label(6, 2));
    CHECK(id.new_label == make_label(8, 6));
    CHECK(id.first == LabelMonomial{{make_label(8, 2), 1}, {make_label(6, 6), 1}});
    CHECK(id.second == LabelMonomial{{make_label(7, 3), 3}, {make_label(4, 4), 2}});
    auto id2 = identity_formula(ex.C, ex.w, 2, 2);
    CHECK(id2.first == LabelMonomial{{make_label(6, 2), 1}});
    CHECK(id2.second == LabelMonomial{{make_label(5, 3), 3}, {make_label(4, 4), 2}});
    CHECK_THROWS_AS(identity_formula(ex.C, ex.w, 2, 3), Error);
}

TEST_CASE("interval: rank-3 run and its six relations") {
    Rank3 ex;
    // too large for Laurent expressions, so the run is evaluated only
    auto rep = run_mu_i(ex.C, ex.w, CoefficientMode::Frozen, true, false);
    CHECK(rep.ok());
    struct Rel {
        int k, s;
        LabelMonomial first, second;
    };
    std::vector<Rel> rels{
        {2, 2, {{make_label(6, 2), 1}}, {{make_label(5, 3), 3}, {make_label(4, 4), 2}}},
        {6, 6, {{make_label(8, 6), 1}}, {{make_label(7, 7), 3}}},
        {3, 5, {{make_label(7, 3), 1}, {make_label(5, 5), 1}}, {{make_label(6, 6), 3}, {make_label(4, 4), 2}}},
        {3, 3, {{make_label(5, 3), 1}}, {{make_label(4, 4), 2}}},
        {5, 5, {{make_label(7, 5), 1}}, {{make_label(6, 6), 3}}},
        {2, 6, {{make_label(8, 2), 1}, {make_label(6, 6), 1}}, {{make_label(7, 3), 3}, {make_label(4, 4), 2}}}};
    for (const auto& r : rels) {
        auto chk = determinantal_identity(ex.C, ex.w, r.k, r.s, &rep);
        CHECK(chk.verified);
        CHECK(chk.identity.first == r.first);
        CHECK(chk.identity.second == r.second);
    }
    CHECK(rep.registry.empty());
    auto deg = numeric_multidegree(rep, {{make_label(5, 3), 1}, {make_label(7, 5), 1}});
    REQUIRE(deg);
    CHECK(*deg == Vec{615, 205, 26});
    CHECK(*numeric_multidegree(rep, {{make_label(7, 3), 1}, {make_label(5, 5), 1}}) == Vec{615, 205, 26});
    CHECK(*numeric_multidegree(rep, {{make_label(6, 6), 3}, {make_label(4, 4), 2}}) == Vec{615, 205, 26});
    auto d53 = label_degree(ex.C, ex.w, make_label(5, 3)), d75 = label_degree(ex.C, ex.w, make_label(7, 5));
    CHECK(d53[0] + d75[0] == 615);
}

TEST_CASE("interval: runs on small words") {
    std::vector<std::pair<CartanMatrix, std::vector<int>>> cases{
        {fx::typeA(3), {2, 3, 1, 2, 3, 1}},
        {fx::typeA(4), {1, 2, 1, 3, 2, 1, 4, 3, 2, 1}},
        {fx::double_edge(), {3, 1, 2, 3, 1, 2, 1}},
        {fx::double_edge(), {1, 3, 2, 1, 3, 2, 1}},
        {fx::triangle(), {3, 2, 1, 3, 2, 1}}};
    for (const auto& [C, printed] : cases) {
        auto w = make_reduced(C, printed);
        auto rep = run_mu_i(C, w);
        CHECK(rep.ok());
        for (int k = 1; k <= w.length(); ++k) CHECK(rep.final_labels[k - 1].b == w.kmax(k));
        auto plain = run_mu_i(C, w, CoefficientMode::Frozen, true, false);
        CHECK(plain.ok());
    }
    std::mt19937 rng(29);
    for (int it = 0; it < 8; ++it) {
        auto C = it % 2 ? fx::typeA(3) : fx::double_edge();
        auto w = make_reduced(C, fx::random_reduced(rng, C, 6));
        CHECK(run_mu_i(C, w, CoefficientMode::Frozen, false).ok());
    }
}

TEST_CASE("interval: PBW expansions") {
    auto C = fx::typeA(3);
    auto w = make_reduced(C, {2, 3, 1, 2, 3, 1});
    auto tab = pbw_table(C, w);
    auto m = [&](int i) { return LaurentPoly::variable(tab.m, i - 1); };
    auto V = [&](int k) { return pbw_expand(tab, make_label(k, w.kmin(k))); };
    CHECK(V(1) == m(1));
    CHECK(V(4) == m(1) * m(4) - m(3));
    CHECK(V(5) == m(2) * m(5) - m(3));
    CHECK(V(6) == m(3) * m(6) - m(4) * m(5));

    Seed s = initial_seed(b_matrix(gamma_i(C, w)));
    auto s3 = seed_mutate(s, 3);
    auto W3 = pbw_expand_expr(tab, w, s3.var(3));
    auto W2 = pbw_expand_expr(tab, w, seed_mutate(s3, 2).var(2));
    auto W1 = pbw_expand_expr(tab, w, seed_mutate(s3, 1).var(1));
    CHECK(W2 == m(1) * m(6) - m(5));
    CHECK(W1 == m(2) * m(6) - m(4));
    CHECK(W3 == m(1) * m(2) * m(6) - m(1) * m(4) - m(2) * m(5) + m(3));
    CHECK(V(3) * W3 == V(4) * V(5) + V(1) * V(2) * V(6));

    // the expansion of M[k, k_min] is homogeneous of degree dim V_k
    auto R = Rank3{};
    auto tr = pbw_table(R.C, R.w);
    std::vector<Vec> grading;
    for (int k = 1; k <= R.w.length(); ++k) grading.push_back(beta_sequence(R.C, R.w)[k - 1]);
    for (int k = 1; k <= R.w.length(); ++k) {
        auto d = multidegree(pbw_expand(tr, make_label(k, R.w.kmin(k))), grading);
        REQUIRE(d);
        CHECK(*d == dim_V(R.C, R.w, k));
    }
}
