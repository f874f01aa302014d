#include <doctest.h>

#include <map>
#include <random>

#include "cw/cartan.hpp"
#include "cw/errors.hpp"
#include "fixtures.hpp"

using namespace cw;

namespace {

using Mat = std::vector<Vec>;  // m[j] = image of alpha_{j+1}

Mat reflection_matrix(const CartanMatrix& C, int i) {
    Mat m;
    for (int j = 1; j <= C.rank(); ++j) m.push_back(reflect_root(C, i, simple_root(C.rank(), j)));
    return m;
}

Vec apply(const Mat& a, const Vec& v) {
    Vec out(v.size(), 0);
    for (size_t j = 0; j < v.size(); ++j)
        for (size_t q = 0; q < v.size(); ++q) out[q] += v[j] * a[j][q];
    return out;
}

Mat compose(const Mat& a, const Mat& b) {  // a after b
    Mat out;
    for (const auto& col : b) out.push_back(apply(a, col));
    return out;
}

}  // namespace

TEST_CASE("cartan: reflections") {
    auto A2 = fx::typeA(2);
    CHECK(reflect_root(A2, 1, {1, 0}) == Vec{-1, 0});
    CHECK(reflect_root(A2, 1, {0, 1}) == Vec{1, 1});
    auto K = CartanMatrix::from_edges(2, {{1, 2, 2}});
    CHECK(reflect_root(K, 1, {0, 1}) == Vec{2, 1});
    std::mt19937 rng(1);
    auto C = fx::rank3_dense();
    std::uniform_int_distribution<int> d(-7, 7);
    for (int it = 0; it < 50; ++it) {
        Vec v{d(rng), d(rng), d(rng)};
        Weight w{{d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng)}};
        for (int i = 1; i <= 3; ++i) {
            CHECK(reflect_root(C, i, reflect_root(C, i, v)) == v);
            CHECK(reflect_weight(C, i, reflect_weight(C, i, w)) == w);
        }
    }
    auto w3 = Weight::fundamental(3, 3);
    CHECK(reflect_weight(C, 1, w3) == w3);
    CHECK(reflect_weight(C, 3, w3) == Weight{{0, 0, 1}, {0, 0, -1}});
    CHECK_THROWS_AS(reflect_root(C, 4, Vec{1, 0, 0}), Error);
}

TEST_CASE("cartan: reduced test agrees with brute force over the A2 Weyl group") {
    auto A2 = fx::typeA(2);
    CHECK(!is_reduced(A2, {1, 1}));
    CHECK(is_reduced(fx::typeA(4), {3, 4, 2, 1, 3, 4, 2, 1}));
    // lengths of group elements by breadth-first search
    Mat id{{1, 0}, {0, 1}};
    std::map<Mat, int> len{{id, 0}};
    std::vector<Mat> frontier{id};
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& g : frontier)
            for (int i = 1; i <= 2; ++i) {
                Mat h = compose(g, reflection_matrix(A2, i));
                if (!len.count(h)) {
                    len[h] = len[g] + 1;
                    next.push_back(h);
                }
            }
        frontier = next;
    }
    CHECK(len.size() == 6);
    for (int L = 0; L <= 3; ++L) {
        int total = 1 << L;
        for (int mask = 0; mask < total; ++mask) {
            std::vector<int> word;
            Mat g = id;
            for (int q = 0; q < L; ++q) word.push_back(((mask >> q) & 1) + 1);
            for (int q = 0; q < L; ++q) g = compose(g, reflection_matrix(A2, word[q]));
            CHECK(is_reduced(A2, word) == (len[g] == L));
        }
    }
}

TEST_CASE("cartan: index maps") {
    ReducedWord w(3, {3, 1, 2, 3, 1, 2, 1});  // i_1..i_7 = 1,2,1,3,2,1,3
    CHECK(w.letter(1) == 1);
    CHECK(w.letter(4) == 3);
    CHECK(w.minus(3) == 1);
    CHECK(w.plus(1) == 3);
    CHECK(w.plus(7) == 8);
    CHECK(w.kmin(6) == 1);
    CHECK(w.kmax(1) == 6);
    CHECK(w.count_before(6, 1) == 2);
    CHECK(w.t(1) == 3);
    CHECK(w.t(3) == 2);
    CHECK(w.occurrence(1, 2) == 6);
    CHECK(w.occurrence(1, 3) == 8);
    for (int k = 1; k <= 7; ++k)
        if (w.minus(k) > 0) CHECK(w.plus(w.minus(k)) == k);
}

TEST_CASE("cartan: beta sequence and Delta_w^+") {
    auto S = fx::star4();
    auto w = make_reduced(S, {3, 4, 2, 1, 4});
    auto bs = beta_sequence(S, w);
    std::set<Vec> got(bs.begin(), bs.end());
    std::set<Vec> want{{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 0, 1}, {1, 1, 1, 2}};
    CHECK(got == want);
    CHECK(is_bracket_closed(S, got));
    for (const auto& b : bs) CHECK(sym_form(S, b, b) == 2);

    auto A2 = fx::typeA(2);
    CHECK(is_bracket_closed(A2, {{1, 0}}));
    CHECK(!is_bracket_closed(A2, {{1, 0}, {0, 1}}));

    auto R = fx::rank3_dense();
    auto w15 = make_reduced(R, {2, 3, 2, 1, 2, 1, 3, 1, 2, 1});
    auto b15 = beta_sequence(R, w15);
    std::vector<Vec> printed{{1, 0, 0}, {3, 1, 0}, {8, 3, 0}, {24, 8, 1}, {40, 13, 2}, {189, 63, 8}, {527, 176, 22},
                             {1392, 465, 58}};
    for (int k = 0; k < 8; ++k) CHECK(b15[k] == printed[k]);
    CHECK_THROWS_AS(beta_sequence(A2, ReducedWord(2, {1, 1})), Error);
    CHECK(beta_sequence(A2, ReducedWord(2, {2}))[0] == Vec{0, 1});
}

TEST_CASE("cartan: dimension vectors of V_k") {
    auto T = fx::triangle();
    auto w = make_reduced(T, {3, 2, 1, 3, 2, 1});
    CHECK(dim_V(T, w, 5) == Vec{4, 3, 2});
    CHECK(dim_V(T, w, 1) == Vec{1, 0, 0});

    auto A4 = fx::typeA(4);
    auto wa = make_reduced(A4, {3, 4, 2, 1, 3, 4, 2, 1});
    auto bs = beta_sequence(A4, wa);
    for (int k = 1; k <= 8; ++k) {
        Vec prev = wa.minus(k) ? dim_V(A4, wa, wa.minus(k)) : Vec(4, 0);
        Vec d = dim_V(A4, wa, k);
        for (int i = 0; i < 4; ++i) CHECK(d[i] - prev[i] == bs[k - 1][i]);
    }
}

TEST_CASE("cartan: b-vectors") {
    auto D = fx::double_edge();
    auto w = make_reduced(D, {3, 1, 2, 3, 1, 2, 1});
    CHECK(b_vector(D, prefix(w, 2), Weight::fundamental(3, 2)) == Vec{2, 1});
    CHECK(b_vector(D, w, Weight::fundamental(3, 3)) == Vec{4, 3, 2, 0, 1, 0, 1});
    CHECK(b_vector(D, ReducedWord(3, {2}), Weight::fundamental(3, 2)) == Vec{1});
    CHECK_THROWS_AS(b_vector(D, w, Weight{{-1, 0, 0}, {0, 0, 0}}), Error);
    // sums equal the total dimension of V_k
    for (int k = 1; k <= 7; ++k) {
        auto b = b_vector(D, prefix(w, k), Weight::fundamental(3, w.letter(k)));
        CHECK(height(b) == height(dim_V(D, w, k)));
    }
}

TEST_CASE("cartan: bilinear forms") {
    auto A2 = fx::typeA(2);
    Orientation Q{2, {{1, 2, 1}}};
    check_orientation(A2, Q);
    CHECK(euler_form(Q, {1, 0}, {1, 0}) == 1);
    CHECK(sym_form(A2, {1, 0}, {1, 0}) == 2);
    CHECK(euler_form(Q, {1, 0}, {0, 1}) == -1);
    CHECK(euler_form(Q, {0, 1}, {1, 0}) == 0);
    CHECK_THROWS_AS(check_orientation(A2, Orientation{2, {{1, 2, 2}}}), Error);
    auto R = fx::rank3_dense();
    Orientation QR{3, {{2, 1, 3}, {1, 3, 2}, {3, 2, 1}, {2, 3, 1}}};
    check_orientation(R, QR);
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int it = 0; it < 40; ++it) {
        Vec a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
        CHECK(sym_form(R, a, b) == euler_form(QR, a, b) + euler_form(QR, b, a));
    }
}

TEST_CASE("cartan: json input") {
    auto p = parse_problem(nlohmann::json::parse(R"({"rank":3,"edges":[[1,2,2],[2,3,1]],"word":[3,1,2,3,1,2,1]})"));
    CHECK(p.cartan == fx::double_edge());
    CHECK(p.word.size() == 7);
    CHECK_THROWS_AS(parse_problem(nlohmann::json::parse(R"({"rank":2,"edges":[[1,3,1]]})")), Error);
}
