#include <doctest.h>

#include <random>

#include "cw/errors.hpp"
#include "cw/shuffle.hpp"
#include "cw/typea.hpp"
#include "fixtures.hpp"

using namespace cw;

namespace {

struct Ex74 {
    CartanMatrix C = fx::typeA(4);
    std::vector<int> pattern{3, 4, 2, 1, 3, 4, 2, 1};
    ReducedWord w = make_reduced(C, pattern);
    Vars t = t_vars(8);
    LaurentPoly T(int i) const { return LaurentPoly::variable(t, i - 1); }
};

}  // namespace

TEST_CASE("typeA: matrix entries") {
    Ex74 ex;
    auto M = x_product(ex.C, ex.pattern);
    CHECK(M.m == 5);
    CHECK(M.at(2, 5) == ex.T(6) * ex.T(4) * ex.T(3));
    CHECK(M.at(3, 5) == ex.T(8) * (ex.T(7) + ex.T(3)) + ex.T(4) * ex.T(3));
    CHECK(M.at(1, 2) == ex.T(5) + ex.T(1));
    for (int i = 1; i <= 5; ++i) {
        CHECK(M.at(i, i).is_one());
        for (int j = 1; j < i; ++j) CHECK(M.at(i, j).is_zero());
    }
    CHECK_THROWS_AS(x_product(fx::double_edge(), {1}), Error);
}

TEST_CASE("typeA: minors of the A4 example") {
    Ex74 ex;
    auto T = [&](int i) { return ex.T(i); };
    std::vector<LaurentPoly> want{
        T(5) + T(1),
        T(6) * (T(5) + T(1)) + T(2) * T(1),
        T(7) + T(3),
        T(8) * (T(7) * (T(6) * (T(5) + T(1)) + T(2) * T(1)) + T(6) * T(3) * (T(5) + T(1)) + T(3) * T(2) * T(1)) +
            T(4) * T(3) * T(2) * T(1),
        T(5) * T(2),
        T(6) * T(5) * T(4) * T(3) * T(2),
        T(7) * T(4) * T(2) * T(1),
        T(8) * T(7) * T(6) * T(5) * T(4) * T(2)};
    CHECK(want[3].size() == 7);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> specs{
        {{1}, {2}}, {{1, 2}, {2, 3}}, {{1, 2, 3, 4}, {1, 2, 3, 5}}, {{1, 2, 3}, {2, 3, 5}},
        {{1}, {3}}, {{1, 2}, {3, 5}}, {{1, 2, 3, 4}, {2, 3, 4, 5}}, {{1, 2, 3}, {3, 4, 5}}};
    for (int k = 1; k <= 8; ++k) {
        auto spec = minor_spec_for_Vk(ex.C, ex.w, k);
        CHECK(spec.I == specs[k - 1].first);
        CHECK(spec.J == specs[k - 1].second);
        auto cc = cross_validate(ex.C, ex.w, k, ex.pattern);
        CHECK(cc.equal);
        CHECK(cc.minor_value == want[k - 1]);
        CHECK(cc.phi_value == want[k - 1]);
    }
}

TEST_CASE("typeA: Bareiss agrees with cofactor expansion") {
    std::mt19937 rng(31);
    for (int n : {4, 5}) {
        auto v = VarTable::numbered("x", 3);
        for (int it = 0; it < 10; ++it) {
            PolyMatrix M;
            M.m = n;
            M.e.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(v)));
            for (auto& row : M.e)
                for (auto& x : row) x = fx::random_poly(rng, v, 2, 0, 2);
            MinorSpec full;
            for (int i = 1; i <= n; ++i) {
                full.I.push_back(i);
                full.J.push_back(i);
            }
            CHECK(minor(M, full) == minor_cofactor(M, full));
        }
    }
}

TEST_CASE("typeA: random A3 words cross-validate") {
    std::mt19937 rng(13);
    auto C = fx::typeA(3);
    for (int it = 0; it < 10; ++it) {
        auto printed = fx::random_reduced(rng, C, 1 + static_cast<int>(rng() % 6));
        auto w = make_reduced(C, printed);
        std::vector<int> pattern = printed;
        for (int k = 1; k <= w.length(); ++k) CHECK(cross_validate(C, w, k, pattern).equal);
    }
}
