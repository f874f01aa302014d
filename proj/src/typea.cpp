#include "cw/typea.hpp"

#include <algorithm>

#include "cw/errors.hpp"
#include "cw/shuffle.hpp"

namespace cw {

bool is_type_A(const CartanMatrix& C) {
    for (int i = 1; i <= C.rank(); ++i)
        for (int j = i + 1; j <= C.rank(); ++j)
            if (C.q(i, j) != (j == i + 1 ? 1 : 0)) return false;
    return true;
}

void require_type_A(const CartanMatrix& C) {
    if (!is_type_A(C)) throw Error(ErrorKind::NotTypeA, "needs the type A path 1 - 2 - ... - n");
}

PolyMatrix x_product(const CartanMatrix& C, const std::vector<int>& pattern) {
    require_type_A(C);
    const int p = static_cast<int>(pattern.size());
    const int m = C.rank() + 1;
    Vars tv = t_vars(std::max(p, 1));
    PolyMatrix M;
    M.m = m;
    M.e.assign(m, std::vector<LaurentPoly>(m, LaurentPoly(tv)));
    for (int i = 0; i < m; ++i) M.e[i][i] = LaurentPoly::constant(tv, 1);
    // right multiplication by I + t E_{i,i+1} adds t * column i to column i+1
    for (int idx = 0; idx < p; ++idx) {
        int i = pattern[idx];
        C.check_letter(i);
        LaurentPoly t = LaurentPoly::variable(tv, p - 1 - idx);
        for (int row = 0; row < m; ++row)
            if (!M.e[row][i - 1].is_zero()) M.e[row][i] += M.e[row][i - 1] * t;
    }
    return M;
}

namespace {

void check_spec(const PolyMatrix& M, const MinorSpec& s) {
    if (s.I.size() != s.J.size()) throw Error(ErrorKind::SizeMismatch, "row and column sets differ in size");
    for (int x : s.I)
        if (x < 1 || x > M.m) throw Error(ErrorKind::IndexOutOfRange, "row index");
    for (int x : s.J)
        if (x < 1 || x > M.m) throw Error(ErrorKind::IndexOutOfRange, "column index");
}

LaurentPoly cofactor(const std::vector<std::vector<LaurentPoly>>& a, const Vars& v) {
    const size_t n = a.size();
    if (n == 0) return LaurentPoly::constant(v, 1);
    if (n == 1) return a[0][0];
    LaurentPoly det(v);
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            sub.push_back(std::move(row));
        }
        LaurentPoly t = a[0][j] * cofactor(sub, v);
        if (j % 2) det -= t;
        else det += t;
    }
    return det;
}

std::vector<std::vector<LaurentPoly>> submatrix(const PolyMatrix& M, const MinorSpec& s) {
    std::vector<std::vector<LaurentPoly>> a;
    for (int i : s.I) {
        std::vector<LaurentPoly> row;
        for (int j : s.J) row.push_back(M.at(i, j));
        a.push_back(std::move(row));
    }
    return a;
}

}  // namespace

LaurentPoly minor_cofactor(const PolyMatrix& M, const MinorSpec& spec) {
    check_spec(M, spec);
    return cofactor(submatrix(M, spec), M.e[0][0].vars());
}

LaurentPoly minor(const PolyMatrix& M, const MinorSpec& spec) {
    check_spec(M, spec);
    auto a = submatrix(M, spec);
    const Vars& v = M.e[0][0].vars();
    const size_t n = a.size();
    if (n < 5) return cofactor(a, v);
    // Bareiss fraction-free elimination
    LaurentPoly prev = LaurentPoly::constant(v, 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return LaurentPoly(v);
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

MinorSpec minor_spec_for_Vk(const CartanMatrix& C, const ReducedWord& w, int k) {
    require_type_A(C);
    w.check_position(k);
    MinorSpec s;
    for (int i = 1; i <= w.letter(k); ++i) s.I.push_back(i);
    std::vector<int> J = s.I;
    // s_{i_1} ... s_{i_k}: the transposition for i_k acts first
    for (int j = k; j >= 1; --j) {
        int i = w.letter(j);
        for (int& x : J) {
            if (x == i) x = i + 1;
            else if (x == i + 1) x = i;
        }
    }
    std::sort(J.begin(), J.end());
    s.J = J;
    return s;
}

CrossCheck cross_validate(const CartanMatrix& C, const ReducedWord& w, int k, const std::vector<int>& pattern) {
    require_type_A(C);
    CrossCheck res;
    res.minor_value = minor(x_product(C, pattern), minor_spec_for_Vk(C, w, k));
    res.phi_value = phi_eval(g_V(C, w, k), pattern);
    res.equal = res.minor_value == res.phi_value;
    return res;
}

nlohmann::json matrix_to_json(const PolyMatrix& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : M.e) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& p : row) r.push_back(to_json(p));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace cw
