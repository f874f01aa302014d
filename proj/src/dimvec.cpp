#include "cw/dimvec.hpp"

#include <iostream>

#include "cw/errors.hpp"

namespace cw {

DimVec HomTables::delta_column(int s) const {
    DimVec d;
    for (const auto& row : VM) d.push_back(row[s - 1]);
    return d;
}

DimVec HomTables::vv_column(int s) const {
    DimVec d;
    for (const auto& row : VV) d.push_back(row[s - 1]);
    return d;
}

HomTables hom_tables(const CartanMatrix& C, const ReducedWord& w) {
    const int r = w.length();
    auto beta = beta_sequence(C, w);
    HomTables h;
    h.VM.assign(r, std::vector<long long>(r, 0));
    h.VV.assign(r, std::vector<long long>(r, 0));
    for (int k = 1; k <= r; ++k)
        for (int s = 1; s <= k; ++s) {
            if (k == s) {
                h.VM[k - 1][s - 1] = 1;
                continue;
            }
            long long v = w.letter(k) == w.letter(s) ? 1 : 0;
            for (int kk = k; kk > s; kk = w.minus(kk)) v += sym_form(C, beta[kk - 1], beta[s - 1]);
            h.VM[k - 1][s - 1] = v;
        }
    for (int s = 1; s <= r; ++s)
        for (int t = s; t > 0; t = w.minus(t))
            for (int k = 1; k <= r; ++k) h.VV[k - 1][s - 1] += h.VM[k - 1][t - 1];
    h.d_delta.assign(r, 0);
    for (int s = 1; s <= r; ++s)
        for (int k = 1; k <= r; ++k) h.d_delta[s - 1] += h.VM[k - 1][s - 1];
    return h;
}

long long ringel_form_delta(const CartanMatrix& C, const ReducedWord& w, int k, int s) {
    w.check_position(k);
    w.check_position(s);
    if (k < s) return 0;
    if (k == s) return 1;
    auto beta = beta_sequence(C, w);
    return sym_form(C, beta[k - 1], beta[s - 1]);
}

long long ringel_form_delta_vectors(const CartanMatrix& C, const ReducedWord& w, const DimVec& a, const DimVec& b) {
    const int r = w.length();
    auto beta = beta_sequence(C, w);
    long long v = 0;
    for (int k = 1; k <= r; ++k)
        for (int s = 1; s <= r; ++s) {
            if (!a[k - 1] || !b[s - 1] || k < s) continue;
            long long f = k == s ? 1 : sym_form(C, beta[k - 1], beta[s - 1]);
            v += a[k - 1] * b[s - 1] * f;
        }
    return v;
}

namespace {

DimMutation mutate_generic(const std::vector<DimVec>& labels, const ExchangeMatrix& B, int k, const DimVec* weight) {
    if (k < 1 || k > B.r()) throw Error(ErrorKind::IndexOutOfRange, "mutation index out of range");
    if (B.frozen[k]) throw Error(ErrorKind::FrozenIndex, "cannot mutate at frozen vertex " + std::to_string(k));
    const size_t len = labels[k - 1].size();
    DimVec in(len, 0), out(len, 0);
    for (int i = 1; i <= B.r(); ++i) {
        long long b = B.at(i, k);  // #(k -> i) - #(i -> k)
        if (b == 0) continue;
        DimVec& side = b < 0 ? in : out;
        long long m = b < 0 ? -b : b;
        for (size_t q = 0; q < len; ++q) side[q] += m * labels[i - 1][q];
    }
    DimMutation res;
    for (size_t q = 0; q < len; ++q) {
        long long wq = weight ? (*weight)[q] : 1;
        res.in_total += in[q] * wq;
        res.out_total += out[q] * wq;
    }
    res.tie = res.in_total == res.out_total;
    res.in_side = res.in_total > res.out_total;
    const DimVec& big = res.in_side ? in : out;
    const DimVec& small = res.in_side ? out : in;
    res.value.assign(len, 0);
    for (size_t q = 0; q < len; ++q) {
        // coordinatewise dominance is only claimed for B_i-dimension vectors
        if (!weight && big[q] < small[q]) res.dominance = false;
        res.value[q] = big[q] - labels[k - 1][q];
        if (res.value[q] < 0)
            throw Error(ErrorKind::NegativeEntry, "negative entry after mutation at " + std::to_string(k));
    }
    if (!res.dominance)
        std::cerr << "{\"event\":\"max_dominance_violation\",\"vertex\":" << k << ",\"in_total\":" << res.in_total
                  << ",\"out_total\":" << res.out_total << "}\n";
    return res;
}

}  // namespace

DimMutation mutate_dimvec(const std::vector<DimVec>& labels, const ExchangeMatrix& B, int k) {
    return mutate_generic(labels, B, k, nullptr);
}

DimMutation mutate_delta_dimvec(const std::vector<DimVec>& labels, const ExchangeMatrix& B, int k,
                                const DimVec& d_delta) {
    return mutate_generic(labels, B, k, &d_delta);
}

DimMutation apply_dimvec_mutation(std::vector<DimVec>& labels, ExchangeMatrix& B, int k) {
    auto m = mutate_dimvec(labels, B, k);
    labels[k - 1] = m.value;
    B = matrix_mutate(B, k);
    return m;
}

DimMutation apply_delta_mutation(std::vector<DimVec>& labels, ExchangeMatrix& B, int k, const DimVec& d_delta) {
    auto m = mutate_delta_dimvec(labels, B, k, d_delta);
    labels[k - 1] = m.value;
    B = matrix_mutate(B, k);
    return m;
}

DimVec initial_delta_label(const ReducedWord& w, int k) {
    DimVec a(w.length(), 0);
    for (int t = k; t > 0; t = w.minus(t)) a[t - 1] = 1;
    return a;
}

std::vector<DimVec> initial_delta_labels(const ReducedWord& w) {
    std::vector<DimVec> v;
    for (int k = 1; k <= w.length(); ++k) v.push_back(initial_delta_label(w, k));
    return v;
}

std::vector<DimVec> initial_dim_labels(const HomTables& h) {
    std::vector<DimVec> v;
    for (int k = 1; k <= static_cast<int>(h.VV.size()); ++k) v.push_back(h.vv_column(k));
    return v;
}

DimVec delta_to_dim(const HomTables& h, const DimVec& a) {
    const size_t r = h.VM.size();
    DimVec d(r, 0);
    for (size_t s = 0; s < r; ++s)
        if (a[s])
            for (size_t k = 0; k < r; ++k) d[k] += a[s] * h.VM[k][s];
    return d;
}

}  // namespace cw
