#pragma once

#include <vector>

#include "cw/cartan.hpp"
#include "cw/quiver.hpp"

namespace cw {

using DimVec = std::vector<long long>;

struct HomTables {
    IntMatrix VM;   // VM[k-1][s-1] = dim Hom(V_k, M_s)
    IntMatrix VV;   // VV[k-1][s-1] = dim Hom(V_k, V_s)
    DimVec d_delta;  // total dimension of each Delta column
    // column s of VM, i.e. the dimension vector of Delta_s
    DimVec delta_column(int s) const;
    DimVec vv_column(int s) const;
};

HomTables hom_tables(const CartanMatrix& C, const ReducedWord& w);

long long ringel_form_delta(const CartanMatrix& C, const ReducedWord& w, int k, int s);
// <a, b> for Delta-vectors via the Ringel form on standards
long long ringel_form_delta_vectors(const CartanMatrix& C, const ReducedWord& w, const DimVec& a, const DimVec& b);

struct DimMutation {
    DimVec value;
    bool in_side = false;
    long long in_total = 0;
    long long out_total = 0;
    bool tie = false;
    bool dominance = true;  // the chosen side dominates the other one coordinatewise (dimvec only)
};

// labels[k-1] sits at vertex k of the matrix B
DimMutation mutate_dimvec(const std::vector<DimVec>& labels, const ExchangeMatrix& B, int k);
DimMutation mutate_delta_dimvec(const std::vector<DimVec>& labels, const ExchangeMatrix& B, int k,
                                const DimVec& d_delta);

// in-place helpers that also mutate B
DimMutation apply_dimvec_mutation(std::vector<DimVec>& labels, ExchangeMatrix& B, int k);
DimMutation apply_delta_mutation(std::vector<DimVec>& labels, ExchangeMatrix& B, int k, const DimVec& d_delta);

// Delta-label of V_k: indicator of k, k-, ..., k_min
DimVec initial_delta_label(const ReducedWord& w, int k);
std::vector<DimVec> initial_delta_labels(const ReducedWord& w);
std::vector<DimVec> initial_dim_labels(const HomTables& h);
// sum_s a_s * (VM column s)
DimVec delta_to_dim(const HomTables& h, const DimVec& a);

}  // namespace cw
