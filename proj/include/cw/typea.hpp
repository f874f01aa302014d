#pragma once

#include <vector>

#include "cw/cartan.hpp"
#include "cw/laurent.hpp"

namespace cw {

// m x m matrix of polynomials, unitriangular for x_product outputs
struct PolyMatrix {
    int m = 0;
    std::vector<std::vector<LaurentPoly>> e;  // 0-based
    const LaurentPoly& at(int i, int j) const { return e[i - 1][j - 1]; }
};

struct MinorSpec {
    std::vector<int> I;
    std::vector<int> J;
};

// type A_n with the path 1 - 2 - ... - n
bool is_type_A(const CartanMatrix& C);
void require_type_A(const CartanMatrix& C);

// x_{j_p}(t_p) ... x_{j_1}(t_1) for the printed word (j_p, ..., j_1)
PolyMatrix x_product(const CartanMatrix& C, const std::vector<int>& pattern);
LaurentPoly minor(const PolyMatrix& M, const MinorSpec& spec);
// cofactor expansion, used as an internal oracle
LaurentPoly minor_cofactor(const PolyMatrix& M, const MinorSpec& spec);
MinorSpec minor_spec_for_Vk(const CartanMatrix& C, const ReducedWord& w, int k);

struct CrossCheck {
    bool equal = false;
    LaurentPoly minor_value;
    LaurentPoly phi_value;
};
CrossCheck cross_validate(const CartanMatrix& C, const ReducedWord& w, int k, const std::vector<int>& pattern);

nlohmann::json matrix_to_json(const PolyMatrix& M);

}  // namespace cw
