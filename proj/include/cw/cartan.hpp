#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace cw {

using Vec = std::vector<long long>;

// Symmetric generalized Cartan matrix. Letters are 1-based throughout.
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(std::vector<std::vector<int>> c);
    // edges are unordered (i, j, multiplicity)
    static CartanMatrix from_edges(int n, const std::vector<std::array<int, 3>>& edges);

    int rank() const { return n_; }
    int c(int i, int j) const { return c_[i - 1][j - 1]; }
    // number of edges between i and j (0 on the diagonal)
    int q(int i, int j) const { return i == j ? 0 : -c_[i - 1][j - 1]; }
    const std::vector<std::vector<int>>& matrix() const { return c_; }
    void check_letter(int i) const;

    bool operator==(const CartanMatrix& o) const { return c_ == o.c_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> c_;
};

// lambda = sum f_j varpi_j + sum r_j alpha_j
struct Weight {
    Vec f;
    Vec r;
    static Weight fundamental(int n, int j);
    bool operator==(const Weight& o) const { return f == o.f && r == o.r; }
};

Vec simple_root(int n, int i);
long long height(const Vec& d);
bool is_positive(const Vec& d);

Vec reflect_root(const CartanMatrix& C, int i, const Vec& d);
long long pairing(const CartanMatrix& C, const Weight& w, int i);
Weight reflect_weight(const CartanMatrix& C, int i, const Weight& w);

// A word stored exactly as printed, (i_r, ..., i_1). Position k = 1 is the
// rightmost letter. Index maps follow the usual k-, k+, k_min, k_max notation.
class ReducedWord {
public:
    ReducedWord() = default;
    // does not check reducedness; use make_reduced for that
    ReducedWord(int n, std::vector<int> printed);

    int length() const { return r_; }
    int rank() const { return n_; }
    const std::vector<int>& printed() const { return printed_; }
    int letter(int k) const;
    int minus(int k) const;
    int plus(int k) const;
    int kmin(int k) const;
    int kmax(int k) const;
    // k[j]: number of s < k with i_s = j (k may be r+1)
    int count_before(int k, int j) const;
    int t(int j) const { return count_before(r_ + 1, j); }
    // the m-th occurrence (0-based) of letter j, or r+1 if there is none
    int occurrence(int j, int m) const;
    bool is_frozen(int k) const { return plus(k) == r_ + 1; }
    void check_position(int k) const;

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<int> printed_;
    std::vector<int> let_;  // let_[k] = i_k, index 0 unused
    std::vector<int> minus_, plus_;
    std::vector<std::vector<int>> occ_;  // occ_[j] = ascending positions
};

bool is_reduced(const CartanMatrix& C, const std::vector<int>& printed);
ReducedWord make_reduced(const CartanMatrix& C, const std::vector<int>& printed);

// beta(k) = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}); entry k-1 of the result
std::vector<Vec> beta_sequence(const CartanMatrix& C, const ReducedWord& w);

// positive real roots of height <= bound, generated from the simple roots
std::set<Vec> real_roots_up_to(const CartanMatrix& C, int height_bound = 64);
bool is_bracket_closed(const std::set<Vec>& roots, const std::function<bool(const Vec&)>& ambient);
bool is_bracket_closed(const CartanMatrix& C, const std::set<Vec>& roots, int height_bound = 64);

Vec dim_V(const CartanMatrix& C, const ReducedWord& w, int k);
// prefix word of length k, as its own ReducedWord
ReducedWord prefix(const ReducedWord& w, int k);
// entry j-1 holds b_j
Vec b_vector(const CartanMatrix& C, const ReducedWord& w, const Weight& lambda);

struct Orientation {
    int n = 0;
    std::vector<std::array<int, 3>> arrows;  // (source, target, multiplicity)
};
void check_orientation(const CartanMatrix& C, const Orientation& Q);
// orients every edge i -> j with i < j
Orientation default_orientation(const CartanMatrix& C);
long long euler_form(const Orientation& Q, const Vec& d, const Vec& e);
long long sym_form(const CartanMatrix& C, const Vec& d, const Vec& e);

struct Problem {
    CartanMatrix cartan;
    std::vector<int> word;
    std::vector<std::array<int, 3>> edges;
};
Problem parse_problem(const nlohmann::json& j);
nlohmann::json problem_to_json(const Problem& p);

}  // namespace cw
