#pragma once

#include <array>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "cw/cartan.hpp"
#include "cw/laurent.hpp"

namespace cw {

using IntMatrix = std::vector<std::vector<long long>>;

struct Arrow {
    int source;
    int target;
    int mult;
    bool operator==(const Arrow& o) const = default;
    auto operator<=>(const Arrow& o) const = default;
};

// Vertices 1..r. Frozen vertices need not be a suffix (in Gamma_i they are
// the last occurrence of each letter), so a mask is kept instead.
struct Quiver {
    int r = 0;
    std::vector<bool> frozen;  // index 1..r
    std::vector<Arrow> arrows;

    int frozen_count() const;
    std::vector<int> mutable_vertices() const;
    std::vector<int> frozen_vertices() const;
    // merged arrow multiset, sorted
    std::vector<Arrow> normalized() const;
};

// Full r x r matrix b_ij = #(j -> i) - #(i -> j) plus the frozen mask.
// Mutation only happens at mutable k; entries between frozen vertices evolve
// by the same rule but carry no meaning.
struct ExchangeMatrix {
    IntMatrix b;  // 0-based storage, b[i-1][j-1]
    std::vector<bool> frozen;  // index 1..r

    int r() const { return static_cast<int>(b.size()); }
    long long at(int i, int j) const { return b[i - 1][j - 1]; }
    bool is_frozen(int k) const { return frozen[k]; }
    std::vector<int> mutable_vertices() const;
    // rows 1..r, columns the mutable vertices in increasing order
    IntMatrix extended() const;
    IntMatrix principal() const;
    bool principal_skew_symmetric() const;
    // quiver from the matrix, arrows between frozen vertices dropped
    Quiver quiver() const;
    bool operator==(const ExchangeMatrix& o) const { return b == o.b && frozen == o.frozen; }
};

Quiver gamma_i(const CartanMatrix& C, const ReducedWord& w);
ExchangeMatrix b_matrix(const Quiver& Q);
ExchangeMatrix matrix_mutate(const ExchangeMatrix& B, int k);
// plain FZ rule on a full matrix, no frozen bookkeeping
IntMatrix fz_mutate(const IntMatrix& B, int k);

enum class CoefficientMode { Frozen, Invertible, Specialized };
CoefficientMode parse_mode(const std::string& s);
const char* mode_name(CoefficientMode m);

struct Seed {
    ExchangeMatrix B;
    std::vector<LaurentPoly> cluster;  // index k-1 for vertex k
    std::vector<int> path;
    CoefficientMode mode = CoefficientMode::Frozen;

    const Vars& vars() const { return cluster.front().vars(); }
    const LaurentPoly& var(int k) const { return cluster[k - 1]; }
};

Seed initial_seed(const ExchangeMatrix& B, const std::string& prefix = "y",
                  CoefficientMode mode = CoefficientMode::Frozen);

// the two exchange monomials (in current vertex indices) of mutation at k
struct ExchangeMonomials {
    std::vector<std::pair<int, long long>> positive;  // b_ik > 0
    std::vector<std::pair<int, long long>> negative;  // b_ik < 0, exponent -b_ik
};
ExchangeMonomials exchange_monomials(const ExchangeMatrix& B, int k);

Seed seed_mutate(const Seed& s, int k);
Seed seed_mutate_path(const Seed& s, const std::vector<int>& path);
// frozen variables set to 1
LaurentPoly specialize(const Seed& s, const LaurentPoly& p);
// position-wise output view honoring the seed's mode
LaurentPoly output_variable(const Seed& s, int k);

std::vector<long long> denominator_vector(const Seed& s, int position);
// g = VV^{-1} d, asserted integral
std::vector<long long> g_vector_initial(const std::vector<long long>& d, const IntMatrix& cartan_Bi);

struct AcyclicSetup {
    ReducedWord word;
    Seed seed;
};
// Q acyclic with arrows i -> j only for i < j
AcyclicSetup acyclic_double(const CartanMatrix& C, const Orientation& Q);
// y-dagger seed: mutations at 1, 2, ..., n in this order
Seed y_dagger(const Seed& s, int n);

// insert-if-absent registry of canonical forms, shareable across threads
class CanonicalRegistry {
public:
    bool insert(const std::string& key);
    size_t size() const;

private:
    mutable std::mutex mu_;
    std::unordered_set<std::string> keys_;
};
std::string canonical_form(const LaurentPoly& p);

nlohmann::json quiver_to_json(const Quiver& Q);
nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json seed_to_json(const Seed& s);

}  // namespace cw
