#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cw/cartan.hpp"
#include "cw/dimvec.hpp"
#include "cw/laurent.hpp"
#include "cw/quiver.hpp"

namespace cw {

// M[b, a] with i_a = i_b and a <= b; anything with a > b is the unit label
struct IntervalLabel {
    int b = 0;
    int a = 1;
    bool is_unit() const { return a > b; }
    static IntervalLabel unit() { return {0, 1}; }
    std::string str() const;
    auto operator<=>(const IntervalLabel& o) const = default;
};

IntervalLabel make_label(int b, int a);
// number of positions of letter i_b in [a, b]
int interval_length(const ReducedWord& w, const IntervalLabel& L);
// Delta indicator of {a, a+, ..., b}
DimVec interval_indicator(const ReducedWord& w, const IntervalLabel& L);

struct PlanStep {
    int step = 0;    // 1-based running index
    int k = 0;       // which block of the algorithm
    int vertex = 0;
    IntervalLabel before;
    IntervalLabel after;
};

struct MutationPlan {
    std::vector<PlanStep> steps;
    std::vector<std::vector<int>> groups;  // groups[k-1]: vertices mutated in block k, in order
    std::vector<int> path() const;
    // blocks written from k = r down to 1, each as mu_{last}...mu_{first}
    std::string grouped() const;
};

long long r_of_i(const ReducedWord& w);
MutationPlan mu_i_plan(const ReducedWord& w);

using LabelMonomial = std::map<IntervalLabel, long long>;

struct Identity {
    int k = 0;
    int s = 0;
    IntervalLabel old_label;  // M[s, s_min^(c)]
    IntervalLabel new_label;  // M[s+, s_min^(c+1)]
    LabelMonomial first;      // M[s+, s_min^(c)] * M[s, s_min^(c+1)], units dropped
    LabelMonomial second;     // the two products
    std::string str() const;
};

Identity identity_formula(const CartanMatrix& C, const ReducedWord& w, int k, int s);

struct StepRecord {
    PlanStep step;
    Identity identity;
    bool exchange_matches = false;
    bool laurent_ok = false;
    bool delta_ok = false;
    bool dim_consistent = false;
    bool homogeneous = false;
    DimVec delta_after;
};

// Exact evaluation of every cluster variable at a base point and at the point
// scaled by the torus y_k -> prod_i torus[i]^(dim V_k)_i y_k.
struct Evaluation {
    std::vector<mpq_class> point;
    std::vector<long> torus;  // distinct primes, one per letter
    std::map<IntervalLabel, mpq_class> value;
    std::map<IntervalLabel, mpq_class> scaled;
};

// dimension vector of M[b, a], i.e. dim V_b - dim V_{a-}
Vec label_degree(const CartanMatrix& C, const ReducedWord& w, const IntervalLabel& L);

struct MuReport {
    MutationPlan plan;
    std::vector<StepRecord> records;
    std::vector<IntervalLabel> initial_labels;
    std::vector<IntervalLabel> final_labels;  // index k-1 for vertex k
    bool final_labels_ok = false;
    bool final_delta_ok = false;
    bool shape_ok = false;
    Seed initial_seed;
    Seed final_seed;
    std::map<IntervalLabel, LaurentPoly> registry;  // empty unless run symbolically
    Evaluation eval;
    bool ok() const;
    const StepRecord* find(int k, int s) const;
};

// Multidegree of a label monomial read off from the torus scaling, nullopt if
// a label is missing or the ratio is not a product of the torus primes.
std::optional<Vec> numeric_multidegree(const MuReport& r, const LabelMonomial& m);

// With throw_on_mismatch, the first failing step raises StepMismatch.
// Every run is evaluated exactly; symbolic also keeps Laurent expressions,
// which is only feasible for small words.
MuReport run_mu_i(const CartanMatrix& C, const ReducedWord& w, CoefficientMode mode = CoefficientMode::Frozen,
                  bool throw_on_mismatch = true, bool symbolic = true);

// determinantal identity for (k, s), checked against the engine state of a run
struct IdentityCheck {
    Identity identity;
    bool verified = false;
    bool numeric = false;   // exact equality at both evaluation points
    bool symbolic = false;  // Laurent equality, false when the run kept no expressions
    LaurentPoly lhs;
    LaurentPoly rhs;
};
IdentityCheck determinantal_identity(const CartanMatrix& C, const ReducedWord& w, int k, int s,
                                     const MuReport* report = nullptr);

int star(const ReducedWord& w, int k);
std::vector<int> shift_sequence(const ReducedWord& w, const std::vector<int>& path);

struct PbwTable {
    Vars m;
    std::map<IntervalLabel, LaurentPoly> value;
};
PbwTable pbw_table(const CartanMatrix& C, const ReducedWord& w);
LaurentPoly pbw_expand(const PbwTable& t, const IntervalLabel& L);
// expr in the initial cluster y_1..y_r (y_k = V_k), rational substitution
LaurentPoly pbw_expand_expr(const PbwTable& t, const ReducedWord& w, const LaurentPoly& expr);

nlohmann::json plan_to_json(const MutationPlan& p);
nlohmann::json report_to_json(const MuReport& r);

}  // namespace cw
