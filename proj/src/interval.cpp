#include "cw/interval.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cw/errors.hpp"

namespace cw {

std::string IntervalLabel::str() const {
    if (is_unit()) return "1";
    return "M[" + std::to_string(b) + "," + std::to_string(a) + "]";
}

IntervalLabel make_label(int b, int a) {
    if (a > b) return IntervalLabel::unit();
    return {b, a};
}

int interval_length(const ReducedWord& w, const IntervalLabel& L) {
    if (L.is_unit()) return 0;
    int n = 0;
    for (int t = L.b; t >= L.a && t > 0; t = w.minus(t)) ++n;
    return n;
}

DimVec interval_indicator(const ReducedWord& w, const IntervalLabel& L) {
    DimVec d(w.length(), 0);
    if (L.is_unit()) return d;
    for (int t = L.b; t >= L.a && t > 0; t = w.minus(t)) d[t - 1] = 1;
    return d;
}

std::vector<int> MutationPlan::path() const {
    std::vector<int> p;
    for (const auto& s : steps) p.push_back(s.vertex);
    return p;
}

std::string MutationPlan::grouped() const {
    std::ostringstream os;
    for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
        os << "(";
        if (g->empty()) os << "id";
        for (auto v = g->rbegin(); v != g->rend(); ++v) os << "mu" << *v;
        os << ")";
    }
    return os.str();
}

long long r_of_i(const ReducedWord& w) {
    long long s = 0;
    for (int j = 1; j <= w.rank(); ++j) s += static_cast<long long>(w.t(j)) * (w.t(j) - 1) / 2;
    return s;
}

MutationPlan mu_i_plan(const ReducedWord& w) {
    MutationPlan plan;
    int step = 0;
    for (int k = 1; k <= w.length(); ++k) {
        const int j = w.letter(k);
        const int c = w.count_before(k, j);
        const int rk = w.t(j) - 1 - c;
        const int kp = w.plus(k);
        std::vector<int> group;
        for (int m = 0; m < rk; ++m) {
            PlanStep s;
            s.step = ++step;
            s.k = k;
            s.vertex = w.occurrence(j, m);
            s.before = make_label(w.occurrence(j, c + m), k);
            s.after = make_label(w.occurrence(j, c + 1 + m), kp);
            plan.steps.push_back(s);
            group.push_back(s.vertex);
        }
        plan.groups.push_back(group);
    }
    return plan;
}

namespace {

std::string monomial_str(const LabelMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [L, e] : m) {
        if (!s.empty()) s += "*";
        s += L.str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

void add_factor(LabelMonomial& m, const IntervalLabel& L, long long e) {
    if (L.is_unit() || e == 0) return;
    m[L] += e;
}

}  // namespace

std::string Identity::str() const {
    return old_label.str() + "*" + new_label.str() + " = " + monomial_str(first) + " + " + monomial_str(second);
}

Identity identity_formula(const CartanMatrix& C, const ReducedWord& w, int k, int s) {
    w.check_position(k);
    w.check_position(s);
    const int j = w.letter(s);
    if (w.letter(k) != j) throw Error(ErrorKind::BadInput, "identity needs i_s = i_k");
    if (s < k || w.is_frozen(s)) throw Error(ErrorKind::BadInput, "pair (k, s) does not occur in the algorithm");
    const int c = w.count_before(k, j);
    const int sp = w.plus(s);
    const int a0 = w.occurrence(j, c), a1 = w.occurrence(j, c + 1);
    Identity id;
    id.k = k;
    id.s = s;
    id.old_label = make_label(s, a0);
    id.new_label = make_label(sp, a1);
    add_factor(id.first, make_label(sp, a0), 1);
    add_factor(id.first, make_label(s, a1), 1);
    // first occurrence of letter i_t at a position >= k
    auto lower = [&](int t) { return w.occurrence(w.letter(t), w.count_before(k, w.letter(t))); };
    for (int t = s + 1; t < sp; ++t)
        if (w.plus(t) >= sp) add_factor(id.second, make_label(t, lower(t)), C.q(j, w.letter(t)));
    for (int l = w.kmin(s) + 1; l < s; ++l)
        if (w.plus(l) >= sp) add_factor(id.second, make_label(l, lower(l)), C.q(j, w.letter(l)));
    return id;
}

bool MuReport::ok() const {
    for (const auto& r : records)
        if (!r.exchange_matches || !r.laurent_ok || !r.delta_ok || !r.dim_consistent || !r.homogeneous) return false;
    return final_labels_ok && final_delta_ok && shape_ok;
}

const StepRecord* MuReport::find(int k, int s) const {
    for (const auto& r : records)
        if (r.identity.k == k && r.identity.s == s) return &r;
    return nullptr;
}

namespace {

LaurentPoly eval_monomial(const LabelMonomial& m, const std::map<IntervalLabel, LaurentPoly>& reg, const Vars& v,
                          bool& missing) {
    LaurentPoly p = LaurentPoly::constant(v, 1);
    for (const auto& [L, e] : m) {
        auto it = reg.find(L);
        if (it == reg.end()) {
            missing = true;
            return p;
        }
        p *= it->second.pow(static_cast<unsigned>(e));
    }
    return p;
}

mpq_class qpow(const mpq_class& x, long long e) {
    mpq_class out = 1;
    for (long long i = 0; i < e; ++i) out *= x;
    return out;
}

mpq_class eval_numeric(const LabelMonomial& m, const std::map<IntervalLabel, mpq_class>& val, bool& missing) {
    mpq_class p = 1;
    for (const auto& [L, e] : m) {
        auto it = val.find(L);
        if (it == val.end()) {
            missing = true;
            return p;
        }
        p *= qpow(it->second, e);
    }
    return p;
}

mpq_class torus_power(const std::vector<long>& torus, const Vec& d) {
    mpq_class out = 1;
    for (size_t i = 0; i < torus.size(); ++i) {
        mpq_class f = torus[i];
        out *= d[i] >= 0 ? qpow(f, d[i]) : 1 / qpow(f, -d[i]);
    }
    return out;
}

std::vector<long> first_primes(int n) {
    std::vector<long> p;
    for (long c = 2; static_cast<int>(p.size()) < n; ++c) {
        bool prime = true;
        for (long q : p)
            if (c % q == 0) prime = false;
        if (prime) p.push_back(c);
    }
    return p;
}

// exchange step on plain values
mpq_class mutate_value(const std::vector<mpq_class>& val, const ExchangeMatrix& B, int k) {
    auto em = exchange_monomials(B, k);
    mpq_class pos = 1, neg = 1;
    for (auto [i, e] : em.positive) pos *= qpow(val[i - 1], e);
    for (auto [i, e] : em.negative) neg *= qpow(val[i - 1], e);
    return (pos + neg) / val[k - 1];
}

}  // namespace

Vec label_degree(const CartanMatrix& C, const ReducedWord& w, const IntervalLabel& L) {
    Vec d(C.rank(), 0);
    if (L.is_unit()) return d;
    d = dim_V(C, w, L.b);
    if (int am = w.minus(L.a); am > 0) {
        Vec lo = dim_V(C, w, am);
        for (size_t i = 0; i < d.size(); ++i) d[i] -= lo[i];
    }
    return d;
}

std::optional<Vec> numeric_multidegree(const MuReport& r, const LabelMonomial& m) {
    bool missing = false;
    mpq_class base = eval_numeric(m, r.eval.value, missing);
    mpq_class ratio = eval_numeric(m, r.eval.scaled, missing) / base;
    if (missing) return std::nullopt;
    Vec d(r.eval.torus.size(), 0);
    mpz_class num = ratio.get_num(), den = ratio.get_den();
    for (size_t i = 0; i < d.size(); ++i) {
        const unsigned long p = static_cast<unsigned long>(r.eval.torus[i]);
        while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
            num /= p;
            ++d[i];
        }
        while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
            den /= p;
            --d[i];
        }
    }
    if (num != 1 || den != 1) return std::nullopt;
    return d;
}

MuReport run_mu_i(const CartanMatrix& C, const ReducedWord& w, CoefficientMode mode, bool throw_on_mismatch,
                  bool symbolic) {
    const int r = w.length();
    MuReport rep;
    rep.plan = mu_i_plan(w);
    HomTables h = hom_tables(C, w);
    ExchangeMatrix B0 = b_matrix(gamma_i(C, w));
    Seed seed = initial_seed(B0, "y", mode);
    rep.initial_seed = seed;
    ExchangeMatrix B = B0;

    std::vector<IntervalLabel> labels(r);
    for (int k = 1; k <= r; ++k) labels[k - 1] = make_label(k, w.kmin(k));
    rep.initial_labels = labels;
    std::vector<DimVec> delta = initial_delta_labels(w);
    std::vector<DimVec> dims = initial_dim_labels(h);

    std::vector<Vec> grading;
    for (int k = 1; k <= r; ++k) grading.push_back(dim_V(C, w, k));
    if (symbolic)
        for (int k = 1; k <= r; ++k) rep.registry.emplace(labels[k - 1], seed.var(k));

    // fixed generic point, so reports are reproducible
    Evaluation& ev = rep.eval;
    ev.torus = first_primes(C.rank());
    std::mt19937 rng(1729);
    std::uniform_int_distribution<int> pick(2, 997);
    std::vector<mpq_class> val(r), sval(r);
    for (int k = 1; k <= r; ++k) {
        val[k - 1] = pick(rng);
        sval[k - 1] = val[k - 1] * torus_power(ev.torus, grading[k - 1]);
        ev.value.emplace(labels[k - 1], val[k - 1]);
        ev.scaled.emplace(labels[k - 1], sval[k - 1]);
    }
    ev.point = val;

    auto fail = [&](const PlanStep& st, const std::string& what) {
        if (throw_on_mismatch)
            throw Error(ErrorKind::StepMismatch, "step " + std::to_string(st.step) + " (vertex " +
                                                     std::to_string(st.vertex) + ", expected " + st.before.str() +
                                                     " -> " + st.after.str() + "): " + what);
    };

    for (const auto& st : rep.plan.steps) {
        StepRecord rec;
        rec.step = st;
        const int v = st.vertex;
        if (labels[v - 1] != st.before) {
            fail(st, "vertex carries " + labels[v - 1].str());
        }
        rec.identity = identity_formula(C, w, st.k, st.before.b);

        // exchange monomials read in labels
        auto em = exchange_monomials(B, v);
        LabelMonomial pos, neg;
        for (auto [i, e] : em.positive) add_factor(pos, labels[i - 1], e);
        for (auto [i, e] : em.negative) add_factor(neg, labels[i - 1], e);
        rec.exchange_matches = (pos == rec.identity.first && neg == rec.identity.second) ||
                               (neg == rec.identity.first && pos == rec.identity.second);
        rec.exchange_matches = rec.exchange_matches && rec.identity.old_label == st.before &&
                               rec.identity.new_label == st.after;
        if (!rec.exchange_matches)
            fail(st, "exchange " + monomial_str(pos) + " + " + monomial_str(neg) + " differs from " + rec.identity.str());

        // Delta labels and B_i-dimension vectors
        ExchangeMatrix Bd = B, Bv = B;
        auto dm = apply_delta_mutation(delta, Bd, v, h.d_delta);
        auto vm = apply_dimvec_mutation(dims, Bv, v);
        rec.delta_after = dm.value;
        rec.delta_ok = dm.value == interval_indicator(w, st.after) && !dm.tie;
        rec.dim_consistent = vm.value == delta_to_dim(h, dm.value) && vm.dominance && !vm.tie;
        if (!rec.delta_ok) fail(st, "Delta label is not the indicator of " + st.after.str());
        if (!rec.dim_consistent) fail(st, "dimension vector disagrees with the Delta label");

        // evaluated track: a label met twice must carry the same value
        val[v - 1] = mutate_value(val, B, v);
        sval[v - 1] = mutate_value(sval, B, v);
        bool same = true;
        for (auto [mp, x] : {std::pair{&ev.value, &val[v - 1]}, std::pair{&ev.scaled, &sval[v - 1]}}) {
            auto [it, fresh] = mp->emplace(st.after, *x);
            if (!fresh && it->second != *x) same = false;
        }
        bool missing = false;
        LabelMonomial lhs_m;
        add_factor(lhs_m, st.before, 1);
        add_factor(lhs_m, st.after, 1);
        mpq_class lhs = eval_numeric(lhs_m, ev.value, missing);
        mpq_class rhs = eval_numeric(rec.identity.first, ev.value, missing) +
                        eval_numeric(rec.identity.second, ev.value, missing);
        rec.laurent_ok = same && !missing && lhs == rhs;
        Vec deg = label_degree(C, w, st.before);
        Vec d2 = label_degree(C, w, st.after);
        for (size_t i = 0; i < deg.size(); ++i) deg[i] += d2[i];
        auto n0 = numeric_multidegree(rep, lhs_m), n1 = numeric_multidegree(rep, rec.identity.first),
             n2 = numeric_multidegree(rep, rec.identity.second);
        rec.homogeneous = n0 && n1 && n2 && *n0 == deg && *n1 == deg && *n2 == deg;

        if (symbolic) {
            seed = seed_mutate(seed, v);
            const LaurentPoly& nv = seed.var(v);
            auto it = rep.registry.find(st.after);
            bool same_sym = true;
            if (it == rep.registry.end())
                rep.registry.emplace(st.after, nv);
            else
                same_sym = it->second == nv;
            bool miss = false;
            const Vars& vars = seed.vars();
            LaurentPoly slhs = rep.registry.at(st.before) * nv;
            LaurentPoly t1 = eval_monomial(rec.identity.first, rep.registry, vars, miss);
            LaurentPoly t2 = eval_monomial(rec.identity.second, rep.registry, vars, miss);
            rec.laurent_ok = rec.laurent_ok && same_sym && !miss && slhs == t1 + t2;
            auto d0 = multidegree(slhs, grading), d1 = multidegree(t1, grading), d2s = multidegree(t2, grading);
            rec.homogeneous = rec.homogeneous && d0 && d1 && d2s && *d0 == deg && *d1 == deg && *d2s == deg;
            B = seed.B;
        } else {
            B = matrix_mutate(B, v);
        }
        if (!rec.laurent_ok) fail(st, "exchange identity fails");
        if (!rec.homogeneous) fail(st, "exchange relation is not homogeneous");
        labels[v - 1] = st.after;
        rep.records.push_back(rec);
    }

    rep.final_labels = labels;
    rep.final_seed = symbolic ? seed : Seed{};
    if (!symbolic) rep.final_seed.B = B;

    // vertex k_min^(m) ends at M[k_max, k_min^(t-1-m)]
    rep.final_labels_ok = true;
    rep.final_delta_ok = true;
    for (int k = 1; k <= r; ++k) {
        const int j = w.letter(k), m = w.count_before(k, j), t = w.t(j);
        IntervalLabel want = make_label(w.kmax(k), w.occurrence(j, t - 1 - m));
        if (labels[k - 1] != want) rep.final_labels_ok = false;
        if (delta[k - 1] != interval_indicator(w, want)) rep.final_delta_ok = false;
    }
    std::multiset<IntervalLabel> got(labels.begin(), labels.end()), want;
    for (int k = 1; k <= r; ++k) want.insert(make_label(w.kmax(k), k));
    if (got != want) rep.final_labels_ok = false;

    // shape of Gamma_{T_i}: chain arrows reversed, mutable part equal to the
    // initial one transported along k -> k*
    rep.shape_ok = B.principal_skew_symmetric();
    for (int j = 1; j <= w.rank(); ++j)
        for (int m = 0; m + 1 < w.t(j); ++m)
            if (B.at(w.occurrence(j, m + 1), w.occurrence(j, m)) != 1) rep.shape_ok = false;
    for (int k = 1; k <= r; ++k)
        for (int l = 1; l <= r; ++l)
            if (!w.is_frozen(k) && !w.is_frozen(l) && B.at(star(w, k), star(w, l)) != B0.at(k, l))
                rep.shape_ok = false;
    if (throw_on_mismatch && !(rep.final_labels_ok && rep.final_delta_ok && rep.shape_ok))
        throw Error(ErrorKind::StepMismatch, "final seed does not have the expected labels or shape");
    return rep;
}

IdentityCheck determinantal_identity(const CartanMatrix& C, const ReducedWord& w, int k, int s,
                                     const MuReport* report) {
    IdentityCheck res;
    res.identity = identity_formula(C, w, k, s);
    MuReport local;
    if (!report) {
        local = run_mu_i(C, w, CoefficientMode::Frozen, false, false);
        report = &local;
    }
    const StepRecord* rec = report->find(k, s);
    if (!rec) throw Error(ErrorKind::IdentityFails, "no step for " + res.identity.str());
    LabelMonomial lhs_m;
    add_factor(lhs_m, res.identity.old_label, 1);
    add_factor(lhs_m, res.identity.new_label, 1);
    bool missing = false, equal = true;
    for (const auto* mp : {&report->eval.value, &report->eval.scaled}) {
        mpq_class l = eval_numeric(lhs_m, *mp, missing);
        mpq_class r = eval_numeric(res.identity.first, *mp, missing) + eval_numeric(res.identity.second, *mp, missing);
        equal = equal && l == r;
    }
    res.numeric = equal && !missing;
    const auto& reg = report->registry;
    if (!reg.empty()) {
        const Vars& v = reg.begin()->second.vars();
        bool miss = false;
        res.lhs = eval_monomial(lhs_m, reg, v, miss);
        res.rhs = eval_monomial(res.identity.first, reg, v, miss) + eval_monomial(res.identity.second, reg, v, miss);
        res.symbolic = !miss && res.lhs == res.rhs;
    }
    res.verified = res.numeric && rec->exchange_matches && rec->laurent_ok && (reg.empty() || res.symbolic);
    return res;
}

int star(const ReducedWord& w, int k) {
    w.check_position(k);
    if (w.is_frozen(k)) throw Error(ErrorKind::StarUndefined, "star is undefined on the last occurrence " + std::to_string(k));
    const int j = w.letter(k);
    return w.occurrence(j, w.t(j) - 2 - w.count_before(k, j));
}

std::vector<int> shift_sequence(const ReducedWord& w, const std::vector<int>& path) {
    std::vector<int> out;
    for (int z : path) out.push_back(star(w, z));
    return out;
}

PbwTable pbw_table(const CartanMatrix& C, const ReducedWord& w) {
    const int r = w.length();
    PbwTable tab;
    tab.m = VarTable::numbered("m", r);
    std::set<IntervalLabel> busy;
    std::function<LaurentPoly(const IntervalLabel&)> get = [&](const IntervalLabel& L) -> LaurentPoly {
        if (L.is_unit()) return LaurentPoly::constant(tab.m, 1);
        auto it = tab.value.find(L);
        if (it != tab.value.end()) return it->second;
        if (!busy.insert(L).second) throw Error(ErrorKind::NotPolynomialAfterSubstitution, "cyclic recursion at " + L.str());
        LaurentPoly v(tab.m);
        if (L.a == L.b) {
            v = LaurentPoly::variable(tab.m, L.b - 1);
        } else {
            // M[b+, a] from the identity with s = b and k = a
            const int b = w.minus(L.b), a = L.a;
            Identity id = identity_formula(C, w, a, b);
            LaurentPoly second = LaurentPoly::constant(tab.m, 1);
            for (const auto& [F, e] : id.second) second *= get(F).pow(static_cast<unsigned>(e));
            LaurentPoly num = get(make_label(b, a)) * get(make_label(L.b, w.plus(a))) - second;
            LaurentPoly den = get(make_label(b, w.plus(a)));
            try {
                v = exact_div(num, den);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotDivisible) throw;
                throw Error(ErrorKind::NotPolynomialAfterSubstitution, "expansion of " + L.str() + " is not exact");
            }
            if (!v.is_polynomial())
                throw Error(ErrorKind::NotPolynomialAfterSubstitution, "expansion of " + L.str() + " is not a polynomial");
        }
        busy.erase(L);
        tab.value.emplace(L, v);
        return v;
    };
    for (int b = 1; b <= r; ++b)
        for (int a = b; a > 0; a = w.minus(a)) get(make_label(b, a));
    return tab;
}

LaurentPoly pbw_expand(const PbwTable& t, const IntervalLabel& L) {
    if (L.is_unit()) return LaurentPoly::constant(t.m, 1);
    auto it = t.value.find(L);
    if (it == t.value.end()) throw Error(ErrorKind::BadInput, "no interval " + L.str());
    return it->second;
}

LaurentPoly pbw_expand_expr(const PbwTable& t, const ReducedWord& w, const LaurentPoly& expr) {
    if (expr.nvars() != w.length()) throw Error(ErrorKind::SizeMismatch, "one variable per word position");
    std::vector<LaurentPoly> images;
    for (int k = 1; k <= w.length(); ++k) images.push_back(pbw_expand(t, make_label(k, w.kmin(k))));
    return substitute(expr, images, true, true);
}

nlohmann::json plan_to_json(const MutationPlan& p) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : p.steps)
        steps.push_back({{"step", s.step},
                         {"vertex", s.vertex},
                         {"before", {s.before.b, s.before.a}},
                         {"after", {s.after.b, s.after.a}}});
    return {{"length", p.steps.size()}, {"grouped", p.grouped()}, {"steps", steps}};
}

nlohmann::json report_to_json(const MuReport& r) {
    nlohmann::json j = plan_to_json(r.plan);
    for (size_t i = 0; i < r.records.size(); ++i) {
        const auto& rec = r.records[i];
        auto& s = j["steps"][i];
        s["identity"] = rec.identity.str();
        s["exchange_matches"] = rec.exchange_matches;
        s["laurent_ok"] = rec.laurent_ok;
        s["delta_ok"] = rec.delta_ok;
        s["homogeneous"] = rec.homogeneous;
    }
    nlohmann::json fl = nlohmann::json::array();
    for (const auto& L : r.final_labels) fl.push_back({L.b, L.a});
    j["final_labels"] = fl;
    j["final_labels_ok"] = r.final_labels_ok;
    j["final_delta_ok"] = r.final_delta_ok;
    j["shape_ok"] = r.shape_ok;
    j["ok"] = r.ok();
    return j;
}

}  // namespace cw
