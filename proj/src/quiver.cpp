#include "cw/quiver.hpp"

#include <algorithm>
#include <map>

#include "cw/errors.hpp"

namespace cw {

int Quiver::frozen_count() const {
    int c = 0;
    for (int k = 1; k <= r; ++k) c += frozen[k] ? 1 : 0;
    return c;
}

std::vector<int> Quiver::mutable_vertices() const {
    std::vector<int> v;
    for (int k = 1; k <= r; ++k)
        if (!frozen[k]) v.push_back(k);
    return v;
}

std::vector<int> Quiver::frozen_vertices() const {
    std::vector<int> v;
    for (int k = 1; k <= r; ++k)
        if (frozen[k]) v.push_back(k);
    return v;
}

std::vector<Arrow> Quiver::normalized() const {
    std::map<std::pair<int, int>, int> m;
    for (const auto& a : arrows) m[{a.source, a.target}] += a.mult;
    std::vector<Arrow> out;
    for (const auto& [st, c] : m)
        if (c) out.push_back({st.first, st.second, c});
    return out;
}

std::vector<int> ExchangeMatrix::mutable_vertices() const {
    std::vector<int> v;
    for (int k = 1; k <= r(); ++k)
        if (!frozen[k]) v.push_back(k);
    return v;
}

IntMatrix ExchangeMatrix::extended() const {
    auto mv = mutable_vertices();
    IntMatrix out(r(), std::vector<long long>(mv.size()));
    for (int i = 1; i <= r(); ++i)
        for (size_t j = 0; j < mv.size(); ++j) out[i - 1][j] = at(i, mv[j]);
    return out;
}

IntMatrix ExchangeMatrix::principal() const {
    auto mv = mutable_vertices();
    IntMatrix out(mv.size(), std::vector<long long>(mv.size()));
    for (size_t i = 0; i < mv.size(); ++i)
        for (size_t j = 0; j < mv.size(); ++j) out[i][j] = at(mv[i], mv[j]);
    return out;
}

bool ExchangeMatrix::principal_skew_symmetric() const {
    auto p = principal();
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j)
            if (p[i][j] != -p[j][i]) return false;
    return true;
}

Quiver ExchangeMatrix::quiver() const {
    Quiver Q;
    Q.r = r();
    Q.frozen = frozen;
    for (int i = 1; i <= r(); ++i)
        for (int j = 1; j <= r(); ++j)
            if (at(j, i) > 0 && i != j) Q.arrows.push_back({i, j, static_cast<int>(at(j, i))});
    return Q;
}

Quiver gamma_i(const CartanMatrix& C, const ReducedWord& w) {
    const int r = w.length();
    Quiver Q;
    Q.r = r;
    Q.frozen.assign(r + 1, false);
    for (int k = 1; k <= r; ++k) Q.frozen[k] = w.is_frozen(k);
    for (int s = 1; s <= r; ++s) {
        for (int t = s + 1; t <= r; ++t) {
            int q = C.q(w.letter(s), w.letter(t));
            if (q > 0 && t < w.plus(s) && w.plus(s) <= w.plus(t)) Q.arrows.push_back({s, t, q});
        }
        if (w.minus(s) > 0) Q.arrows.push_back({s, w.minus(s), 1});
    }
    std::map<std::pair<int, int>, int> seen;
    for (const auto& a : Q.arrows) seen[{a.source, a.target}] += a.mult;
    for (const auto& [st, c] : seen)
        if (seen.count({st.second, st.first}) && !Q.frozen[st.first] && !Q.frozen[st.second])
            throw Error(ErrorKind::Mismatch, "2-cycle between mutable vertices in Gamma_i");
    return Q;
}

ExchangeMatrix b_matrix(const Quiver& Q) {
    ExchangeMatrix B;
    B.b.assign(Q.r, std::vector<long long>(Q.r, 0));
    B.frozen = Q.frozen;
    if (static_cast<int>(B.frozen.size()) != Q.r + 1) B.frozen.assign(Q.r + 1, false);
    for (const auto& a : Q.arrows) {
        if (a.source < 1 || a.source > Q.r || a.target < 1 || a.target > Q.r || a.source == a.target)
            throw Error(ErrorKind::BadInput, "bad arrow");
        B.b[a.target - 1][a.source - 1] += a.mult;
        B.b[a.source - 1][a.target - 1] -= a.mult;
    }
    return B;
}

IntMatrix fz_mutate(const IntMatrix& B, int k) {
    const int r = static_cast<int>(B.size());
    const int kk = k - 1;
    IntMatrix out = B;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < static_cast<int>(B[i].size()); ++j) {
            if (i == kk || j == kk) {
                out[i][j] = -B[i][j];
            } else {
                long long bik = B[i][kk], bkj = kk < static_cast<int>(B[kk].size()) ? B[kk][j] : 0;
                out[i][j] = B[i][j] + (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
            }
        }
    return out;
}

ExchangeMatrix matrix_mutate(const ExchangeMatrix& B, int k) {
    if (k < 1 || k > B.r()) throw Error(ErrorKind::IndexOutOfRange, "mutation index out of range");
    if (B.frozen[k]) throw Error(ErrorKind::FrozenIndex, "cannot mutate at frozen vertex " + std::to_string(k));
    ExchangeMatrix out = B;
    out.b = fz_mutate(B.b, k);
    return out;
}

CoefficientMode parse_mode(const std::string& s) {
    if (s == "frozen") return CoefficientMode::Frozen;
    if (s == "invertible") return CoefficientMode::Invertible;
    if (s == "specialized") return CoefficientMode::Specialized;
    throw Error(ErrorKind::BadInput, "unknown mode " + s);
}

const char* mode_name(CoefficientMode m) {
    switch (m) {
        case CoefficientMode::Frozen: return "frozen";
        case CoefficientMode::Invertible: return "invertible";
        case CoefficientMode::Specialized: return "specialized";
    }
    return "frozen";
}

Seed initial_seed(const ExchangeMatrix& B, const std::string& prefix, CoefficientMode mode) {
    Seed s;
    s.B = B;
    s.mode = mode;
    auto v = VarTable::numbered(prefix, B.r());
    for (int k = 0; k < B.r(); ++k) s.cluster.push_back(LaurentPoly::variable(v, k));
    return s;
}

ExchangeMonomials exchange_monomials(const ExchangeMatrix& B, int k) {
    ExchangeMonomials m;
    for (int i = 1; i <= B.r(); ++i) {
        long long b = B.at(i, k);
        if (b > 0) m.positive.push_back({i, b});
        if (b < 0) m.negative.push_back({i, -b});
    }
    return m;
}

Seed seed_mutate(const Seed& s, int k) {
    if (k < 1 || k > s.B.r()) throw Error(ErrorKind::IndexOutOfRange, "mutation index out of range");
    if (s.B.frozen[k]) throw Error(ErrorKind::FrozenIndex, "cannot mutate at frozen vertex " + std::to_string(k));
    auto m = exchange_monomials(s.B, k);
    LaurentPoly p = LaurentPoly::constant(s.vars(), 1), q = LaurentPoly::constant(s.vars(), 1);
    for (auto [i, e] : m.positive) p *= s.var(i).pow(static_cast<unsigned>(e));
    for (auto [i, e] : m.negative) q *= s.var(i).pow(static_cast<unsigned>(e));
    Seed out = s;
    out.cluster[k - 1] = exact_div(p + q, s.var(k));
    out.B = matrix_mutate(s.B, k);
    out.path.push_back(k);
    if (s.mode != CoefficientMode::Invertible) {
        Exponent mn = out.cluster[k - 1].min_exponents();
        for (int i = 1; i <= s.B.r(); ++i)
            if (s.B.frozen[i] && mn[i - 1] < 0)
                throw Error(ErrorKind::LaurentViolation, "frozen variable in a denominator after mutation at " +
                                                             std::to_string(k));
    }
    return out;
}

Seed seed_mutate_path(const Seed& s, const std::vector<int>& path) {
    Seed out = s;
    for (int k : path) out = seed_mutate(out, k);
    return out;
}

LaurentPoly specialize(const Seed& s, const LaurentPoly& p) {
    std::vector<LaurentPoly> images;
    for (int i = 1; i <= s.B.r(); ++i)
        images.push_back(s.B.frozen[i] ? LaurentPoly::constant(p.vars(), 1) : LaurentPoly::variable(p.vars(), i - 1));
    return substitute(p, images);
}

LaurentPoly output_variable(const Seed& s, int k) {
    return s.mode == CoefficientMode::Specialized ? specialize(s, s.var(k)) : s.var(k);
}

std::vector<long long> denominator_vector(const Seed& s, int position) {
    if (position < 1 || position > s.B.r()) throw Error(ErrorKind::IndexOutOfRange, "position out of range");
    Exponent m = s.var(position).min_exponents();
    std::vector<long long> d;
    for (int i = 1; i <= s.B.r(); ++i)
        if (!s.B.frozen[i]) d.push_back(-static_cast<long long>(m[i - 1]));
    return d;
}

std::vector<long long> g_vector_initial(const std::vector<long long>& d, const IntMatrix& A) {
    const int n = static_cast<int>(A.size());
    if (static_cast<int>(d.size()) != n) throw Error(ErrorKind::SizeMismatch, "vector length");
    std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(A[i].size()) != n) throw Error(ErrorKind::SizeMismatch, "matrix not square");
        for (int j = 0; j < n; ++j) M[i][j] = mpq_class(static_cast<long>(A[i][j]));
        M[i][n] = mpq_class(static_cast<long>(d[i]));
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) throw Error(ErrorKind::NonIntegral, "matrix is singular");
        std::swap(M[p], M[c]);
        for (int i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0) continue;
            mpq_class f = M[i][c] / M[c][c];
            for (int j = c; j <= n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    std::vector<long long> g(n);
    for (int i = 0; i < n; ++i) {
        mpq_class x = M[i][n] / M[i][i];
        if (x.get_den() != 1) throw Error(ErrorKind::NonIntegral, "g-vector is not integral");
        g[i] = x.get_num().get_si();
    }
    return g;
}

AcyclicSetup acyclic_double(const CartanMatrix& C, const Orientation& Q) {
    check_orientation(C, Q);
    const int n = C.rank();
    for (const auto& a : Q.arrows)
        if (a[0] > a[1]) throw Error(ErrorKind::NotAcyclic, "arrows must go from smaller to larger vertex");
    bool linear = n >= 1;
    for (int i = 1; i <= n && linear; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (C.q(i, j) != (j == i + 1 ? 1 : 0)) {
                linear = false;
                break;
            }
    if (linear) throw Error(ErrorKind::LinearAnCaveat, "linearly oriented type A quiver");
    std::vector<int> word;
    for (int rep = 0; rep < 2; ++rep)
        for (int i = n; i >= 1; --i) word.push_back(i);
    AcyclicSetup s{make_reduced(C, word), {}};
    s.seed = initial_seed(b_matrix(gamma_i(C, s.word)));
    return s;
}

Seed y_dagger(const Seed& s, int n) {
    Seed out = s;
    for (int k = 1; k <= n; ++k) out = seed_mutate(out, k);
    return out;
}

bool CanonicalRegistry::insert(const std::string& key) {
    std::lock_guard<std::mutex> g(mu_);
    return keys_.insert(key).second;
}

size_t CanonicalRegistry::size() const {
    std::lock_guard<std::mutex> g(mu_);
    return keys_.size();
}

std::string canonical_form(const LaurentPoly& p) { return to_json(p).dump(); }

nlohmann::json quiver_to_json(const Quiver& Q) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : Q.normalized()) arrows.push_back({a.source, a.target, a.mult});
    return {{"vertices", Q.r}, {"frozen", Q.frozen_vertices()}, {"arrows", arrows}};
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : m) j.push_back(row);
    return j;
}

nlohmann::json seed_to_json(const Seed& s) {
    nlohmann::json cl = nlohmann::json::array();
    for (int k = 1; k <= s.B.r(); ++k) cl.push_back(to_json(output_variable(s, k)));
    std::vector<int> fr;
    for (int k = 1; k <= s.B.r(); ++k)
        if (s.B.frozen[k]) fr.push_back(k);
    return {{"matrix", matrix_to_json(s.B.b)}, {"frozen", fr}, {"cluster", cl}, {"provenance", s.path},
            {"mode", mode_name(s.mode)}};
}

}  // namespace cw
