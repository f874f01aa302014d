#include "cw/cartan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "cw/errors.hpp"

namespace cw {

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> c) : n_(static_cast<int>(c.size())), c_(std::move(c)) {
    if (n_ == 0) throw Error(ErrorKind::BadInput, "empty Cartan matrix");
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(c_[i].size()) != n_) throw Error(ErrorKind::BadInput, "Cartan matrix not square");
        if (c_[i][i] != 2) throw Error(ErrorKind::BadInput, "diagonal entry must be 2");
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            if (c_[i][j] > 0 || c_[i][j] != c_[j][i])
                throw Error(ErrorKind::BadInput, "off-diagonal entries must be symmetric and <= 0");
        }
    }
}

CartanMatrix CartanMatrix::from_edges(int n, const std::vector<std::array<int, 3>>& edges) {
    if (n <= 0) throw Error(ErrorKind::BadInput, "rank must be positive");
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (const auto& e : edges) {
        int i = e[0], j = e[1], m = e[2];
        if (i < 1 || i > n || j < 1 || j > n) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
        if (i == j) throw Error(ErrorKind::BadInput, "loops are not allowed");
        if (m < 1) throw Error(ErrorKind::BadInput, "edge multiplicity must be >= 1");
        c[i - 1][j - 1] -= m;
        c[j - 1][i - 1] -= m;
    }
    return CartanMatrix(std::move(c));
}

void CartanMatrix::check_letter(int i) const {
    if (i < 1 || i > n_) throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(i) + " out of range");
}

Weight Weight::fundamental(int n, int j) {
    Weight w{Vec(n, 0), Vec(n, 0)};
    w.f[j - 1] = 1;
    return w;
}

Vec simple_root(int n, int i) {
    Vec d(n, 0);
    d[i - 1] = 1;
    return d;
}

long long height(const Vec& d) { return std::accumulate(d.begin(), d.end(), 0LL); }

bool is_positive(const Vec& d) {
    bool nz = false;
    for (auto x : d) {
        if (x < 0) return false;
        if (x != 0) nz = true;
    }
    return nz;
}

Vec reflect_root(const CartanMatrix& C, int i, const Vec& d) {
    C.check_letter(i);
    if (static_cast<int>(d.size()) != C.rank()) throw Error(ErrorKind::SizeMismatch, "root has wrong length");
    long long p = 0;
    for (int j = 1; j <= C.rank(); ++j) p += d[j - 1] * C.c(j, i);
    Vec out = d;
    out[i - 1] -= p;
    return out;
}

long long pairing(const CartanMatrix& C, const Weight& w, int i) {
    C.check_letter(i);
    long long p = w.f[i - 1];
    for (int j = 1; j <= C.rank(); ++j) p += w.r[j - 1] * C.c(j, i);
    return p;
}

Weight reflect_weight(const CartanMatrix& C, int i, const Weight& w) {
    Weight out = w;
    out.r[i - 1] -= pairing(C, w, i);
    return out;
}

ReducedWord::ReducedWord(int n, std::vector<int> printed) : n_(n), r_(static_cast<int>(printed.size())), printed_(std::move(printed)) {
    let_.assign(r_ + 1, 0);
    for (int k = 1; k <= r_; ++k) {
        int i = printed_[r_ - k];
        if (i < 1 || i > n_) throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(i) + " out of range");
        let_[k] = i;
    }
    occ_.assign(n_ + 1, {});
    minus_.assign(r_ + 1, 0);
    plus_.assign(r_ + 1, r_ + 1);
    std::vector<int> last(n_ + 1, 0);
    for (int k = 1; k <= r_; ++k) {
        int i = let_[k];
        occ_[i].push_back(k);
        minus_[k] = last[i];
        if (last[i] > 0) plus_[last[i]] = k;
        last[i] = k;
    }
}

void ReducedWord::check_position(int k) const {
    if (k < 1 || k > r_) throw Error(ErrorKind::IndexOutOfRange, "position " + std::to_string(k) + " out of range");
}

int ReducedWord::letter(int k) const {
    check_position(k);
    return let_[k];
}
int ReducedWord::minus(int k) const {
    check_position(k);
    return minus_[k];
}
int ReducedWord::plus(int k) const {
    check_position(k);
    return plus_[k];
}
int ReducedWord::kmin(int k) const { return occ_[letter(k)].front(); }
int ReducedWord::kmax(int k) const { return occ_[letter(k)].back(); }

int ReducedWord::count_before(int k, int j) const {
    if (j < 1 || j > n_) throw Error(ErrorKind::IndexOutOfRange, "letter out of range");
    const auto& o = occ_[j];
    return static_cast<int>(std::lower_bound(o.begin(), o.end(), k) - o.begin());
}

int ReducedWord::occurrence(int j, int m) const {
    if (j < 1 || j > n_) throw Error(ErrorKind::IndexOutOfRange, "letter out of range");
    const auto& o = occ_[j];
    if (m < 0) return 0;
    return m < static_cast<int>(o.size()) ? o[m] : r_ + 1;
}

namespace {

std::vector<Vec> betas_unchecked(const CartanMatrix& C, const ReducedWord& w) {
    std::vector<Vec> out;
    for (int k = 1; k <= w.length(); ++k) {
        Vec b = simple_root(C.rank(), w.letter(k));
        for (int j = k - 1; j >= 1; --j) b = reflect_root(C, w.letter(j), b);
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace

bool is_reduced(const CartanMatrix& C, const std::vector<int>& printed) {
    ReducedWord w(C.rank(), printed);
    for (const auto& b : betas_unchecked(C, w))
        if (!is_positive(b)) return false;
    return true;
}

ReducedWord make_reduced(const CartanMatrix& C, const std::vector<int>& printed) {
    ReducedWord w(C.rank(), printed);
    auto bs = betas_unchecked(C, w);
    for (size_t k = 0; k < bs.size(); ++k)
        if (!is_positive(bs[k]))
            throw Error(ErrorKind::NotReduced, "beta(" + std::to_string(k + 1) + ") is not a positive root");
    return w;
}

std::vector<Vec> beta_sequence(const CartanMatrix& C, const ReducedWord& w) {
    auto bs = betas_unchecked(C, w);
    for (size_t k = 0; k < bs.size(); ++k)
        if (!is_positive(bs[k]))
            throw Error(ErrorKind::NotReduced, "beta(" + std::to_string(k + 1) + ") is not a positive root");
    return bs;
}

std::set<Vec> real_roots_up_to(const CartanMatrix& C, int height_bound) {
    std::set<Vec> seen;
    std::deque<Vec> todo;
    for (int i = 1; i <= C.rank(); ++i) {
        seen.insert(simple_root(C.rank(), i));
        todo.push_back(simple_root(C.rank(), i));
    }
    while (!todo.empty()) {
        Vec a = todo.front();
        todo.pop_front();
        for (int i = 1; i <= C.rank(); ++i) {
            Vec b = reflect_root(C, i, a);
            if (!is_positive(b) || height(b) > height_bound) continue;
            if (seen.insert(b).second) todo.push_back(b);
        }
    }
    return seen;
}

bool is_bracket_closed(const std::set<Vec>& roots, const std::function<bool(const Vec&)>& ambient) {
    for (auto it = roots.begin(); it != roots.end(); ++it) {
        for (auto jt = it; jt != roots.end(); ++jt) {
            if (it == jt) continue;
            Vec s = *it;
            for (size_t q = 0; q < s.size(); ++q) s[q] += (*jt)[q];
            if (ambient(s) && !roots.count(s)) return false;
        }
    }
    return true;
}

bool is_bracket_closed(const CartanMatrix& C, const std::set<Vec>& roots, int height_bound) {
    for (const auto& a : roots) {
        if (!is_positive(a)) throw Error(ErrorKind::BadInput, "bracket closure needs positive roots");
        // sums reach twice the largest height
        if (2 * height(a) > height_bound)
            throw Error(ErrorKind::HeightBoundExceeded, "root height too large for the ambient bound");
    }
    auto amb = real_roots_up_to(C, height_bound);
    return is_bracket_closed(roots, [&](const Vec& v) { return amb.count(v) > 0; });
}

Vec dim_V(const CartanMatrix& C, const ReducedWord& w, int k) {
    w.check_position(k);
    Weight lam = Weight::fundamental(C.rank(), w.letter(k));
    for (int j = k; j >= 1; --j) lam = reflect_weight(C, w.letter(j), lam);
    Vec d(C.rank());
    for (int i = 0; i < C.rank(); ++i) d[i] = -lam.r[i];
    return d;
}

ReducedWord prefix(const ReducedWord& w, int k) {
    if (k < 0 || k > w.length()) throw Error(ErrorKind::IndexOutOfRange, "prefix length out of range");
    const auto& p = w.printed();
    return ReducedWord(w.rank(), std::vector<int>(p.end() - k, p.end()));
}

Vec b_vector(const CartanMatrix& C, const ReducedWord& w, const Weight& lambda) {
    for (int i = 1; i <= C.rank(); ++i)
        if (pairing(C, lambda, i) < 0) throw Error(ErrorKind::NonDominant, "weight is not dominant");
    Vec b(w.length(), 0);
    Weight mu = lambda;
    for (int j = w.length(); j >= 1; --j) {
        b[j - 1] = pairing(C, mu, w.letter(j));
        if (b[j - 1] < 0) throw Error(ErrorKind::NotReduced, "negative b entry, word is not reduced");
        mu = reflect_weight(C, w.letter(j), mu);
    }
    return b;
}

void check_orientation(const CartanMatrix& C, const Orientation& Q) {
    if (Q.n != C.rank()) throw Error(ErrorKind::OrientationInconsistent, "orientation has the wrong vertex count");
    std::map<std::pair<int, int>, int> m;
    for (const auto& a : Q.arrows) {
        if (a[0] < 1 || a[0] > Q.n || a[1] < 1 || a[1] > Q.n || a[0] == a[1] || a[2] < 1)
            throw Error(ErrorKind::OrientationInconsistent, "bad arrow");
        m[{std::min(a[0], a[1]), std::max(a[0], a[1])}] += a[2];
    }
    for (int i = 1; i <= C.rank(); ++i)
        for (int j = i + 1; j <= C.rank(); ++j) {
            auto it = m.find({i, j});
            int got = it == m.end() ? 0 : it->second;
            if (got != C.q(i, j))
                throw Error(ErrorKind::OrientationInconsistent, "arrow count differs from the Cartan matrix");
        }
}

Orientation default_orientation(const CartanMatrix& C) {
    Orientation Q;
    Q.n = C.rank();
    for (int i = 1; i <= C.rank(); ++i)
        for (int j = i + 1; j <= C.rank(); ++j)
            if (C.q(i, j) > 0) Q.arrows.push_back({i, j, C.q(i, j)});
    return Q;
}

long long euler_form(const Orientation& Q, const Vec& d, const Vec& e) {
    if (static_cast<int>(d.size()) != Q.n || static_cast<int>(e.size()) != Q.n)
        throw Error(ErrorKind::SizeMismatch, "vector length differs from rank");
    long long s = 0;
    for (int i = 0; i < Q.n; ++i) s += d[i] * e[i];
    for (const auto& a : Q.arrows) s -= static_cast<long long>(a[2]) * d[a[0] - 1] * e[a[1] - 1];
    return s;
}

long long sym_form(const CartanMatrix& C, const Vec& d, const Vec& e) {
    long long s = 0;
    for (int i = 1; i <= C.rank(); ++i)
        for (int j = 1; j <= C.rank(); ++j) s += static_cast<long long>(C.c(i, j)) * d[i - 1] * e[j - 1];
    return s;
}

Problem parse_problem(const nlohmann::json& j) {
    try {
        Problem p;
        int n = j.at("rank").get<int>();
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                int m = e.size() > 2 ? e.at(2).get<int>() : 1;
                p.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), m});
            }
        p.cartan = CartanMatrix::from_edges(n, p.edges);
        if (j.contains("word")) p.word = j.at("word").get<std::vector<int>>();
        for (int i : p.word) p.cartan.check_letter(i);
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadInput, e.what());
    }
}

nlohmann::json problem_to_json(const Problem& p) {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& x : p.edges) e.push_back({x[0], x[1], x[2]});
    return {{"rank", p.cartan.rank()}, {"edges", e}, {"word", p.word}};
}

}  // namespace cw
