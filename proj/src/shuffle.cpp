#include "cw/shuffle.hpp"

#include <functional>

#include "cw/errors.hpp"

namespace cw {

WordSum WordSum::word(const Word& w, const mpz_class& c) {
    WordSum s;
    s.add(w, c);
    return s;
}

mpz_class WordSum::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void WordSum::add(const Word& w, const mpz_class& c) {
    if (c == 0) return;
    auto [it, ins] = terms_.emplace(w, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WordSum& WordSum::operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordSum WordSum::operator+(const WordSum& o) const {
    WordSum s = *this;
    return s += o;
}

WordSum WordSum::operator*(const mpz_class& c) const {
    WordSum s;
    if (c == 0) return s;
    s.terms_ = terms_;
    for (auto& [w, x] : s.terms_) x *= c;
    return s;
}

WordSum WordSum::divide_exact(const mpz_class& d) const {
    WordSum s = *this;
    for (auto& [w, x] : s.terms_) {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
            throw Error(ErrorKind::DividedPowerNotIntegral, "coefficient " + x.get_str() + " not divisible by " + d.get_str());
        x /= d;
    }
    return s;
}

std::optional<Vec> WordSum::content(int n) const {
    std::optional<Vec> c;
    for (const auto& [w, x] : terms_) {
        Vec v(n, 0);
        for (int l : w) v[l - 1] += 1;
        if (!c)
            c = v;
        else if (*c != v)
            return std::nullopt;
    }
    return c;
}

namespace {

void shuffle_words(const Word& a, const Word& b, const mpz_class& c, WordSum& out) {
    Word cur;
    cur.reserve(a.size() + b.size());
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == a.size() && j == b.size()) {
            out.add(cur, c);
            return;
        }
        if (i < a.size()) {
            cur.push_back(a[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < b.size()) {
            cur.push_back(b[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

WordSum shuffle(const WordSum& u, const WordSum& v) {
    WordSum out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) shuffle_words(a, b, ca * cb, out);
    return out;
}

WordSum rho_f(const CartanMatrix& C, const Weight& lambda, int i, const WordSum& u) {
    C.check_letter(i);
    const long long base = pairing(C, lambda, i);
    WordSum out;
    for (const auto& [w, c] : u.terms()) {
        long long p = base;  // (lambda - alpha_{j_1} - ... - alpha_{j_l})(alpha_i^vee)
        for (size_t l = 0; l <= w.size(); ++l) {
            if (l > 0) p -= C.c(w[l - 1], i);
            if (p != 0) {
                Word nw;
                nw.reserve(w.size() + 1);
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(l));
                nw.push_back(i);
                nw.insert(nw.end(), w.begin() + static_cast<long>(l), w.end());
                out.add(nw, c * static_cast<long>(p));
            }
        }
    }
    return out;
}

WordSum rho_e(const CartanMatrix& C, const Weight&, int i, const WordSum& u) {
    C.check_letter(i);
    WordSum out;
    for (const auto& [w, c] : u.terms())
        if (!w.empty() && w.back() == i) out.add(Word(w.begin(), w.end() - 1), c);
    return out;
}

WordSum rho_f_divided(const CartanMatrix& C, const Weight& lambda, int i, long long b, const WordSum& u) {
    WordSum v = u;
    mpz_class fact = 1;
    for (long long m = 1; m <= b; ++m) {
        v = rho_f(C, lambda, i, v);
        fact *= static_cast<long>(m);
    }
    return v.divide_exact(fact);
}

WordSum g_V(const CartanMatrix& C, const ReducedWord& w, int k) {
    w.check_position(k);
    ReducedWord pre = prefix(w, k);
    Weight lam = Weight::fundamental(C.rank(), w.letter(k));
    Vec b = b_vector(C, pre, lam);
    WordSum g = WordSum::empty_word();
    for (int j = k; j >= 1; --j) g = rho_f_divided(C, lam, w.letter(j), b[j - 1], g);
    return g;
}

Vars t_vars(int p) { return VarTable::numbered("t", p); }

LaurentPoly phi_eval(const WordSum& g, const std::vector<int>& pattern) {
    const int p = static_cast<int>(pattern.size());
    if (p == 0) throw Error(ErrorKind::BadInput, "empty pattern");
    Vars tv = t_vars(p);
    LaurentPoly out(tv);
    Exponent a(p, 0);
    // pattern[idx] carries the variable t_{p - idx}
    for (const auto& [w, c] : g.terms()) {
        std::function<void(size_t, int)> rec = [&](size_t pos, int idx) {
            if (pos == w.size()) {
                mpz_class den = 1;
                for (int q = 0; q < p; ++q)
                    for (int m = 2; m <= a[q]; ++m) den *= m;
                if (!mpz_divisible_p(c.get_mpz_t(), den.get_mpz_t()))
                    throw Error(ErrorKind::NonIntegralCoefficient, "coefficient not divisible by the factorials");
                out.add_term(a, c / den);
                return;
            }
            for (int j = idx; j < p; ++j) {
                if (pattern[j] != w[pos]) continue;
                // block for pattern[j] is the maximal run starting here, of every length
                int var = p - 1 - j;
                size_t e = pos;
                while (e < w.size() && w[e] == pattern[j]) {
                    ++e;
                    a[var] = static_cast<int>(e - pos);
                    rec(e, j + 1);
                }
                a[var] = 0;
            }
        };
        rec(0, 0);
    }
    return out;
}

LaurentPoly euler_of_reachable(const LaurentPoly& expr, const CartanMatrix& C, const ReducedWord& w,
                               const std::vector<int>& pattern) {
    if (expr.nvars() != w.length()) throw Error(ErrorKind::SizeMismatch, "one variable per word position");
    std::vector<LaurentPoly> images;
    for (int k = 1; k <= w.length(); ++k) images.push_back(phi_eval(g_V(C, w, k), pattern));
    return substitute(expr, images, true, true);
}

nlohmann::json to_json(const WordSum& g) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [w, c] : g.terms()) t.push_back({{"word", w}, {"coef", c.get_str()}});
    return {{"terms", t}};
}

WordSum wordsum_from_json(const nlohmann::json& j) {
    try {
        WordSum g;
        for (const auto& t : j.at("terms")) {
            const auto& cj = t.at("coef");
            g.add(t.at("word").get<Word>(), cj.is_string() ? mpz_class(cj.get<std::string>()) : mpz_class(cj.get<long>()));
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadInput, e.what());
    }
}

}  // namespace cw
