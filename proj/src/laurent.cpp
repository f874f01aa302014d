#include "cw/laurent.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "cw/errors.hpp"

namespace cw {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> s(names_.begin(), names_.end());
    if (s.size() != names_.size()) throw Error(ErrorKind::BadInput, "duplicate variable name");
}

std::shared_ptr<const VarTable> VarTable::numbered(const std::string& prefix, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return std::make_shared<const VarTable>(std::move(v));
}

int VarTable::index_of(const std::string& s) const {
    auto it = std::find(names_.begin(), names_.end(), s);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool same_vars(const Vars& a, const Vars& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names() == b->names();
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    long long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    return a > b;
}

LaurentPoly LaurentPoly::constant(const Vars& v, const mpz_class& c) {
    LaurentPoly p(v);
    p.add_term(Exponent(v->size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(const Vars& v, int idx, int power) {
    if (idx < 0 || idx >= v->size()) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
    Exponent e(v->size(), 0);
    e[idx] = power;
    return monomial(v, e);
}

LaurentPoly LaurentPoly::monomial(const Vars& v, const Exponent& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != v->size()) throw Error(ErrorKind::SizeMismatch, "exponent length");
    LaurentPoly p(v);
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1 || terms_.begin()->second != 1) return false;
    for (int x : terms_.begin()->first)
        if (x != 0) return false;
    return true;
}

Exponent LaurentPoly::min_exponents() const {
    Exponent m(nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

Exponent LaurentPoly::max_exponents() const {
    Exponent m(nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
        first = false;
    }
    return m;
}

bool LaurentPoly::is_polynomial() const {
    for (int x : min_exponents())
        if (x < 0) return false;
    return true;
}

mpz_class LaurentPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, ins] = terms_.emplace(e, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (!same_vars(vars_, o.vars_)) throw Error(ErrorKind::VarTableMismatch, "polynomials use different variables");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    return p += o;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    return p -= o;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same(o);
    LaurentPoly p(vars_);
    Exponent e(nvars());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return same_vars(vars_, o.vars_) && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::mul_monomial(const Exponent& m, const mpz_class& c) const {
    LaurentPoly p(vars_);
    for (const auto& [e, x] : terms_) {
        Exponent f = e;
        for (int i = 0; i < nvars(); ++i) f[i] += m[i];
        p.terms_.emplace_hint(p.terms_.end(), std::move(f), x * c);
    }
    if (c == 0) p.terms_.clear();
    return p;
}

LaurentPoly LaurentPoly::inverse_unit() const {
    if (!is_unit()) throw Error(ErrorKind::NonUnitNegativePower, "not a unit: " + str());
    Exponent e = terms_.begin()->first;
    for (auto& x : e) x = -x;
    return monomial(vars_, e, terms_.begin()->second);
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = false;
        std::ostringstream mon;
        for (int i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            if (has_var) mon << "*";
            mon << vars_->name(i);
            if (e[i] != 1) mon << "^" << e[i];
            has_var = true;
        }
        if (!has_var)
            os << a.get_str();
        else if (a == 1)
            os << mon.str();
        else
            os << a.get_str() << "*" << mon.str();
    }
    return os.str();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (!same_vars(a.vars(), b.vars())) throw Error(ErrorKind::VarTableMismatch, "exact_div on different variables");
    if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
    if (a.is_zero()) return a;
    const int n = a.nvars();
    // Move both into the polynomial ring with no monomial factor in b.
    // Then a Laurent quotient exists iff a polynomial quotient does.
    Exponent ma = a.min_exponents(), mb = b.min_exponents();
    Exponent na(n), nb(n);
    for (int i = 0; i < n; ++i) {
        na[i] = -ma[i];
        nb[i] = -mb[i];
    }
    LaurentPoly rem = a.mul_monomial(na);
    LaurentPoly bb = b.mul_monomial(nb);
    const Exponent lb = bb.terms().begin()->first;
    const mpz_class lc = bb.terms().begin()->second;
    LaurentPoly q(a.vars());
    Exponent t(n);
    while (!rem.is_zero()) {
        const auto& [lr, cr] = *rem.terms().begin();
        for (int i = 0; i < n; ++i) {
            t[i] = lr[i] - lb[i];
            if (t[i] < 0) throw Error(ErrorKind::NotDivisible, a.str() + " by " + b.str());
        }
        if (!mpz_divisible_p(cr.get_mpz_t(), lc.get_mpz_t()))
            throw Error(ErrorKind::NotDivisible, a.str() + " by " + b.str());
        mpz_class c = cr / lc;
        q.add_term(t, c);
        for (const auto& [e, x] : bb.terms()) {
            Exponent f(n);
            for (int i = 0; i < n; ++i) f[i] = e[i] + t[i];
            rem.add_term(f, -c * x);
        }
    }
    Exponent shift(n);
    for (int i = 0; i < n; ++i) shift[i] = ma[i] - mb[i];
    return q.mul_monomial(shift);
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images, bool rational,
                       bool require_polynomial) {
    if (static_cast<int>(images.size()) != p.nvars()) throw Error(ErrorKind::SizeMismatch, "one image per variable");
    if (images.empty()) throw Error(ErrorKind::SizeMismatch, "substitution needs at least one variable");
    const Vars& tv = images.front().vars();
    for (const auto& im : images)
        if (!same_vars(im.vars(), tv)) throw Error(ErrorKind::VarTableMismatch, "images use different variables");
    const int n = p.nvars();

    std::map<std::pair<int, int>, LaurentPoly> cache;
    auto power = [&](int i, int e) -> const LaurentPoly& {
        auto key = std::make_pair(i, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        LaurentPoly v = e >= 0 ? images[i].pow(e) : images[i].inverse_unit().pow(-e);
        return cache.emplace(key, std::move(v)).first->second;
    };

    Exponent shift(n, 0);
    if (rational) {
        Exponent m = p.min_exponents();
        for (int i = 0; i < n; ++i) shift[i] = m[i] < 0 ? -m[i] : 0;
    } else {
        Exponent m = p.min_exponents();
        for (int i = 0; i < n; ++i)
            if (m[i] < 0 && !images[i].is_unit())
                throw Error(ErrorKind::NonUnitNegativePower, "variable " + p.vars()->name(i) + " has a negative power");
    }
    LaurentPoly num(tv);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(tv, c);
        for (int i = 0; i < n; ++i)
            if (e[i] + shift[i] != 0) term *= power(i, e[i] + shift[i]);
        num += term;
    }
    LaurentPoly out = num;
    if (rational) {
        LaurentPoly den = LaurentPoly::constant(tv, 1);
        for (int i = 0; i < n; ++i)
            if (shift[i]) den *= power(i, shift[i]);
        try {
            out = exact_div(num, den);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotDivisible) throw;
            throw Error(ErrorKind::NotPolynomialAfterSubstitution, "rational substitution is not exact");
        }
    }
    if (require_polynomial && !out.is_polynomial())
        throw Error(ErrorKind::NotPolynomialAfterSubstitution, "result has negative exponents: " + out.str());
    return out;
}

std::optional<Vec> multidegree(const LaurentPoly& p, const std::vector<Vec>& grading) {
    if (static_cast<int>(grading.size()) != p.nvars()) throw Error(ErrorKind::SizeMismatch, "one degree per variable");
    std::optional<Vec> deg;
    for (const auto& [e, c] : p.terms()) {
        Vec d(grading.empty() ? 0 : grading[0].size(), 0);
        for (int i = 0; i < p.nvars(); ++i)
            for (size_t j = 0; j < d.size(); ++j) d[j] += static_cast<long long>(e[i]) * grading[i][j];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", c.get_str()}});
    return {{"vars", p.vars() ? p.vars()->names() : std::vector<std::string>{}}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    auto v = std::make_shared<const VarTable>(j.at("vars").get<std::vector<std::string>>());
    return laurent_from_json(j, v);
}

LaurentPoly laurent_from_json(const nlohmann::json& j, const Vars& v) {
    try {
        if (j.at("vars").get<std::vector<std::string>>() != v->names())
            throw Error(ErrorKind::VarTableMismatch, "variable names differ");
        LaurentPoly p(v);
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exp").get<Exponent>();
            if (static_cast<int>(e.size()) != v->size()) throw Error(ErrorKind::SizeMismatch, "exponent length");
            const auto& cj = t.at("coef");
            mpz_class c = cj.is_string() ? mpz_class(cj.get<std::string>()) : mpz_class(cj.get<long>());
            p.add_term(e, c);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadInput, e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorKind::BadInput, "bad coefficient");
    }
}

}  // namespace cw
