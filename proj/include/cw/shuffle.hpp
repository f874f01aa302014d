#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "cw/cartan.hpp"
#include "cw/laurent.hpp"

namespace cw {

using Word = std::vector<int>;

class WordSum {
public:
    using Terms = std::map<Word, mpz_class>;

    WordSum() = default;
    static WordSum word(const Word& w, const mpz_class& c = 1);
    static WordSum empty_word() { return word({}); }

    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(const Word& w) const;
    void add(const Word& w, const mpz_class& c);

    WordSum& operator+=(const WordSum& o);
    WordSum operator+(const WordSum& o) const;
    WordSum operator*(const mpz_class& c) const;
    bool operator==(const WordSum& o) const { return terms_ == o.terms_; }
    // exact division of every coefficient, throws DividedPowerNotIntegral
    WordSum divide_exact(const mpz_class& d) const;

    // letter content of every word, nullopt if the words disagree
    std::optional<Vec> content(int n) const;

private:
    Terms terms_;
};

WordSum shuffle(const WordSum& u, const WordSum& v);
WordSum rho_f(const CartanMatrix& C, const Weight& lambda, int i, const WordSum& u);
WordSum rho_e(const CartanMatrix& C, const Weight& lambda, int i, const WordSum& u);
// rho_lambda(f_i^{(b)}) applied to u
WordSum rho_f_divided(const CartanMatrix& C, const Weight& lambda, int i, long long b, const WordSum& u);

WordSum g_V(const CartanMatrix& C, const ReducedWord& w, int k);

// pattern in printed order (j_p, ..., j_1); result in variables t1..tp
LaurentPoly phi_eval(const WordSum& g, const std::vector<int>& pattern);
Vars t_vars(int p);

// y_k -> phi_eval(g_{V_k}, pattern), rational mode, polynomial asserted
LaurentPoly euler_of_reachable(const LaurentPoly& expr, const CartanMatrix& C, const ReducedWord& w,
                               const std::vector<int>& pattern);

nlohmann::json to_json(const WordSum& g);
WordSum wordsum_from_json(const nlohmann::json& j);

}  // namespace cw
