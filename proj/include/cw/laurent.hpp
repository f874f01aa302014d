#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "cw/cartan.hpp"

namespace cw {

using Exponent = std::vector<int>;

class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);
    // prefix1, ..., prefixN
    static std::shared_ptr<const VarTable> numbered(const std::string& prefix, int n);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& s) const;

private:
    std::vector<std::string> names_;
};

using Vars = std::shared_ptr<const VarTable>;

bool same_vars(const Vars& a, const Vars& b);

// grlex, larger first: iteration starts at the leading term
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class LaurentPoly {
public:
    using Terms = std::map<Exponent, mpz_class, GrlexGreater>;

    LaurentPoly() = default;
    explicit LaurentPoly(Vars v) : vars_(std::move(v)) {}

    static LaurentPoly constant(const Vars& v, const mpz_class& c);
    static LaurentPoly variable(const Vars& v, int idx, int power = 1);
    static LaurentPoly monomial(const Vars& v, const Exponent& e, const mpz_class& c = 1);

    const Vars& vars() const { return vars_; }
    int nvars() const { return vars_ ? vars_->size() : 0; }
    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_unit() const;
    bool is_one() const;
    // minimum exponent of every variable (0 for the zero polynomial)
    Exponent min_exponents() const;
    Exponent max_exponents() const;
    bool is_polynomial() const;
    mpz_class coeff(const Exponent& e) const;

    void add_term(const Exponent& e, const mpz_class& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned e) const;
    LaurentPoly mul_monomial(const Exponent& e, const mpz_class& c = 1) const;
    // inverse of a unit monomial
    LaurentPoly inverse_unit() const;

    std::string str() const;

private:
    void check_same(const LaurentPoly& o) const;

    Vars vars_;
    Terms terms_;
};

// q with q * b == a, or throws NotDivisible
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// images[i] is the image of variable i; all images share one target table.
// Negative powers need unit images unless rational = true, in which case the
// numerator/denominator quotient must be exact.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images, bool rational = false,
                       bool require_polynomial = false);

// common graded degree of all terms, nullopt if inhomogeneous or zero
std::optional<Vec> multidegree(const LaurentPoly& p, const std::vector<Vec>& grading);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);
// reads a polynomial against an existing table (names must match)
LaurentPoly laurent_from_json(const nlohmann::json& j, const Vars& v);

}  // namespace cw
