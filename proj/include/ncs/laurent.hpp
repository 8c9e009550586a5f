#pragma once

#include <map>
#include <optional>
#include <string>

#include "ncs/rational.hpp"

namespace ncs {

// The three coefficient-field parameters. q and p are Laurent variables
// (negative exponents stored directly); s is an ordinary polynomial variable.
enum class Param : int { q = 0, p = 1, s = 2 };

// Exponent vector of one monomial q^eq * p^ep * s^es, es >= 0.
struct Mono {
    int eq = 0;
    int ep = 0;
    int es = 0;

    friend auto operator<=>(const Mono&, const Mono&) = default;

    int total_degree() const { return eq + ep + es; }
    Mono operator+(const Mono& o) const { return {eq + o.eq, ep + o.ep, es + o.es}; }
    Mono operator-(const Mono& o) const { return {eq - o.eq, ep - o.ep, es - o.es}; }
};

// deglex with q > p > s; used only to pick canonical leading terms.
bool mono_deglex_less(const Mono& a, const Mono& b);

// Element of Q[q^{±1}, p^{±1}, s]: finite map exponent vector -> rational.
// No stored coefficient is zero; equality is map equality (canonical form).
class LaurentPoly {
public:
    using TermMap = std::map<Mono, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    static LaurentPoly variable(Param v, int power = 1);
    static LaurentPoly monomial(const Mono& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    const TermMap& terms() const { return terms_; }
    Rational constant_coeff() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly pow(int e) const; // e >= 0

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Smallest exponent of v over all terms (0 for the zero polynomial).
    int min_exp(Param v) const;
    int max_exp(Param v) const;
    bool depends_on(Param v) const { return min_exp(v) != 0 || max_exp(v) != 0; }

    // Multiply every term by q^eq p^ep s^es (es shifts may be negative only
    // when the caller knows the result stays a polynomial in s).
    LaurentPoly shifted(const Mono& m) const;

    // Leading term under deglex q > p > s.
    std::pair<Mono, Rational> leading_term() const;

    // p -> p^{-1}, q and s fixed, rationals fixed.
    LaurentPoly conj() const;

    // Substitute values for a subset of parameters; values for q and p must
    // be nonzero (their negative powers are evaluated exactly).
    LaurentPoly substituted(const std::optional<Rational>& q,
                            const std::optional<Rational>& p,
                            const std::optional<Rational>& s) const;

    // gcd of the rational coefficients, signed by the deglex-leading term.
    Rational rational_content_signed() const;

    void scale(const Rational& c);

    std::string str() const; // debug rendering, descending deglex

private:
    void insert(const Mono& m, const Rational& c);
    TermMap terms_;
    friend LaurentPoly poly_divide_exact(const LaurentPoly&, const LaurentPoly&);
};

// Exact division a / b of true polynomials (throws if b does not divide a).
LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// gcd over Q[q,p,s] of polynomial inputs (all exponents >= 0), returned
// integer-primitive with positive leading coefficient. gcd(0,0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace ncs
