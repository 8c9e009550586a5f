#include "ncs/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "ncs/errors.hpp"

namespace ncs {

bool mono_deglex_less(const Mono& a, const Mono& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (a.eq != b.eq) return a.eq < b.eq;
    if (a.ep != b.ep) return a.ep < b.ep;
    return a.es < b.es;
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[Mono{}] = c;
}

LaurentPoly LaurentPoly::variable(Param v, int power) {
    Mono m;
    switch (v) {
        case Param::q: m.eq = power; break;
        case Param::p: m.ep = power; break;
        case Param::s: m.es = power; break;
    }
    if (m.es < 0) throw arithmetic_error("negative power of s is not an element of the coefficient ring");
    return monomial(m, 1);
}

LaurentPoly LaurentPoly::monomial(const Mono& m, const Rational& c) {
    LaurentPoly r;
    if (c != 0) r.terms_[m] = c;
    return r;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{} && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Rational LaurentPoly::constant_coeff() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::insert(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [m, c] : o.terms_) r.insert(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.insert(ma + mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw arithmetic_error("LaurentPoly::pow: negative exponent");
    LaurentPoly r(Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

int LaurentPoly::min_exp(Param v) const {
    if (terms_.empty()) return 0;
    int best = 0;
    bool first = true;
    for (auto& [m, c] : terms_) {
        int e = v == Param::q ? m.eq : v == Param::p ? m.ep : m.es;
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

int LaurentPoly::max_exp(Param v) const {
    if (terms_.empty()) return 0;
    int best = 0;
    bool first = true;
    for (auto& [m, c] : terms_) {
        int e = v == Param::q ? m.eq : v == Param::p ? m.ep : m.es;
        if (first || e > best) best = e;
        first = false;
    }
    return best;
}

LaurentPoly LaurentPoly::shifted(const Mono& shift) const {
    LaurentPoly r;
    for (auto& [m, c] : terms_) {
        Mono nm = m + shift;
        if (nm.es < 0) throw arithmetic_error("monomial shift leaves the coefficient ring (negative s power)");
        r.terms_[nm] = c;
    }
    return r;
}

std::pair<Mono, Rational> LaurentPoly::leading_term() const {
    if (terms_.empty()) throw arithmetic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (mono_deglex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

LaurentPoly LaurentPoly::conj() const {
    LaurentPoly r;
    for (auto& [m, c] : terms_) r.terms_[Mono{m.eq, -m.ep, m.es}] = c;
    return r;
}

LaurentPoly LaurentPoly::substituted(const std::optional<Rational>& q,
                                     const std::optional<Rational>& p,
                                     const std::optional<Rational>& s) const {
    if ((q && *q == 0) || (p && *p == 0))
        throw arithmetic_error("specialization assigns zero to an invertible parameter");
    auto powr = [](const Rational& base, int e) {
        Rational r = 1;
        for (int i = 0; i < std::abs(e); ++i) r *= base;
        if (e < 0) r = Rational(1) / r;
        return r;
    };
    LaurentPoly out;
    for (auto& [m, c] : terms_) {
        Rational coeff = c;
        Mono nm = m;
        if (q) { coeff *= powr(*q, m.eq); nm.eq = 0; }
        if (p) { coeff *= powr(*p, m.ep); nm.ep = 0; }
        if (s) { coeff *= powr(*s, m.es); nm.es = 0; }
        out.insert(nm, coeff);
    }
    return out;
}

Rational LaurentPoly::rational_content_signed() const {
    if (terms_.empty()) return 0;
    Rational g = 0;
    for (auto& [m, c] : terms_) g = rat_content_gcd(g, c);
    if (leading_term().second < 0) g = -g;
    return g;
}

void LaurentPoly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Mono, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(),
              [](auto& a, auto& b) { return mono_deglex_less(b.first, a.first); });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : ts) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        std::string vars;
        auto addv = [&](const char* n, int e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += n;
            if (e != 1) vars += "^" + std::to_string(e);
        };
        addv("q", m.eq);
        addv("p", m.ep);
        addv("s", m.es);
        if (vars.empty()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << vars;
        }
    }
    return os.str();
}

LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw arithmetic_error("polynomial division by zero");
    LaurentPoly rem = a, quot;
    auto [lb, cb] = b.leading_term();
    while (!rem.is_zero()) {
        auto [lr, cr] = rem.leading_term();
        Mono d = lr - lb;
        if (d.eq < 0 || d.ep < 0 || d.es < 0)
            throw arithmetic_error("inexact polynomial division");
        LaurentPoly t = LaurentPoly::monomial(d, cr / cb);
        quot += t;
        rem = rem - t * b;
    }
    return quot;
}

namespace {

// Univariate view in variable v: exponent -> coefficient polynomial.
std::map<int, LaurentPoly> split_by(const LaurentPoly& a, Param v) {
    std::map<int, LaurentPoly> out;
    for (auto& [m, c] : a.terms()) {
        Mono rest = m;
        int e = 0;
        switch (v) {
            case Param::q: e = m.eq; rest.eq = 0; break;
            case Param::p: e = m.ep; rest.ep = 0; break;
            case Param::s: e = m.es; rest.es = 0; break;
        }
        out[e] += LaurentPoly::monomial(rest, c);
    }
    return out;
}

LaurentPoly var_pow(Param v, int e) { return LaurentPoly::variable(v, 1).pow(e); }

LaurentPoly assemble(Param v, const std::map<int, LaurentPoly>& coeffs) {
    LaurentPoly r;
    for (auto& [e, c] : coeffs) r += c * var_pow(v, e);
    return r;
}

int deg_in(const LaurentPoly& a, Param v) { return a.max_exp(v); }

LaurentPoly lead_coeff_in(const LaurentPoly& a, Param v) {
    auto parts = split_by(a, v);
    return parts.rbegin()->second;
}

// content of a as a univariate polynomial in v (gcd of the coefficients).
LaurentPoly content_in(const LaurentPoly& a, Param v) {
    LaurentPoly g;
    for (auto& [e, c] : split_by(a, v)) g = poly_gcd(g, c);
    return g;
}

// Pseudo-remainder of f by g in the variable v (deg_v f >= deg_v g > 0).
LaurentPoly pseudo_rem(LaurentPoly f, const LaurentPoly& g, Param v) {
    int dg = deg_in(g, v);
    LaurentPoly lg = lead_coeff_in(g, v);
    while (!f.is_zero() && deg_in(f, v) >= dg) {
        int df = deg_in(f, v);
        LaurentPoly lf = lead_coeff_in(f, v);
        f = lg * f - lf * var_pow(v, df - dg) * g;
    }
    return f;
}

LaurentPoly normalize_primitive(LaurentPoly a) {
    if (a.is_zero()) return a;
    Rational c = a.rational_content_signed();
    a.scale(Rational(1) / c);
    return a;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) return LaurentPoly(Rational(1));

    // Monomial fast path: gcd is the shared monomial content.
    if (a.is_monomial() || b.is_monomial()) {
        Mono g{std::min(a.min_exp(Param::q), b.min_exp(Param::q)),
               std::min(a.min_exp(Param::p), b.min_exp(Param::p)),
               std::min(a.min_exp(Param::s), b.min_exp(Param::s))};
        return LaurentPoly::monomial(g, 1);
    }

    for (Param v : {Param::q, Param::p, Param::s}) {
        bool in_a = a.depends_on(v), in_b = b.depends_on(v);
        if (!in_a && !in_b) continue;
        if (in_a && !in_b) return poly_gcd(content_in(a, v), b);
        if (!in_a && in_b) return poly_gcd(a, content_in(b, v));

        // Both depend on v: primitive PRS in v.
        LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
        LaurentPoly f = poly_divide_exact(a, ca);
        LaurentPoly g = poly_divide_exact(b, cb);
        LaurentPoly cont = poly_gcd(ca, cb);
        if (deg_in(f, v) < deg_in(g, v)) std::swap(f, g);
        while (!g.is_zero()) {
            LaurentPoly r = pseudo_rem(f, g, v);
            f = g;
            if (r.is_zero()) {
                g = LaurentPoly();
            } else {
                g = poly_divide_exact(r, content_in(r, v));
                g = normalize_primitive(g);
            }
        }
        return normalize_primitive(cont * f);
    }
    return LaurentPoly(Rational(1)); // both constant: handled above
}

} // namespace ncs
