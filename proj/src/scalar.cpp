#include "ncs/scalar.hpp"

#include <algorithm>

#include "ncs/errors.hpp"

namespace ncs {

ParamScalar::ParamScalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw arithmetic_error("scalar with zero denominator");
    canonicalize();
}

void ParamScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }

    // Shared s-monomial content cancels; q,p-content of the denominator is
    // shifted into the (Laurent) numerator.
    int s_shift = std::min(num_.min_exp(Param::s), den_.min_exp(Param::s));
    Mono den_shift{-den_.min_exp(Param::q), -den_.min_exp(Param::p), -s_shift};
    if (den_shift != Mono{}) {
        den_ = den_.shifted(den_shift);
        num_ = num_.shifted(Mono{den_shift.eq, den_shift.ep, -s_shift});
    }

    if (!den_.is_constant()) {
        // gcd against the polynomial part of the numerator.
        Mono num_shift{-num_.min_exp(Param::q), -num_.min_exp(Param::p), 0};
        LaurentPoly num_poly = num_.shifted(num_shift);
        LaurentPoly g = poly_gcd(num_poly, den_);
        if (!g.is_constant()) {
            num_poly = poly_divide_exact(num_poly, g);
            den_ = poly_divide_exact(den_, g);
            num_ = num_poly.shifted(Mono{-num_shift.eq, -num_shift.ep, 0});
        }
    }

    // Integer-primitive, positive-leading denominator pins the unit.
    Rational c = den_.rational_content_signed();
    if (c != 1) {
        den_.scale(Rational(1) / c);
        num_.scale(Rational(1) / c);
    }
}

Rational ParamScalar::rational_value() const {
    if (!is_rational()) throw arithmetic_error("scalar is not a rational constant: " + str());
    return num_.constant_coeff() / den_.constant_coeff();
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return ParamScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) { return *this = *this + o; }

ParamScalar ParamScalar::operator-(const ParamScalar& o) const { return *this + (-o); }

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
    if (is_zero() || o.is_zero()) return ParamScalar();
    return ParamScalar(num_ * o.num_, den_ * o.den_);
}

ParamScalar ParamScalar::inv() const {
    if (is_zero()) throw arithmetic_error("inversion of zero scalar");
    return ParamScalar(den_, num_);
}

ParamScalar ParamScalar::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    ParamScalar r = of(1L);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

ParamScalar ParamScalar::conj() const { return ParamScalar(num_.conj(), den_.conj()); }

ParamScalar ParamScalar::specialize(const ParamAssignment& at) const {
    LaurentPoly d = den_.substituted(at.q, at.p, at.s);
    if (d.is_zero())
        throw arithmetic_error("denominator " + den_.str() + " vanishes at " + to_string(at));
    LaurentPoly n = num_.substituted(at.q, at.p, at.s);
    return ParamScalar(n, d);
}

std::string ParamScalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string to_string(const ParamAssignment& at) {
    std::string out;
    auto add = [&](const char* name, const std::optional<Rational>& v) {
        if (!v) return;
        if (!out.empty()) out += ", ";
        out += name;
        out += "=";
        out += v->str();
    };
    add("q", at.q);
    add("p", at.p);
    add("s", at.s);
    return out.empty() ? "{}" : out;
}

} // namespace ncs
