#pragma once

#include <optional>
#include <string>

#include "ncs/laurent.hpp"

namespace ncs {

// Partial assignment of rational values to the parameters q, p, s.
struct ParamAssignment {
    std::optional<Rational> q, p, s;
};

// Element of the fraction field Q(q, p, s), held in a canonical form:
//   * the denominator is a polynomial (q-, p-exponents >= 0) with integer
//     coprime coefficients and positive deglex-leading coefficient,
//   * numerator and denominator share no polynomial or monomial factor,
//   * equal field elements have identical representations.
class ParamScalar {
public:
    ParamScalar() : num_(), den_(Rational(1)) {}
    ParamScalar(const LaurentPoly& num, const LaurentPoly& den);

    static ParamScalar of(const Rational& r) { return ParamScalar(LaurentPoly(r), LaurentPoly(Rational(1))); }
    static ParamScalar of(long n) { return of(Rational(n)); }
    static ParamScalar of(const LaurentPoly& p) { return ParamScalar(p, LaurentPoly(Rational(1))); }
    static ParamScalar var(Param v, int power = 1) { return of(LaurentPoly::variable(v, power)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True when the value lies in Q (no parameter dependence).
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;

    ParamScalar operator-() const;
    ParamScalar operator+(const ParamScalar& o) const;
    ParamScalar operator-(const ParamScalar& o) const;
    ParamScalar operator*(const ParamScalar& o) const;
    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar inv() const;
    ParamScalar operator/(const ParamScalar& o) const { return *this * o.inv(); }
    ParamScalar pow(int e) const;

    bool operator==(const ParamScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ParamScalar& o) const { return !(*this == o); }

    // Ring involution: q -> q, s -> s, p -> p^{-1}, rationals fixed.
    ParamScalar conj() const;

    // Substitution homomorphism; throws arithmetic_error naming the
    // assignment if the denominator vanishes.
    ParamScalar specialize(const ParamAssignment& at) const;

    std::string str() const;

private:
    void canonicalize();
    LaurentPoly num_, den_;
};

inline ParamScalar operator*(const Rational& c, const ParamScalar& x) { return ParamScalar::of(c) * x; }

std::string to_string(const ParamAssignment& at);

} // namespace ncs
