#pragma once

#include <initializer_list>
#include <map>

#include "ncs/scalar.hpp"
#include "ncs/word.hpp"

namespace ncs {

// Element of the free algebra: finite map word -> coefficient, no zeros
// stored. Which generators the ids refer to is owned by the Presentation;
// NCPoly itself is presentation-agnostic.
class NCPoly {
public:
    using TermMap = std::map<Word, ParamScalar, WordKeyLess>;

    NCPoly() = default;
    static NCPoly zero() { return {}; }
    static NCPoly unit(const ParamScalar& c);
    static NCPoly one() { return unit(ParamScalar::of(1L)); }
    static NCPoly gen(GenId g) { return term(Word{g}, ParamScalar::of(1L)); }
    static NCPoly word(const Word& w) { return term(w, ParamScalar::of(1L)); }
    static NCPoly term(const Word& w, const ParamScalar& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    ParamScalar coeff(const Word& w) const;
    void add_term(const Word& w, const ParamScalar& c);

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly& operator+=(const NCPoly& o);
    // Free-algebra product: word concatenation, bilinear, NOT reduced.
    NCPoly operator*(const NCPoly& o) const;

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    NCPoly scaled(const ParamScalar& c) const;

    // True if the polynomial is a pure coefficient (only the empty word).
    bool is_scalar() const;
    ParamScalar scalar_value() const; // requires is_scalar()

    // Coefficient-wise specialization (zero terms pruned).
    NCPoly specialized(const ParamAssignment& at) const;

    // Drop the empty-word component: projection to the nonunital part.
    NCPoly bar() const;
    ParamScalar unit_coeff() const { return coeff(Word{}); }

    // Total degree of the longest word (-1 for zero).
    int degree() const;

private:
    TermMap terms_;
};

inline NCPoly operator*(const ParamScalar& c, const NCPoly& a) { return a.scaled(c); }
inline NCPoly operator*(long c, const NCPoly& a) { return a.scaled(ParamScalar::of(c)); }
inline NCPoly operator+(const NCPoly& a, const ParamScalar& c) { return a + NCPoly::unit(c); }
inline NCPoly operator-(const NCPoly& a, const ParamScalar& c) { return a - NCPoly::unit(c); }

} // namespace ncs
