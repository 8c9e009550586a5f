#include "ncs/ncpoly.hpp"

#include "ncs/errors.hpp"

namespace ncs {

NCPoly NCPoly::unit(const ParamScalar& c) { return term(Word{}, c); }

NCPoly NCPoly::term(const Word& w, const ParamScalar& c) {
    NCPoly r;
    if (!c.is_zero()) r.terms_[w] = c;
    return r;
}

ParamScalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ParamScalar() : it->second;
}

void NCPoly::add_term(const Word& w, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (auto& [wa, ca] : terms_)
        for (auto& [wb, cb] : o.terms_) r.add_term(word_concat(wa, wb), ca * cb);
    return r;
}

NCPoly NCPoly::scaled(const ParamScalar& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (auto& [w, coeff] : terms_) r.terms_[w] = coeff * c;
    return r;
}

bool NCPoly::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ParamScalar NCPoly::scalar_value() const {
    if (!is_scalar()) throw arithmetic_error("polynomial is not a scalar");
    return terms_.empty() ? ParamScalar() : terms_.begin()->second;
}

NCPoly NCPoly::specialized(const ParamAssignment& at) const {
    NCPoly r;
    for (auto& [w, c] : terms_) r.add_term(w, c.specialize(at));
    return r;
}

NCPoly NCPoly::bar() const {
    NCPoly r = *this;
    r.terms_.erase(Word{});
    return r;
}

int NCPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

} // namespace ncs
