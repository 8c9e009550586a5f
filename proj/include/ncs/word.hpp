#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ncs {

using GenId = std::uint16_t;

// Monomial of the free algebra: a sequence of generator ids (empty = unit).
using Word = std::vector<GenId>;

// Container ordering for term maps: degree, then raw id sequence. This is a
// fixed canonical order, independent of any presentation's precedence.
struct WordKeyLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// deglex induced by a generator precedence: compare by length, then by the
// precedence ranks letter by letter. Multiplicative and well-founded.
class TermOrder {
public:
    TermOrder() = default;
    explicit TermOrder(std::vector<int> rank) : rank_(std::move(rank)) {}

    int rank(GenId g) const { return rank_[g]; }
    std::size_t size() const { return rank_.size(); }

    std::strong_ordering compare(const Word& u, const Word& v) const {
        if (u.size() != v.size()) return u.size() <=> v.size();
        for (std::size_t i = 0; i < u.size(); ++i)
            if (rank_[u[i]] != rank_[v[i]]) return rank_[u[i]] <=> rank_[v[i]];
        return std::strong_ordering::equal;
    }
    bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

private:
    std::vector<int> rank_;
};

inline Word word_concat(const Word& a, const Word& b) {
    Word r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

} // namespace ncs
