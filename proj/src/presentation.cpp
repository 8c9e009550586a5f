#include "ncs/presentation.hpp"

#include <algorithm>

#include "ncs/errors.hpp"

namespace ncs {

namespace {

// First redex in w: smallest start position, then shortest lhs, then lowest
// rule index. Returns (rule index, position).
std::optional<std::pair<std::size_t, std::size_t>> find_redex(const std::vector<RewriteRule>& rules,
                                                              const Word& w) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t r = 0; r < rules.size(); ++r) {
            const Word& lhs = rules[r].lhs;
            if (lhs.empty() || pos + lhs.size() > w.size()) continue;
            if (!std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) continue;
            if (!best || lhs.size() < rules[best->first].lhs.size()) best = {r, pos};
        }
        if (best) return best;
    }
    return std::nullopt;
}

NCPoly splice(const Word& w, std::size_t pos, std::size_t len, const NCPoly& replacement,
              const ParamScalar& coeff) {
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + len, w.end());
    NCPoly out;
    for (auto& [rw, rc] : replacement.terms()) {
        Word nw = word_concat(word_concat(prefix, rw), suffix);
        out.add_term(nw, coeff * rc);
    }
    return out;
}

NCPoly reduce(const std::vector<RewriteRule>& rules, const TermOrder& order, const NCPoly& a,
              const RewriteObserver& observer) {
    NCPoly::TermMap pending = a.terms();
    NCPoly done;
    while (!pending.empty()) {
        // Deglex-greatest pending word.
        auto best = pending.begin();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        Word w = best->first;
        ParamScalar c = best->second;
        pending.erase(best);
        if (c.is_zero()) continue;

        auto redex = find_redex(rules, w);
        if (!redex) {
            done.add_term(w, c);
            continue;
        }
        auto [ri, pos] = *redex;
        NCPoly replaced = splice(w, pos, rules[ri].lhs.size(), rules[ri].rhs, c);
        if (observer) observer(w, ri, replaced);
        for (auto& [nw, nc] : replaced.terms()) {
            auto [it, fresh] = pending.emplace(nw, nc);
            if (!fresh) {
                it->second += nc;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return done;
}

} // namespace

std::optional<GenId> Presentation::find_generator(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<GenId>(i);
    return std::nullopt;
}

const NCPoly& Presentation::involution_image(GenId g) const {
    if (!involution_) throw construction_error("presentation has no involution");
    return (*involution_)[g];
}

PresentationBuilder::PresentationBuilder(std::vector<std::string> names,
                                         std::vector<std::string> precedence_desc)
    : names_(std::move(names)) {
    if (precedence_desc.size() != names_.size())
        throw construction_error("precedence list must mention every generator exactly once");
    std::vector<int> rank(names_.size(), -1);
    for (std::size_t i = 0; i < precedence_desc.size(); ++i) {
        auto it = std::find(names_.begin(), names_.end(), precedence_desc[i]);
        if (it == names_.end())
            throw construction_error("precedence names unknown generator '" + precedence_desc[i] + "'");
        std::size_t g = static_cast<std::size_t>(it - names_.begin());
        if (rank[g] != -1)
            throw construction_error("duplicate generator in precedence: '" + precedence_desc[i] + "'");
        rank[g] = static_cast<int>(names_.size() - 1 - i);
    }
    order_ = TermOrder(std::move(rank));
    involution_images_.resize(names_.size());
}

GenId PresentationBuilder::id(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw construction_error("unknown generator '" + name + "'");
    return static_cast<GenId>(it - names_.begin());
}

void PresentationBuilder::add_relation(const NCPoly& rel) { relations_.push_back(rel); }

void PresentationBuilder::set_involution_image(const std::string& gen_name, const NCPoly& image) {
    involution_images_[id(gen_name)] = image;
    any_involution_ = true;
}

Presentation PresentationBuilder::build(bool require_confluent) const {
    Presentation P;
    P.names_ = names_;
    P.order_ = order_;
    P.relations_ = relations_;

    // Orient each relation by its leading term, inter-reducing against the
    // rules accumulated so far; duplicates collapse to zero and vanish.
    for (const NCPoly& rel : relations_) {
        NCPoly r = reduce(P.rules_, P.order_, rel, nullptr);
        if (r.is_zero()) continue;
        auto lead = r.terms().begin();
        for (auto it = std::next(r.terms().begin()); it != r.terms().end(); ++it)
            if (P.order_.less(lead->first, it->first)) lead = it;
        if (lead->first.empty())
            throw construction_error("relation reduces to a nonzero scalar: the algebra is trivial");
        Word lhs = lead->first;
        ParamScalar c = lead->second;
        NCPoly rhs;
        for (auto& [w, coeff] : r.terms())
            if (w != lhs) rhs.add_term(w, -(coeff / c));
        P.rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
    }
    // Reduce every rhs to normal form under the complete rule set.
    for (auto& rule : P.rules_) rule.rhs = reduce(P.rules_, P.order_, rule.rhs, nullptr);

    if (any_involution_) {
        std::vector<NCPoly> table;
        table.reserve(names_.size());
        for (std::size_t g = 0; g < names_.size(); ++g) {
            if (!involution_images_[g])
                throw construction_error("involution image missing for generator '" + names_[g] + "'");
            table.push_back(reduce(P.rules_, P.order_, *involution_images_[g], nullptr));
        }
        P.involution_ = std::move(table);
        for (std::size_t g = 0; g < names_.size(); ++g) {
            NCPoly twice = apply_involution(P, apply_involution(P, NCPoly::gen(static_cast<GenId>(g))));
            if (twice != normal_form(P, NCPoly::gen(static_cast<GenId>(g))))
                throw construction_error("involution is not self-inverse on generator '" + names_[g] + "'");
        }
        for (const NCPoly& rel : relations_) {
            if (!apply_involution(P, rel).is_zero())
                throw construction_error("involution does not preserve the relation ideal");
        }
    }

    if (require_confluent) {
        ConfluenceReport rep = confluence_check(P);
        if (!rep.pass()) {
            const AmbiguityFailure& f = rep.failures.front();
            std::string w;
            for (GenId g : f.ambiguity.word) w += P.names_[g] + ".";
            throw construction_error("presentation is not confluent; ambiguity witness word: " + w);
        }
        P.status_ = Confluence::verified;
    }
    return P;
}

NCPoly normal_form(const Presentation& P, const NCPoly& a, const RewriteObserver& observer) {
    return reduce(P.rules(), P.order(), a, observer);
}

std::vector<Ambiguity> overlap_ambiguities(const Presentation& P) {
    const auto& rules = P.rules();
    std::vector<Ambiguity> out;
    for (std::size_t a = 0; a < rules.size(); ++a) {
        const Word& la = rules[a].lhs;
        for (std::size_t b = 0; b < rules.size(); ++b) {
            const Word& lb = rules[b].lhs;
            // Proper suffix of la equals proper prefix of lb.
            std::size_t kmax = std::min(la.size(), lb.size()) - 1;
            for (std::size_t k = 1; k <= kmax; ++k) {
                if (std::equal(la.end() - k, la.end(), lb.begin())) {
                    Word w = la;
                    w.insert(w.end(), lb.begin() + k, lb.end());
                    out.push_back(Ambiguity{a, b, std::move(w), 0, la.size() - k});
                }
            }
            // Containment: lb a proper subword of la.
            if (lb.size() < la.size()) {
                for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos)
                    if (std::equal(lb.begin(), lb.end(), la.begin() + pos))
                        out.push_back(Ambiguity{a, b, la, 0, pos});
            }
        }
    }
    return out;
}

ConfluenceReport confluence_check(const Presentation& P) {
    ConfluenceReport rep;
    const auto& rules = P.rules();
    for (const Ambiguity& amb : overlap_ambiguities(P)) {
        auto reduce_via = [&](std::size_t rule, std::size_t pos) {
            NCPoly once = splice(amb.word, pos, rules[rule].lhs.size(), rules[rule].rhs,
                                 ParamScalar::of(1L));
            return normal_form(P, once);
        };
        NCPoly nf_a = reduce_via(amb.rule_a, amb.pos_a);
        NCPoly nf_b = reduce_via(amb.rule_b, amb.pos_b);
        ++rep.ambiguities_checked;
        if (nf_a != nf_b) rep.failures.push_back(AmbiguityFailure{amb, nf_a, nf_b});
    }
    return rep;
}

NCPoly apply_involution(const Presentation& P, const NCPoly& a) {
    if (!P.has_involution()) throw construction_error("presentation has no involution");
    NCPoly out;
    for (auto& [w, c] : a.terms()) {
        NCPoly img = NCPoly::unit(c.conj());
        for (auto it = w.rbegin(); it != w.rend(); ++it) img = img * P.involution_image(*it);
        out += img;
    }
    return normal_form(P, out);
}

NCPoly specialize_poly(const Presentation& P, const NCPoly& a, const ParamAssignment& at) {
    (void)P;
    return a.specialized(at);
}

std::optional<std::string> centrality_witness(const Presentation& P, const NCPoly& a) {
    for (std::size_t g = 0; g < P.generator_count(); ++g) {
        NCPoly gp = NCPoly::gen(static_cast<GenId>(g));
        if (!normal_form(P, gp * a - a * gp).is_zero()) return P.name_of(static_cast<GenId>(g));
    }
    return std::nullopt;
}

} // namespace ncs
