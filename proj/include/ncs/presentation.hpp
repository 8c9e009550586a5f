#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncs/ncpoly.hpp"

namespace ncs {

// Oriented relation lhs -> rhs; every monomial of rhs is strictly smaller
// than lhs in the owning presentation's term order.
struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

enum class Confluence { unchecked, verified };

// An overlap or containment between two rules: `word` reduces both by rule
// `rule_a` applied at `pos_a` and by rule `rule_b` at `pos_b`.
struct Ambiguity {
    std::size_t rule_a, rule_b;
    Word word;
    std::size_t pos_a, pos_b;
};

struct AmbiguityFailure {
    Ambiguity ambiguity;
    NCPoly nf_a, nf_b;
};

struct ConfluenceReport {
    std::size_t ambiguities_checked = 0;
    std::vector<AmbiguityFailure> failures;
    bool pass() const { return failures.empty(); }
};

// Finitely presented algebra over Q(q,p,s): generators, deglex precedence,
// oriented rewrite rules, optional involution table. Immutable once built.
class Presentation {
public:
    const std::vector<std::string>& generator_names() const { return names_; }
    std::size_t generator_count() const { return names_.size(); }
    const std::string& name_of(GenId g) const { return names_[g]; }
    std::optional<GenId> find_generator(const std::string& name) const;

    const TermOrder& order() const { return order_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<NCPoly>& defining_relations() const { return relations_; }

    bool has_involution() const { return involution_.has_value(); }
    const NCPoly& involution_image(GenId g) const;

    Confluence confluence_status() const { return status_; }

private:
    friend class PresentationBuilder;
    std::vector<std::string> names_;
    TermOrder order_;
    std::vector<RewriteRule> rules_;
    std::vector<NCPoly> relations_; // as entered, before orientation
    std::optional<std::vector<NCPoly>> involution_;
    Confluence status_ = Confluence::unchecked;
};

// Assembles a presentation from relations. Relations are oriented by their
// deglex-leading term and inter-reduced against earlier rules; rules are
// therefore order-decreasing by construction.
class PresentationBuilder {
public:
    // `precedence_desc` lists generator names from greatest to smallest.
    PresentationBuilder(std::vector<std::string> names, std::vector<std::string> precedence_desc);

    GenId id(const std::string& name) const;
    NCPoly gen(const std::string& name) const { return NCPoly::gen(id(name)); }

    // Relation entered as a polynomial equal to zero in the quotient.
    void add_relation(const NCPoly& rel);
    void set_involution_image(const std::string& gen_name, const NCPoly& image);

    // `require_confluent` runs the full overlap check and throws
    // construction_error (with witnesses) if it fails; otherwise the status
    // is left unchecked. The involution, when present, is validated to be
    // self-inverse and to preserve the relation ideal.
    Presentation build(bool require_confluent = true) const;

private:
    std::vector<std::string> names_;
    TermOrder order_;
    std::vector<NCPoly> relations_;
    std::vector<std::optional<NCPoly>> involution_images_;
    bool any_involution_ = false;
};

// Reduce to the unique irreducible representative modulo the rules
// (unique when the presentation is confluent). Always terminates: each step
// replaces a word by strictly smaller ones. The observer, when set, sees
// every elementary step as (word removed, rule index, words inserted).
using RewriteObserver =
    std::function<void(const Word& redex, std::size_t rule, const NCPoly& replacement)>;
NCPoly normal_form(const Presentation& P, const NCPoly& a, const RewriteObserver& observer = nullptr);

// All diamond-lemma ambiguities (overlaps and containments, including
// self-overlaps) between the presentation's rules.
std::vector<Ambiguity> overlap_ambiguities(const Presentation& P);

// Resolve every ambiguity both ways; pass iff all normal forms agree.
ConfluenceReport confluence_check(const Presentation& P);

// Antilinear antihomomorphism from the involution table, then normal_form.
// Throws construction_error if the presentation has no involution.
NCPoly apply_involution(const Presentation& P, const NCPoly& a);

// Coefficient-wise specialization followed by no rewriting (already
// reduced inputs stay reduced: specialization can only cancel terms).
NCPoly specialize_poly(const Presentation& P, const NCPoly& a, const ParamAssignment& at);

// nf(g*a - a*g) for every generator g; returns first witness name if any.
std::optional<std::string> centrality_witness(const Presentation& P, const NCPoly& a);

} // namespace ncs
