#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qr/idempotents.hpp"
#include "qr/quandle.hpp"
#include "qr/ring.hpp"

namespace qr {

// Expression tree over generators under * and its right inverse (written \,
// where a\b is the unique c with c*b = a).
struct Term {
    enum class Kind { Gen, Mul, Inv };
    Kind kind = Kind::Gen;
    int gen = -1;
    std::shared_ptr<const Term> lhs, rhs;

    static Term generator(int g);
    static Term apply(Kind k, Term a, Term b);
    bool uses_inverse() const;
    std::string str(const std::vector<std::string>& gens) const;
};

struct Presentation {
    std::string name;
    std::vector<std::string> gens;
    std::vector<std::pair<Term, Term>> rels;
};

// Text form:
//   quandle { gens: a, b; rel: a*(a*b) = (a*b)*b; rel: (b*a)*(a*b) = b; }
// * and \ associate to the left when parentheses are omitted.
Presentation parse_presentation(const std::string& text, const std::string& name = "");
std::string presentation_str(const Presentation& p);

// The reduced and unreduced presentations used by the worked examples,
// keyed l2a1-0, l4a1-0, l4a1-0-r2, l4a1-1, l4a1-1-r2, l5a1-1, l5a1-1-r2.
const std::vector<Presentation>& builtin_presentations();
const Presentation& builtin_presentation(const std::string& key);

// A finite magma target for colorings: a quandle, or any closed
// multiplication table (such as a mod-2 idempotent quandle).
struct ColoringTarget {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;
    std::vector<std::vector<int>> inv; // inv[a][b] = c with c*b = a; empty if columns not bijective

    int size() const { return int(table.size()); }
};

ColoringTarget target_from_quandle(const Quandle& q);
ColoringTarget target_from_mod2_set(const Mod2Set& s); // requires closure

int eval_term(const Term& t, const std::vector<int>& assignment, const ColoringTarget& target);

long count_colorings(const Presentation& p, const ColoringTarget& t, Exec exec = Exec::parallel);
long count_colorings_reference(const Presentation& p, const ColoringTarget& t);
// Satisfying assignments in lexicographic order by generator-value tuples.
std::vector<std::vector<int>> hom_set(const Presentation& p, const ColoringTarget& t,
                                      Exec exec = Exec::parallel);

struct HomQuandle {
    Quandle quandle;                         // pointwise product on hom_set
    std::vector<std::vector<int>> elements;  // canonical order
};

// Requires a medial target; the result is validated and medial.
HomQuandle hom_quandle(const Presentation& p, const Quandle& target);

// Both sides of every relation, read inside one quandle ring with the exact
// written parenthesization; zero is an admissible value.  Relations using
// the right inverse are rejected.
template <class R>
bool check_ring_relations(const Presentation& p, const std::vector<RingElement<R>>& assignment);

// --- relation structure report -------------------------------------------------

struct EnhancementCategory {
    long pairs = 0;
    long p1_all = 0, p2_all = 0;               // pairs satisfying every relation
    std::vector<long> p1_by_rel, p2_by_rel;    // pairs satisfying each single relation
};

struct EnhancementReport {
    // categories: both_zero, first_zero, second_zero, same_family, cross_family
    std::vector<std::pair<std::string, EnhancementCategory>> categories;
    bool p2_admits_zero_first_nonzero_second = false;
    bool p1_admits_zero_first_nonzero_second = false;

    const EnhancementCategory& category(const std::string& name) const;
};

// Tabulates which (value-or-zero, value-or-zero) assignments drawn from grid
// instantiations of the families satisfy the relations of p1 and of p2.
EnhancementReport enhancement_report(const Presentation& p1, const Presentation& p2,
                                     const std::vector<ParametricElement>& families,
                                     const std::vector<Rat>& grid);

// --- template implementation ----------------------------------------------------

namespace detail {
template <class R>
RingElement<R> eval_ring_term(const Term& t, const std::vector<RingElement<R>>& assignment) {
    switch (t.kind) {
        case Term::Kind::Gen:
            return assignment[size_t(t.gen)];
        case Term::Kind::Mul:
            return mul(eval_ring_term(*t.lhs, assignment), eval_ring_term(*t.rhs, assignment));
        case Term::Kind::Inv:
            throw std::invalid_argument("ring relations admit * only");
    }
    throw std::logic_error("unreachable");
}
} // namespace detail

template <class R>
bool check_ring_relations(const Presentation& p, const std::vector<RingElement<R>>& assignment) {
    if (assignment.size() != p.gens.size())
        throw std::invalid_argument("assignment size does not match generators");
    for (const auto& [lhs, rhs] : p.rels)
        if (!(detail::eval_ring_term(lhs, assignment) == detail::eval_ring_term(rhs, assignment)))
            return false;
    return true;
}

} // namespace qr
