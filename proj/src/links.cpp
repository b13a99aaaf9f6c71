#include "qr/links.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qr {

Term Term::generator(int g) {
    Term t;
    t.kind = Kind::Gen;
    t.gen = g;
    return t;
}

Term Term::apply(Kind k, Term a, Term b) {
    Term t;
    t.kind = k;
    t.lhs = std::make_shared<Term>(std::move(a));
    t.rhs = std::make_shared<Term>(std::move(b));
    return t;
}

bool Term::uses_inverse() const {
    if (kind == Kind::Inv) return true;
    if (kind == Kind::Gen) return false;
    return lhs->uses_inverse() || rhs->uses_inverse();
}

std::string Term::str(const std::vector<std::string>& gens) const {
    if (kind == Kind::Gen) return gens[size_t(gen)];
    std::string op = kind == Kind::Mul ? "*" : "\\";
    auto wrap = [&gens](const Term& t) {
        if (t.kind == Kind::Gen) return t.str(gens);
        return "(" + t.str(gens) + ")";
    };
    return wrap(*lhs) + op + wrap(*rhs);
}

// --- presentation parsing ------------------------------------------------------

namespace {

class PresentationParser {
public:
    PresentationParser(const std::string& text, const std::string& name)
        : s_(text) {
        out_.name = name;
    }

    Presentation run() {
        expect_word("quandle");
        expect('{');
        expect_word("gens");
        expect(':');
        do {
            out_.gens.push_back(ident());
        } while (eat(','));
        expect(';');
        while (true) {
            skip();
            if (eat('}')) break;
            expect_word("rel");
            expect(':');
            Term lhs = term_expr();
            expect('=');
            Term rhs = term_expr();
            expect(';');
            out_.rels.emplace_back(std::move(lhs), std::move(rhs));
        }
        skip();
        if (pos_ != s_.size()) fail("trailing input after '}'");
        for (const auto& [l, r] : out_.rels) {
            check_gens(l);
            check_gens(r);
        }
        return std::move(out_);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    Presentation out_;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    void expect_word(const std::string& w) {
        skip();
        if (s_.compare(pos_, w.size(), w) != 0) fail("expected '" + w + "'");
        pos_ += w.size();
    }

    std::string ident() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return s_.substr(start, pos_ - start);
    }

    int gen_index(const std::string& name) {
        auto it = std::find(out_.gens.begin(), out_.gens.end(), name);
        if (it == out_.gens.end()) fail("undeclared generator '" + name + "'");
        return int(it - out_.gens.begin());
    }

    Term term_atom() {
        skip();
        if (eat('(')) {
            Term t = term_expr();
            expect(')');
            return t;
        }
        return Term::generator(gen_index(ident()));
    }

    // left-associative chains of the two operators
    Term term_expr() {
        Term acc = term_atom();
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                acc = Term::apply(Term::Kind::Mul, std::move(acc), term_atom());
            } else if (pos_ < s_.size() && s_[pos_] == '\\') {
                ++pos_;
                acc = Term::apply(Term::Kind::Inv, std::move(acc), term_atom());
            } else {
                break;
            }
        }
        return acc;
    }

    void check_gens(const Term& t) {
        if (t.kind == Term::Kind::Gen) {
            if (t.gen < 0 || t.gen >= int(out_.gens.size())) fail("bad generator index");
            return;
        }
        check_gens(*t.lhs);
        check_gens(*t.rhs);
    }
};

} // namespace

Presentation parse_presentation(const std::string& text, const std::string& name) {
    return PresentationParser(text, name).run();
}

std::string presentation_str(const Presentation& p) {
    std::ostringstream os;
    os << "quandle { gens: ";
    for (size_t i = 0; i < p.gens.size(); ++i) os << (i ? ", " : "") << p.gens[i];
    os << ";";
    for (const auto& [l, r] : p.rels)
        os << " rel: " << l.str(p.gens) << " = " << r.str(p.gens) << ";";
    os << " }";
    return os.str();
}

const std::vector<Presentation>& builtin_presentations() {
    static const std::vector<Presentation> all = [] {
        auto mk = [](const char* key, const char* body) {
            return parse_presentation(body, key);
        };
        std::vector<Presentation> v;
        v.push_back(mk("l4a1-0",
                       "quandle { gens: a, b, c, d, k;"
                       " rel: d*b = c; rel: k*d = b; rel: b*a = k; rel: a*d = c; rel: a*b = d; }"));
        v.push_back(mk("l4a1-0-r2",
                       "quandle { gens: a, b;"
                       " rel: a*(a*b) = (a*b)*b; rel: (b*a)*(a*b) = b; }"));
        v.push_back(mk("l5a1-1",
                       "quandle { gens: x, y, z, r, w;"
                       " rel: w*x = y; rel: x*z = r; rel: y*w = z; rel: w*r = z; rel: x*y = r; }"));
        v.push_back(mk("l5a1-1-r2",
                       "quandle { gens: x, w;"
                       " rel: w*(x*(w*x)) = (w*x)*w; rel: x*((w*x)*w) = x*(w*x); }"));
        v.push_back(mk("l2a1-0",
                       "quandle { gens: a, b; rel: a*b = a; rel: b*a = b; }"));
        v.push_back(mk("l4a1-1",
                       "quandle { gens: x, y, z, w;"
                       " rel: x*w = y; rel: w*y = z; rel: y*z = x; rel: z*x = w; }"));
        v.push_back(mk("l4a1-1-r2",
                       "quandle { gens: x, w;"
                       " rel: (x*w)*(w*(x*w)) = x; rel: (w*(x*w))*x = w; }"));
        return v;
    }();
    return all;
}

const Presentation& builtin_presentation(const std::string& key) {
    for (const auto& p : builtin_presentations())
        if (p.name == key) return p;
    throw std::invalid_argument("no builtin presentation named '" + key + "'");
}

// --- coloring targets ------------------------------------------------------------

ColoringTarget target_from_quandle(const Quandle& q) {
    ColoringTarget t;
    const int n = q.size();
    t.table = q.table();
    t.inv.assign(size_t(n), std::vector<int>(size_t(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.inv[size_t(a)][size_t(b)] = q.inv_op(a, b);
    for (int i = 0; i < n; ++i) t.labels.push_back("e" + std::to_string(i + 1));
    return t;
}

ColoringTarget target_from_mod2_set(const Mod2Set& s) {
    ColoringTarget t;
    t.table = mod2_mul_table(s);
    const int k = int(t.table.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (t.table[size_t(i)][size_t(j)] < 0)
                throw std::invalid_argument("idempotent set is not closed under multiplication");
    bool columns_bijective = true;
    for (int j = 0; j < k && columns_bijective; ++j) {
        std::vector<bool> seen(size_t(k), false);
        for (int i = 0; i < k; ++i) {
            int v = t.table[size_t(i)][size_t(j)];
            if (seen[size_t(v)]) { columns_bijective = false; break; }
            seen[size_t(v)] = true;
        }
    }
    if (columns_bijective) {
        t.inv.assign(size_t(k), std::vector<int>(size_t(k)));
        for (int c = 0; c < k; ++c)
            for (int b = 0; b < k; ++b) t.inv[size_t(t.table[size_t(c)][size_t(b)])][size_t(b)] = c;
    }
    for (int i = 0; i < k; ++i) t.labels.push_back("u" + std::to_string(i + 1));
    return t;
}

int eval_term(const Term& t, const std::vector<int>& assignment, const ColoringTarget& target) {
    switch (t.kind) {
        case Term::Kind::Gen:
            return assignment[size_t(t.gen)];
        case Term::Kind::Mul:
            return target.table[size_t(eval_term(*t.lhs, assignment, target))]
                               [size_t(eval_term(*t.rhs, assignment, target))];
        case Term::Kind::Inv: {
            if (target.inv.empty())
                throw std::invalid_argument("\\ needs bijective right multiplications");
            int a = eval_term(*t.lhs, assignment, target);
            int b = eval_term(*t.rhs, assignment, target);
            return target.inv[size_t(a)][size_t(b)];
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

bool satisfies(const Presentation& p, const std::vector<int>& assignment,
               const ColoringTarget& t) {
    for (const auto& [l, r] : p.rels)
        if (eval_term(l, assignment, t) != eval_term(r, assignment, t)) return false;
    return true;
}

// enumerate assignments with the first generator pinned; lexicographic order
template <class F>
void for_each_assignment(int gens, int size, int first, F&& fn) {
    std::vector<int> a(size_t(gens), 0);
    a[0] = first;
    while (true) {
        fn(a);
        int i = gens - 1;
        while (i >= 1 && ++a[size_t(i)] == size) {
            a[size_t(i)] = 0;
            --i;
        }
        if (i == 0) break;
    }
}

} // namespace

long count_colorings(const Presentation& p, const ColoringTarget& t, Exec exec) {
    const int g = int(p.gens.size());
    const int k = t.size();
    if (g == 0) return 1;
    double space = std::pow(double(k), g);
    if (space > 5e8) throw ResourceLimitError("coloring space too large");
    long total = 0;
    if (exec == Exec::parallel) {
#ifdef _OPENMP
        #pragma omp parallel for reduction(+ : total) schedule(dynamic)
        for (int first = 0; first < k; ++first)
            for_each_assignment(g, k, first, [&](const std::vector<int>& a) {
                if (satisfies(p, a, t)) ++total;
            });
        return total;
#endif
    }
    for (int first = 0; first < k; ++first)
        for_each_assignment(g, k, first, [&](const std::vector<int>& a) {
            if (satisfies(p, a, t)) ++total;
        });
    return total;
}

long count_colorings_reference(const Presentation& p, const ColoringTarget& t) {
    // plain odometer, no per-generator split
    const int g = int(p.gens.size());
    const int k = t.size();
    std::vector<int> a(size_t(g), 0);
    long total = 0;
    while (true) {
        if (satisfies(p, a, t)) ++total;
        int i = g - 1;
        while (i >= 0 && ++a[size_t(i)] == k) {
            a[size_t(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return total;
}

std::vector<std::vector<int>> hom_set(const Presentation& p, const ColoringTarget& t, Exec exec) {
    const int g = int(p.gens.size());
    const int k = t.size();
    std::vector<std::vector<std::vector<int>>> parts;
    parts.resize(size_t(k));
    auto run = [&](int first) {
        for_each_assignment(g, k, first, [&](const std::vector<int>& a) {
            if (satisfies(p, a, t)) parts[size_t(first)].push_back(a);
        });
    };
    if (exec == Exec::parallel) {
#ifdef _OPENMP
        #pragma omp parallel for schedule(dynamic)
        for (int first = 0; first < k; ++first) run(first);
#else
        for (int first = 0; first < k; ++first) run(first);
#endif
    } else {
        for (int first = 0; first < k; ++first) run(first);
    }
    std::vector<std::vector<int>> out;
    for (auto& part : parts)
        out.insert(out.end(), part.begin(), part.end());
    return out; // lexicographic by construction
}

HomQuandle hom_quandle(const Presentation& p, const Quandle& target) {
    if (!is_medial(target))
        throw std::invalid_argument("hom quandle needs a medial target");
    ColoringTarget t = target_from_quandle(target);
    HomQuandle h;
    h.elements = hom_set(p, t);
    const int m = int(h.elements.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < m; ++i) index[h.elements[size_t(i)]] = i;
    Table tab;
    tab.assign(size_t(m), std::vector<int>(size_t(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<int> prod(p.gens.size());
            for (size_t gidx = 0; gidx < p.gens.size(); ++gidx)
                prod[gidx] = target.op(h.elements[size_t(i)][gidx], h.elements[size_t(j)][gidx]);
            auto it = index.find(prod);
            if (it == index.end())
                throw std::logic_error("pointwise product left the hom set");
            tab[size_t(i)][size_t(j)] = it->second;
        }
    h.quandle = Quandle::from_table(tab, "Hom(" + p.name + ", " + target.name() + ")");
    if (!is_medial(h.quandle))
        throw std::logic_error("hom quandle of a medial target must be medial");
    return h;
}

// --- enhancement report -----------------------------------------------------------

const EnhancementCategory& EnhancementReport::category(const std::string& name) const {
    for (const auto& [n, c] : categories)
        if (n == name) return c;
    throw std::invalid_argument("no category " + name);
}

EnhancementReport enhancement_report(const Presentation& p1, const Presentation& p2,
                                     const std::vector<ParametricElement>& families,
                                     const std::vector<Rat>& grid) {
    if (p1.gens.size() != 2 || p2.gens.size() != 2)
        throw std::invalid_argument("the report compares two-generator presentations");
    if (families.empty()) throw std::invalid_argument("no families supplied");
    const Quandle& q = *families[0].q;

    // distinct grid instantiations, tagged with their family index
    std::vector<std::pair<int, QElement>> values;
    for (size_t f = 0; f < families.size(); ++f) {
        std::set<std::vector<Rat>> seen;
        const auto& fam = families[f];
        std::vector<size_t> idx(fam.params.size(), 0);
        while (true) {
            std::map<std::string, Rat> asg;
            for (size_t i = 0; i < fam.params.size(); ++i)
                asg[fam.params[i]] = grid[idx[i]];
            QElement u = fam.instantiate(asg);
            if (seen.insert(u.c).second) values.emplace_back(int(f), u);
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == grid.size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }
    QElement zero(q);

    EnhancementReport rep;
    rep.categories = {
        {"both_zero", {}}, {"first_zero", {}}, {"second_zero", {}},
        {"same_family", {}}, {"cross_family", {}},
    };
    auto cat_of = [&](int fa, int fb) -> EnhancementCategory& {
        const char* name;
        if (fa < 0 && fb < 0) name = "both_zero";
        else if (fa < 0) name = "first_zero";
        else if (fb < 0) name = "second_zero";
        else if (fa == fb) name = "same_family";
        else name = "cross_family";
        for (auto& [n, c] : rep.categories)
            if (n == name) return c;
        throw std::logic_error("unreachable");
    };

    auto rel_flags = [](const Presentation& p, const std::vector<QElement>& asg) {
        std::vector<bool> ok;
        for (const auto& [l, r] : p.rels)
            ok.push_back(detail::eval_ring_term(l, asg) == detail::eval_ring_term(r, asg));
        return ok;
    };

    std::vector<std::pair<int, QElement>> pool = values;
    pool.emplace_back(-1, zero);
    for (const auto& [fa, ua] : pool)
        for (const auto& [fb, ub] : pool) {
            EnhancementCategory& c = cat_of(fa, fb);
            if (c.p1_by_rel.empty()) c.p1_by_rel.assign(p1.rels.size(), 0);
            if (c.p2_by_rel.empty()) c.p2_by_rel.assign(p2.rels.size(), 0);
            ++c.pairs;
            std::vector<QElement> asg = {ua, ub};
            auto f1 = rel_flags(p1, asg);
            auto f2 = rel_flags(p2, asg);
            bool all1 = std::all_of(f1.begin(), f1.end(), [](bool b) { return b; });
            bool all2 = std::all_of(f2.begin(), f2.end(), [](bool b) { return b; });
            if (all1) ++c.p1_all;
            if (all2) ++c.p2_all;
            for (size_t i = 0; i < f1.size(); ++i)
                if (f1[i]) ++c.p1_by_rel[i];
            for (size_t i = 0; i < f2.size(); ++i)
                if (f2[i]) ++c.p2_by_rel[i];
            if (fa < 0 && fb >= 0) {
                if (all1) rep.p1_admits_zero_first_nonzero_second = true;
                if (all2) rep.p2_admits_zero_first_nonzero_second = true;
            }
        }
    return rep;
}

} // namespace qr
