#include "qr/idempotents.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qr {

// --- parametric elements -----------------------------------------------------

QElement ParametricElement::instantiate(const std::map<std::string, Rat>& assignment) const {
    for (const auto& cst : constraints)
        if (cst.subst(assignment) != 0)
            throw std::invalid_argument("assignment violates a family constraint");
    QElement u(*q);
    for (size_t i = 0; i < coeffs.size(); ++i) u.c[i] = coeffs[i].subst(assignment);
    return u;
}

RingElement<Polynomial> ParametricElement::as_ring_element() const {
    RingElement<Polynomial> u(*q);
    u.c = coeffs;
    return u;
}

Polynomial ParametricElement::augmentation_poly() const {
    Polynomial s;
    for (const auto& p : coeffs) s += p;
    return s;
}

std::string ParametricElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        std::string c = coeffs[i].str();
        bool atom = c.find('+') == std::string::npos &&
                    c.find('-', 1) == std::string::npos;
        std::string term;
        if (atom && c == "1") term = "e" + std::to_string(i + 1);
        else if (atom && c == "-1") term = "-e" + std::to_string(i + 1);
        else if (atom) term = c + "*e" + std::to_string(i + 1);
        else term = "(" + c + ")*e" + std::to_string(i + 1);
        if (!first && term[0] != '-') os << "+";
        os << term;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

ParametricElement family_from_literal(const Quandle& q, const std::string& text) {
    FamilyLiteral lit = parse_family(text, q.size());
    ParametricElement fam;
    fam.q = &q;
    fam.params = lit.params;
    fam.coeffs = lit.coeffs;
    return fam;
}

bool verify_family(const ParametricElement& fam) {
    auto u = fam.as_ring_element();
    if (!(mul(u, u) == u)) return false;
    return true;
}

std::vector<ParametricElement> covering_family_r2n(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 3");
    static std::map<int, Quandle> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, dihedral_quandle(2 * n)).first;
    const Quandle& r2n = it->second;

    std::vector<ParametricElement> fams;
    for (int j = 0; j < n; ++j) {
        ParametricElement fam;
        fam.q = &r2n;
        fam.params.push_back("b");
        for (int i = 0; i < n; ++i) fam.params.push_back("a" + std::to_string(i));
        fam.coeffs.assign(size_t(2 * n), Polynomial());
        Polynomial b = Polynomial::variable("b");
        fam.coeffs[size_t(j)] += b;
        fam.coeffs[size_t(n + j)] += Polynomial(1) - b;
        for (int i = 0; i < n; ++i) {
            Polynomial ai = Polynomial::variable("a" + std::to_string(i));
            int k = ((2 * j - i) % (2 * n) + 2 * n) % (2 * n);
            fam.coeffs[size_t(i)] += ai;
            fam.coeffs[size_t(n + i)] -= ai;
            fam.coeffs[size_t(k)] += ai;
            fam.coeffs[size_t((k + n) % (2 * n))] -= ai;
        }
        fams.push_back(std::move(fam));
    }
    return fams;
}

// --- mod-2 scan ---------------------------------------------------------------

uint32_t mod2_square(const Quandle& q, uint32_t mask) {
    uint32_t sq = 0;
    for (uint32_t mx = mask; mx; mx &= mx - 1) {
        int x = std::countr_zero(mx);
        for (uint32_t my = mask; my; my &= my - 1) {
            int y = std::countr_zero(my);
            sq ^= uint32_t(1) << q.op(x, y);
        }
    }
    return sq;
}

static void sort_masks(std::vector<uint32_t>& v) {
    std::sort(v.begin(), v.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
}

Mod2Set enumerate_mod2(const Quandle& q, Exec exec) {
    if (q.size() > 25)
        throw ResourceLimitError("mod-2 scan needs 2^n masks; order > 25 refused");
    const uint32_t top = uint32_t(1) << q.size();
    Mod2Set out;
    out.q = &q;
    if (exec == Exec::parallel) {
#ifdef _OPENMP
        std::vector<std::vector<uint32_t>> local;
        #pragma omp parallel
        {
            #pragma omp single
            local.resize(size_t(omp_get_num_threads()));
            std::vector<uint32_t>& mine = local[size_t(omp_get_thread_num())];
            #pragma omp for schedule(dynamic, 4096)
            for (int64_t m = 1; m < int64_t(top); ++m)
                if (mod2_square(q, uint32_t(m)) == uint32_t(m)) mine.push_back(uint32_t(m));
        }
        for (auto& v : local)
            out.masks.insert(out.masks.end(), v.begin(), v.end());
        sort_masks(out.masks);
        return out;
#endif
    }
    for (uint32_t m = 1; m < top; ++m)
        if (mod2_square(q, m) == m) out.masks.push_back(m);
    sort_masks(out.masks);
    return out;
}

Mod2Set enumerate_mod2_reference(const Quandle& q) {
    if (q.size() > 20)
        throw ResourceLimitError("reference mod-2 scan refused above order 20");
    const uint32_t top = uint32_t(1) << q.size();
    Mod2Set out;
    out.q = &q;
    for (uint32_t m = 1; m < top; ++m) {
        RingElement<GF2> u(q);
        for (int i = 0; i < q.size(); ++i)
            if (m & (uint32_t(1) << i)) u.c[size_t(i)] = GF2(1);
        if (is_idempotent(u)) out.masks.push_back(m);
    }
    sort_masks(out.masks);
    return out;
}

std::string mask_str(uint32_t mask) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (mask & (uint32_t(1) << i)) {
            if (!first) os << "+";
            os << "e" << i + 1;
            first = false;
        }
    return first ? "0" : os.str();
}

uint32_t parse_mask(const std::string& text, int order) {
    auto coeffs = parse_element(text, order);
    uint32_t m = 0;
    for (int i = 0; i < order; ++i) {
        Rat c = coeffs[size_t(i)];
        if (c == 0) continue;
        if (c != 1) throw ParseError("mod-2 element literals use coefficient 1: " + text);
        m |= uint32_t(1) << i;
    }
    return m;
}

std::vector<std::string> Mod2Set::element_strings() const {
    std::vector<std::string> out;
    out.reserve(masks.size());
    for (uint32_t m : masks) out.push_back(mask_str(m));
    return out;
}

std::vector<std::string> RationalSet::element_strings() const {
    std::vector<std::string> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(element_str(e));
    return out;
}

// --- shared search helpers ------------------------------------------------------

namespace {

struct PairLists {
    int n;
    // for each z, the (x, y) with x*y = z
    std::vector<std::vector<std::pair<int, int>>> by_z;
    explicit PairLists(const Quandle& q) : n(q.size()), by_z(size_t(q.size())) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                by_z[size_t(q.op(x, y))].emplace_back(x, y);
    }
};

bool leaf_is_idempotent(const PairLists& pl, const std::vector<int64_t>& p, int64_t den) {
    for (int z = 0; z < pl.n; ++z) {
        int64_t acc = 0;
        for (auto [x, y] : pl.by_z[size_t(z)]) acc += p[size_t(x)] * p[size_t(y)];
        if (acc != den * p[size_t(z)]) return false;
    }
    return true;
}

void sort_canonical(std::vector<std::vector<Rat>>& elems) {
    auto l1 = [](const std::vector<Rat>& v) {
        Rat s(0);
        for (const auto& c : v) s += abs(c);
        return s;
    };
    auto support = [](const std::vector<Rat>& v) {
        int k = 0;
        for (const auto& c : v)
            if (c != 0) ++k;
        return k;
    };
    // support size, then L1 norm, then reverse-lexicographic: basis elements
    // come out as e1, e2, ... followed by the small combinations
    std::sort(elems.begin(), elems.end(), [&](const auto& a, const auto& b) {
        int sa = support(a), sb = support(b);
        if (sa != sb) return sa < sb;
        Rat la = l1(a), lb = l1(b);
        if (la != lb) return la < lb;
        return b < a;
    });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

// Parity patterns (coefficients mod 2) that the idempotency system admits;
// rejects most leaves with one table lookup.
struct ParityFilter {
    int n = 0;
    std::vector<uint8_t> full; // indexed by n-bit pattern
    bool active = false;

    ParityFilter(const Quandle& q, int64_t den) {
        n = q.size();
        if (n > 16) return;
        PairLists pl(q);
        full.assign(size_t(1) << n, 0);
        std::vector<int64_t> p;
        p.resize(size_t(n));
        for (uint32_t m = 0; m < (uint32_t(1) << n); ++m) {
            for (int i = 0; i < n; ++i) p[size_t(i)] = (m >> i) & 1;
            bool ok = true;
            for (int z = 0; z < n && ok; ++z) {
                int64_t acc = 0;
                for (auto [x, y] : pl.by_z[size_t(z)]) acc += p[size_t(x)] * p[size_t(y)];
                if (((acc - den * p[size_t(z)]) & 1) != 0) ok = false;
            }
            full[m] = ok ? 1 : 0;
        }
        active = true;
    }

    // admissible partial parities after the first `assigned` coordinates of
    // the given coordinate order
    std::vector<std::vector<uint8_t>> prefix_tables(const std::vector<int>& order) const {
        std::vector<std::vector<uint8_t>> pref(order.size() + 1);
        if (!active) return pref;
        for (size_t k = 0; k <= order.size(); ++k) {
            uint32_t assigned = 0;
            for (size_t i = 0; i < k; ++i) assigned |= uint32_t(1) << order[i];
            std::vector<uint8_t> tab(size_t(1) << n, 0);
            for (uint32_t m = 0; m < (uint32_t(1) << n); ++m)
                if (full[m]) tab[m & assigned] = 1;
            pref[k] = std::move(tab);
        }
        return pref;
    }
};

} // namespace

// --- bounded integral search ---------------------------------------------------

namespace {

struct IntegralSearch {
    const Quandle& q;
    const PairLists pl;
    long B;
    std::vector<std::vector<Rat>> found;

    IntegralSearch(const Quandle& quandle, long bound) : q(quandle), pl(quandle), B(bound) {}

    void emit(const std::vector<int64_t>& p) {
        std::vector<Rat> v(p.size());
        for (size_t i = 0; i < p.size(); ++i) v[i] = Rat(long(p[i]));
        found.push_back(std::move(v));
    }

    // L1 shell descent: coordinates take |value| <= budget left, the last one
    // absorbs the rest; partial-sum interval must still reach {0, 1}.
    void dfs(std::vector<int64_t>& p, int i, long budget, long sum) {
        const int n = q.size();
        if (i == n - 1) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                int64_t v = sgn ? -budget : budget;
                if (v == 0 && sgn) break;
                long s = sum + long(v);
                if (s != 0 && s != 1) continue;
                p[size_t(i)] = v;
                bool zero = std::all_of(p.begin(), p.end(), [](int64_t c) { return c == 0; });
                if (!zero && leaf_is_idempotent(pl, p, 1)) emit(p);
            }
            p[size_t(i)] = 0;
            return;
        }
        long rest = long(std::min<long>(B, budget)) * (n - 1 - i);
        for (int64_t v = -std::min<long>(B, budget); v <= std::min<long>(B, budget); ++v) {
            long s = sum + long(v);
            long rem = budget - long(std::llabs(v));
            if (rem > rest) continue; // cannot spend the rest of the shell
            if (s - rem > 1 || s + rem < 0) continue;
            p[size_t(i)] = v;
            dfs(p, i + 1, rem, s);
        }
        p[size_t(i)] = 0;
    }

    void run_shells(long lo, long hi) {
        std::vector<int64_t> p(size_t(q.size()), 0);
        for (long shell = lo; shell <= hi; ++shell) dfs(p, 0, shell, 0);
    }
};

} // namespace

RationalSet search_integral(const Quandle& q, long bound, Exec exec) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    const int n = q.size();
    double space = std::pow(2.0 * double(bound) + 1.0, n);
    if (space > 4e9) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "integral search space ~%.2e nodes", space);
        throw ResourceLimitError(buf);
    }
    RationalSet out;
    out.q = &q;
    out.ring = RingTag::Integers;
    out.bound = bound;
    out.denom = 1;

    if (exec == Exec::parallel) {
#ifdef _OPENMP
        long total = bound * n;
        std::vector<std::vector<std::vector<Rat>>> parts;
        parts.resize(size_t(total + 1));
        #pragma omp parallel for schedule(dynamic)
        for (long shell = 1; shell <= total; ++shell) {
            IntegralSearch s(q, bound);
            s.run_shells(shell, shell);
            parts[size_t(shell)] = std::move(s.found);
        }
        for (auto& v : parts)
            out.elems.insert(out.elems.end(), v.begin(), v.end());
        sort_canonical(out.elems);
        return out;
#endif
    }
    IntegralSearch s(q, bound);
    s.run_shells(1, bound * n);
    out.elems = std::move(s.found);
    sort_canonical(out.elems);
    return out;
}

RationalSet search_integral_reference(const Quandle& q, long bound) {
    const int n = q.size();
    double space = std::pow(2.0 * double(bound) + 1.0, n);
    if (space > 2e6) throw ResourceLimitError("reference search is for tiny bounds");
    RationalSet out;
    out.q = &q;
    out.ring = RingTag::Integers;
    out.bound = bound;
    out.denom = 1;
    std::vector<long> p(size_t(n), -bound);
    while (true) {
        ZElement u(q);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            u.c[size_t(i)] = Int(p[size_t(i)]);
            if (p[size_t(i)] != 0) zero = false;
        }
        if (!zero && is_idempotent(u)) {
            std::vector<Rat> v;
            v.resize(size_t(n));
            for (int i = 0; i < n; ++i) v[size_t(i)] = Rat(p[size_t(i)]);
            out.elems.push_back(std::move(v));
        }
        int i = 0;
        while (i < n && ++p[size_t(i)] > bound) {
            p[size_t(i)] = -bound;
            ++i;
        }
        if (i == n) break;
    }
    sort_canonical(out.elems);
    return out;
}

// --- bounded rational search -----------------------------------------------------

namespace {

// One enumeration task: a common denominator and a prescribed vector of
// class sums for the numerators.
struct RationalTask {
    int64_t den;
    std::vector<int64_t> class_sums;
};

struct RationalSearchPlan {
    std::vector<std::vector<int>> fibers; // coordinate classes
    std::vector<int> order;               // coordinates fiber by fiber
    std::vector<RationalTask> tasks;
};

void enumerate_task(const Quandle& q, const PairLists& pl, const RationalSearchPlan& plan,
                    const std::vector<std::vector<uint8_t>>& parity_prefix,
                    const RationalTask& task, long N,
                    std::vector<std::vector<Rat>>& out) {
    const int n = q.size();
    std::vector<int64_t> p(size_t(n), 0);
    const bool use_parity = !parity_prefix.empty() && !parity_prefix[0].empty();

    // DFS over the fiber-ordered coordinates; within each fiber the last
    // coordinate is forced by the class sum.
    std::function<void(size_t, size_t, int64_t, uint32_t)> go =
        [&](size_t fiber, size_t pos, int64_t remaining, uint32_t parity) {
        if (fiber == plan.fibers.size()) {
            bool zero = std::all_of(p.begin(), p.end(), [](int64_t c) { return c == 0; });
            if (!zero && leaf_is_idempotent(pl, p, task.den)) {
                std::vector<Rat> v;
                v.resize(size_t(n));
                for (int i = 0; i < n; ++i) {
                    v[size_t(i)] = Rat(long(p[size_t(i)]));
                    v[size_t(i)] /= long(task.den);
                }
                out.push_back(std::move(v));
            }
            return;
        }
        const auto& fib = plan.fibers[fiber];
        size_t depth_before = 0;
        for (size_t f = 0; f < fiber; ++f) depth_before += plan.fibers[f].size();
        if (pos + 1 == fib.size()) {
            int64_t v = remaining;
            if (std::llabs(v) > N) return;
            int coord = fib[pos];
            p[size_t(coord)] = v;
            uint32_t par = parity | (uint32_t(v & 1) << coord);
            size_t depth = depth_before + fib.size();
            if (use_parity && !parity_prefix[depth][par]) {
                p[size_t(coord)] = 0;
                return;
            }
            go(fiber + 1, 0, fiber + 1 < plan.fibers.size()
                                   ? task.class_sums[fiber + 1]
                                   : 0,
               par);
            p[size_t(coord)] = 0;
            return;
        }
        size_t left = fib.size() - pos - 1; // coordinates after this one
        int coord = fib[pos];
        for (int64_t v = -N; v <= N; ++v) {
            int64_t rem = remaining - v;
            if (std::llabs(rem) > int64_t(left) * N) continue;
            p[size_t(coord)] = v;
            uint32_t par = parity | (uint32_t(v & 1) << coord);
            size_t depth = depth_before + pos + 1;
            if (use_parity && !parity_prefix[depth][par & ((uint32_t(1) << n) - 1)]) continue;
            go(fiber, pos + 1, rem, par);
        }
        p[size_t(coord)] = 0;
    };
    go(0, 0, task.class_sums.empty() ? 0 : task.class_sums[0], 0);
}

} // namespace

RationalSet search_rational(const Quandle& q, long bound, long denom, Exec exec) {
    if (bound < 1 || denom < 1) throw std::invalid_argument("bounds must be >= 1");
    const int n = q.size();
    const long N = bound * denom;
    if (double(N) > 1e5 || double(n) * n * N * N > 8e18)
        throw ResourceLimitError("numerator bound too large for exact 64-bit scan");

    RationalSet out;
    out.q = &q;
    out.ring = RingTag::Rationals;
    out.bound = bound;
    out.denom = denom;

    if (n == 1) {
        out.elems = {{Rat(1)}};
        return out;
    }

    // Partition by the congruence with the most classes; the one-class
    // partition (augmentation constraint only) is the fallback.
    std::vector<int> classes(size_t(n), 0);
    int nclasses = 1;
    for (const auto& cand : proper_congruences(q)) {
        int k = *std::max_element(cand.begin(), cand.end()) + 1;
        if (k > nclasses) {
            nclasses = k;
            classes = cand;
        }
    }

    RationalSearchPlan plan;
    plan.fibers.assign(size_t(nclasses), {});
    for (int i = 0; i < n; ++i) plan.fibers[size_t(classes[size_t(i)])].push_back(i);
    for (const auto& f : plan.fibers)
        plan.order.insert(plan.order.end(), f.begin(), f.end());
    size_t maxfiber = 0;
    for (const auto& f : plan.fibers) maxfiber = std::max(maxfiber, f.size());

    // Admissible class sums: d times an idempotent of the quotient ring, or
    // zero (the pushforward of an idempotent along the quotient map is an
    // idempotent or zero).
    std::vector<std::vector<Rat>> quotient_idems;
    if (nclasses == 1) {
        quotient_idems = {{Rat(1)}};
    } else {
        Quandle Y = quotient_quandle(q, classes);
        long by = long((maxfiber * size_t(N) + size_t(denom) - 1) / size_t(denom));
        RationalSet iy = search_rational(Y, std::max(1L, by), denom, exec);
        quotient_idems = iy.elems;
    }

    double est = 0;
    for (int64_t d = 1; d <= denom; ++d) {
        size_t cands = 1; // the zero pushforward
        for (const auto& w : quotient_idems) {
            bool ok = true;
            for (size_t j = 0; j < w.size() && ok; ++j) {
                Rat s = w[j] * d;
                if (s.get_den() != 1) ok = false;
                else if (abs(s.get_num()) > long(plan.fibers[j].size()) * N) ok = false;
            }
            if (ok) ++cands;
        }
        double per = 1;
        for (const auto& f : plan.fibers)
            per *= std::pow(2.0 * double(N) + 1.0, double(f.size()) - 1.0);
        est += double(cands) * per;
    }
    if (est > 2e10) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "rational search estimated ~%.2e nodes; tighten the bounds", est);
        throw ResourceLimitError(buf);
    }

    PairLists pl(q);
    std::vector<RationalTask> tasks;
    for (int64_t d = 1; d <= denom; ++d) {
        std::set<std::vector<int64_t>> sums;
        sums.insert(std::vector<int64_t>(size_t(nclasses), 0));
        for (const auto& w : quotient_idems) {
            std::vector<int64_t> s;
            s.resize(size_t(nclasses));
            bool ok = true;
            for (size_t j = 0; j < w.size() && ok; ++j) {
                Rat v = w[j] * d;
                if (v.get_den() != 1) { ok = false; break; }
                Int num = v.get_num();
                if (abs(num) > long(plan.fibers[j].size()) * N) { ok = false; break; }
                s[j] = int64_t(num.get_si());
            }
            if (ok) sums.insert(std::move(s));
        }
        for (auto& s : sums) tasks.push_back(RationalTask{d, s});
    }

    // the admissible coefficient parities depend on the denominator only
    // through its own parity
    std::vector<std::vector<std::vector<uint8_t>>> prefix_by_parity(2);
    for (int par = 0; par < 2; ++par) {
        bool used = false;
        for (const auto& t : tasks)
            if ((t.den & 1) == par) used = true;
        if (!used) continue;
        ParityFilter pf(q, par);
        if (pf.active) prefix_by_parity[size_t(par)] = pf.prefix_tables(plan.order);
    }

    std::vector<std::vector<std::vector<Rat>>> parts(tasks.size());
    auto run_one = [&](size_t ti) {
        enumerate_task(q, pl, plan, prefix_by_parity[size_t(tasks[ti].den & 1)],
                       tasks[ti], N, parts[ti]);
    };
    if (exec == Exec::parallel) {
#ifdef _OPENMP
        #pragma omp parallel for schedule(dynamic)
        for (size_t ti = 0; ti < tasks.size(); ++ti) run_one(ti);
#else
        for (size_t ti = 0; ti < tasks.size(); ++ti) run_one(ti);
#endif
    } else {
        for (size_t ti = 0; ti < tasks.size(); ++ti) run_one(ti);
    }

    std::set<std::vector<Rat>> dedup;
    for (auto& part : parts)
        for (auto& v : part) dedup.insert(std::move(v));
    out.elems.assign(dedup.begin(), dedup.end());

    // exact confirmation of every survivor
    for (const auto& v : out.elems) {
        QElement u = q_element(q, v);
        if (!is_idempotent(u))
            throw std::logic_error("search produced a non-idempotent");
    }
    sort_canonical(out.elems);
    return out;
}

RationalSet search_bounded(const Quandle& q, RingTag ring, long bound, long denom, Exec exec) {
    switch (ring) {
        case RingTag::Integers:
            return search_integral(q, bound, exec);
        case RingTag::Rationals:
            return search_rational(q, bound, denom, exec);
        default:
            throw std::invalid_argument("bounded search works over Z or Q");
    }
}

// --- quandle structure on idempotent sets ----------------------------------------

uint32_t mod2_product(const Quandle& q, uint32_t a, uint32_t b) {
    uint32_t r = 0;
    for (uint32_t mx = a; mx; mx &= mx - 1) {
        int x = std::countr_zero(mx);
        for (uint32_t my = b; my; my &= my - 1) {
            int y = std::countr_zero(my);
            r ^= uint32_t(1) << q.op(x, y);
        }
    }
    return r;
}

namespace {

bool magma_table_is_quandle(const std::vector<std::vector<int>>& t) {
    const int k = int(t.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (t[size_t(i)][size_t(j)] < 0) return false; // not closed
    for (int i = 0; i < k; ++i)
        if (t[size_t(i)][size_t(i)] != i) return false;
    for (int j = 0; j < k; ++j) {
        std::vector<bool> seen(size_t(k), false);
        for (int i = 0; i < k; ++i) {
            int v = t[size_t(i)][size_t(j)];
            if (seen[size_t(v)]) return false;
            seen[size_t(v)] = true;
        }
    }
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z)
                if (t[size_t(t[size_t(x)][size_t(y)])][size_t(z)] !=
                    t[size_t(t[size_t(x)][size_t(z)])][size_t(t[size_t(y)][size_t(z)])])
                    return false;
    return true;
}

} // namespace

std::vector<std::vector<int>> mod2_mul_table(const Mod2Set& s) {
    const int k = int(s.masks.size());
    std::map<uint32_t, int> index;
    for (int i = 0; i < k; ++i) index[s.masks[size_t(i)]] = i;
    std::vector<std::vector<int>> t(size_t(k), std::vector<int>(size_t(k), -1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            uint32_t prod = mod2_product(*s.q, s.masks[size_t(i)], s.masks[size_t(j)]);
            auto it = index.find(prod);
            if (it != index.end()) t[size_t(i)][size_t(j)] = it->second;
        }
    return t;
}

bool is_quandle_under_mul(const Mod2Set& s) {
    return magma_table_is_quandle(mod2_mul_table(s));
}

std::optional<Quandle> mod2_quandle(const Mod2Set& s, std::vector<std::string>* labels) {
    auto t = mod2_mul_table(s);
    if (!magma_table_is_quandle(t)) return std::nullopt;
    if (labels) {
        labels->clear();
        for (size_t i = 0; i < s.masks.size(); ++i)
            labels->push_back("u" + std::to_string(i + 1));
    }
    return Quandle::from_table(t, "I(Z2[" + s.q->name() + "])");
}

bool is_quandle_under_mul(const Quandle& q, const std::vector<std::vector<Rat>>& elems) {
    const int k = int(elems.size());
    std::map<std::vector<Rat>, int> index;
    for (int i = 0; i < k; ++i) index[elems[size_t(i)]] = i;
    std::vector<std::vector<int>> t(size_t(k), std::vector<int>(size_t(k), -1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            QElement prod = mul(q_element(q, elems[size_t(i)]), q_element(q, elems[size_t(j)]));
            auto it = index.find(prod.c);
            if (it != index.end()) t[size_t(i)][size_t(j)] = it->second;
        }
    return magma_table_is_quandle(t);
}

// --- symbolic quandle check for affine families -----------------------------------

namespace {

struct AffineFamily {
    std::vector<Rat> base;               // length n
    std::vector<std::vector<Rat>> dirs;  // one direction vector per parameter
    std::vector<std::string> params;
};

AffineFamily extract_affine(const ParametricElement& fam) {
    AffineFamily a;
    a.params = fam.params;
    const int n = int(fam.coeffs.size());
    a.base.resize(size_t(n));
    a.dirs.assign(fam.params.size(), std::vector<Rat>(size_t(n)));
    for (int i = 0; i < n; ++i) {
        const Polynomial& p = fam.coeffs[size_t(i)];
        if (!p.is_affine())
            throw std::invalid_argument("family is not affine in its parameters");
        a.base[size_t(i)] = p.constant_term();
        for (size_t j = 0; j < fam.params.size(); ++j)
            a.dirs[j][size_t(i)] = p.linear_coeff(fam.params[j]);
    }
    return a;
}

// Solve sum_j t_j dirs[j] = rhs (rhs has polynomial entries); Gauss-Jordan on
// the constant direction matrix.  Returns parameters (free ones set to zero)
// or nothing when inconsistent.
std::optional<std::vector<Polynomial>> solve_affine(const AffineFamily& target,
                                                    std::vector<Polynomial> rhs) {
    const size_t n = target.base.size();
    const size_t d = target.dirs.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(d));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < n; ++i) m[i][j] = target.dirs[j][i];

    std::vector<int> pivot_of_col(d, -1);
    size_t row = 0;
    for (size_t col = 0; col < d && row < n; ++col) {
        size_t pr = row;
        while (pr < n && m[pr][col] == 0) ++pr;
        if (pr == n) continue;
        std::swap(m[pr], m[row]);
        std::swap(rhs[pr], rhs[row]);
        Rat inv = 1 / m[row][col];
        for (size_t j = col; j < d; ++j) m[row][j] *= inv;
        rhs[row] = Polynomial(inv) * rhs[row];
        for (size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t j = col; j < d; ++j) m[r][j] -= f * m[row][j];
            rhs[r] -= Polynomial(f) * rhs[row];
        }
        pivot_of_col[col] = int(row);
        ++row;
    }
    for (size_t r = row; r < n; ++r)
        if (!rhs[r].is_zero()) return std::nullopt;
    // rows above `row` with zero matrix part must be zero too (can happen
    // when pivots skipped columns)
    for (size_t r = 0; r < row; ++r) {
        bool all_zero = std::all_of(m[r].begin(), m[r].end(), [](const Rat& x) { return x == 0; });
        if (all_zero && !rhs[r].is_zero()) return std::nullopt;
    }
    std::vector<Polynomial> t(d, Polynomial());
    for (size_t col = 0; col < d; ++col)
        if (pivot_of_col[col] >= 0) t[col] = rhs[size_t(pivot_of_col[col])];
    return t;
}

std::vector<Polynomial> family_minus_base(const RingElement<Polynomial>& prod,
                                          const AffineFamily& target) {
    std::vector<Polynomial> rhs(prod.c.size());
    for (size_t i = 0; i < prod.c.size(); ++i)
        rhs[i] = prod.c[i] - Polynomial(target.base[i]);
    return rhs;
}

ParametricElement renamed(const ParametricElement& fam, const std::string& prefix) {
    std::map<std::string, std::string> ren;
    ParametricElement r = fam;
    r.params.clear();
    for (const auto& p : fam.params) {
        ren[p] = prefix + p;
        r.params.push_back(prefix + p);
    }
    for (auto& c : r.coeffs) c = c.rename(ren);
    return r;
}

// determinant of a small polynomial matrix by Laplace expansion
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const size_t d = m.size();
    if (d == 0) return Polynomial(1);
    if (d == 1) return m[0][0];
    Polynomial det;
    std::vector<std::vector<Polynomial>> minor(d - 1, std::vector<Polynomial>(d - 1));
    for (size_t c = 0; c < d; ++c) {
        for (size_t i = 1; i < d; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < d; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        Polynomial term = m[0][c] * poly_det(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

bool parametric_is_quandle(const std::vector<ParametricElement>& families) {
    if (families.empty()) return false;
    const Quandle* q = families[0].q;
    const size_t m = families.size();
    std::vector<AffineFamily> aff;
    std::vector<ParametricElement> left, right;
    for (const auto& f : families) {
        if (f.q != q) throw std::invalid_argument("families over different quandles");
        aff.push_back(extract_affine(f));
        left.push_back(renamed(f, "L_"));
        right.push_back(renamed(f, "R_"));
    }

    // every family must consist of idempotents in the first place
    for (const auto& f : families)
        if (!verify_family(f)) return false;

    // closure: each pairwise product lands in one family, with a parameter
    // map we keep for the bijectivity analysis
    std::vector<std::vector<int>> target(m, std::vector<int>(m, -1));
    std::vector<std::vector<std::vector<Polynomial>>> tmap(
        m, std::vector<std::vector<Polynomial>>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            auto prod = mul(left[i].as_ring_element(), right[j].as_ring_element());
            for (size_t k = 0; k < m; ++k) {
                auto t = solve_affine(aff[k], family_minus_base(prod, aff[k]));
                if (t) {
                    target[i][j] = int(k);
                    tmap[i][j] = *t;
                    break;
                }
            }
            if (target[i][j] < 0) return false;
        }

    // right multiplication by any member of family j must permute the
    // families and act on parameters by an integer affine map with
    // determinant +-1 (a bijection of the integer parameter space)
    for (size_t j = 0; j < m; ++j) {
        std::vector<bool> hit(m, false);
        for (size_t i = 0; i < m; ++i) {
            size_t k = size_t(target[i][j]);
            if (hit[k]) return false;
            hit[k] = true;
            if (aff[k].params.size() != aff[i].params.size()) return false;
            const auto& t = tmap[i][j];
            const auto& pvars = left[i].params;
            size_t d = pvars.size();
            std::vector<std::vector<Polynomial>> A(d, std::vector<Polynomial>(d));
            for (size_t l = 0; l < t.size(); ++l) {
                if (!t[l].has_integer_coeffs()) return false;
                // affine in the left block: no quadratic term in any p-var
                for (const auto& pv : pvars)
                    if (t[l].degree_in(pv) > 1) return false;
                Polynomial check = t[l].drop_vars(pvars);
                for (size_t pm = 0; pm < d; ++pm) {
                    Polynomial c = t[l].coeff_of_linear(pvars[pm]);
                    // the linear part may only depend on the right block
                    for (const auto& pv : pvars)
                        if (c.degree_in(pv) > 0) return false;
                    A[l][pm] = c;
                    check += c * Polynomial::variable(pvars[pm]);
                }
                if (!(check == t[l])) return false; // cross terms among p-vars
            }
            Polynomial det = poly_det(A);
            if (!(det == Polynomial(1) || det == Polynomial(-1))) return false;
        }
    }

    // right distributivity (u v) w = (u w)(v w) symbolically
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < m; ++l) {
                auto u = renamed(families[i], "X_").as_ring_element();
                auto v = renamed(families[j], "Y_").as_ring_element();
                auto w = renamed(families[l], "Z_").as_ring_element();
                if (!(mul(mul(u, v), w) == mul(mul(u, w), mul(v, w)))) return false;
            }
    return true;
}

std::optional<std::map<std::string, Rat>> family_membership(const ParametricElement& fam,
                                                            const std::vector<Rat>& target) {
    AffineFamily a = extract_affine(fam);
    if (a.base.size() != target.size())
        throw std::invalid_argument("dimension mismatch");
    std::vector<Polynomial> rhs(target.size());
    for (size_t i = 0; i < target.size(); ++i)
        rhs[i] = Polynomial(target[i] - a.base[i]);
    auto t = solve_affine(a, std::move(rhs));
    if (!t) return std::nullopt;
    std::map<std::string, Rat> assignment;
    for (size_t j = 0; j < a.params.size(); ++j) {
        if (!(*t)[j].is_constant()) return std::nullopt;
        assignment[a.params[j]] = (*t)[j].constant_term();
    }
    // confirm (solve_affine ignores rows when the matrix is rank deficient)
    for (size_t i = 0; i < target.size(); ++i)
        if (fam.coeffs[i].subst(assignment) != target[i]) return std::nullopt;
    return assignment;
}

// --- augmentation conjecture scan ---------------------------------------------------

AugmentationReport check_augmentation_conjecture(const Quandle& q, long bound,
                                                 const std::vector<ParametricElement>& families,
                                                 Exec exec) {
    AugmentationReport rep;
    rep.bound = bound;
    RationalSet found = search_integral(q, bound, exec);
    for (const auto& v : found.elems) {
        Rat eps(0);
        for (const auto& c : v) eps += c;
        if (eps == 0) {
            rep.all_integral_have_eps_one = false;
            rep.eps_zero_witnesses.push_back(v);
        }
    }
    for (const auto& f : families)
        if (!(f.augmentation_poly() == Polynomial(1))) rep.families_have_eps_one = false;
    return rep;
}

} // namespace qr
