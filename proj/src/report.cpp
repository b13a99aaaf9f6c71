#include "qr/report.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qr/catalog.hpp"
#include "qr/links.hpp"
#include "qr/peirce.hpp"

namespace qr {

namespace {

struct Suite {
    const ReproOptions& opts;
    std::vector<CheckResult> results;

    bool wanted(const std::string& group) const {
        if (opts.only.empty()) return true;
        return std::find(opts.only.begin(), opts.only.end(), group) != opts.only.end();
    }

    void add(int criterion, const std::string& group, const std::string& name,
             bool pass, std::string detail) {
        results.push_back({criterion, group, name, pass, std::move(detail)});
    }

    Rat random_rat(std::mt19937_64& rng, int num_range, int den_range) {
        std::uniform_int_distribution<int> num(-num_range, num_range);
        std::uniform_int_distribution<int> den(1, den_range);
        Rat r(num(rng));
        r /= den(rng);
        return r;
    }

    // ---- criterion 1: the mod-2 idempotent tables -------------------------

    void mod2_tables() {
        if (!wanted("tables")) return;
        for (int order : {3, 4, 5}) {
            std::ostringstream bad;
            bool ok = true;
            for (const auto& e : catalog(order)) {
                Mod2Set s = enumerate_mod2(e.quandle, opts.exec);
                if (s.masks != e.z2_idempotents) {
                    ok = false;
                    bad << " " << e.quandle.name() << ": set mismatch;";
                }
                if (is_quandle_under_mul(s) != e.z2_quandle) {
                    ok = false;
                    bad << " " << e.quandle.name() << ": flag mismatch;";
                }
            }
            add(1, "tables", "mod-2 idempotent sets and flags, order " + std::to_string(order),
                ok, ok ? std::to_string(catalog(order).size()) + " rows match" : bad.str());
        }
    }

    // ---- criterion 2: the five-element medial quandle ----------------------

    void medial_five() {
        if (!wanted("medial-five")) return;
        const auto& entry = catalog(5)[size_t(catalog_index_of_medial_five())];
        Mod2Set s = enumerate_mod2(entry.quandle, opts.exec);
        bool ten = s.masks.size() == 10 && s.masks == entry.z2_idempotents;
        add(2, "medial-five", "ten mod-2 idempotents", ten,
            "found " + std::to_string(s.masks.size()));
        auto iq = mod2_quandle(s);
        bool quandle_ok = iq.has_value() && is_medial(*iq);
        add(2, "medial-five", "idempotents form a medial quandle", quandle_ok, "");
        bool table_ok = iq.has_value() && iq->table() == expected_idempotent_quandle_table();
        add(2, "medial-five", "ten-by-ten multiplication table matches", table_ok, "");
    }

    // ---- criterion 3: latin quandles have only trivial integral idempotents

    bool only_trivial(const RationalSet& s) {
        const int n = s.q->size();
        if (int(s.elems.size()) != n) return false;
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> e(size_t(n), Rat(0));
            e[size_t(i)] = 1;
            if (std::find(s.elems.begin(), s.elems.end(), e) == s.elems.end()) return false;
        }
        return true;
    }

    void latin_trivial() {
        if (!wanted("latin-trivial")) return;
        Quandle r3 = dihedral_quandle(3);
        RationalSet s = search_integral(r3, 10, opts.exec);
        add(3, "latin-trivial", "R3 integral search, bound 10", only_trivial(s),
            std::to_string(s.elems.size()) + " idempotents");
        for (int order : {3, 4, 5})
            for (const auto& e : catalog(order)) {
                if (!is_latin(e.quandle)) continue;
                RationalSet t = search_integral(e.quandle, 5, opts.exec);
                add(3, "latin-trivial", e.quandle.name() + " integral search, bound 5",
                    only_trivial(t), std::to_string(t.elems.size()) + " idempotents");
            }
    }

    // ---- criterion 4: commutative quandle has 2^n - 1 mod-2 idempotents ----

    void commutative_count() {
        if (!wanted("commutative")) return;
        Quandle r3 = dihedral_quandle(3);
        bool comm = is_commutative(r3);
        Mod2Set s = enumerate_mod2(r3, opts.exec);
        bool ok = comm && s.masks.size() == (size_t(1) << r3.size()) - 1;
        add(4, "commutative", "commutative order-3 quandle has 2^3-1 mod-2 idempotents",
            ok, std::to_string(s.masks.size()) + " found");
    }

    // ---- criterion 5: covering families over R6 -----------------------------

    void covering_families() {
        if (!wanted("covering-families")) return;
        auto fams = covering_family_r2n(3);
        bool sym = fams.size() == 3;
        for (const auto& f : fams) sym = sym && verify_family(f);
        add(5, "covering-families", "three families verify symbolically", sym, "");

        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<size_t> pick(0, fams.size() - 1);
        bool inst_ok = true;
        for (int trial = 0; trial < 200 && inst_ok; ++trial) {
            const auto& fam = fams[pick(rng)];
            std::map<std::string, Rat> asg;
            for (const auto& p : fam.params) asg[p] = random_rat(rng, 6, 4);
            QElement u = fam.instantiate(asg);
            if (u.is_zero()) { --trial; continue; }
            if (!is_idempotent(u)) inst_ok = false;
        }
        add(5, "covering-families", "200 random rational instantiations are idempotent",
            inst_ok, "");
    }

    // ---- criterion 6: printed integral families are sound and cover B=3 ----

    void z_families() {
        if (!wanted("z-families")) return;
        bool sound = true;
        std::ostringstream bad;
        for (int order : {3, 4, 5})
            for (const auto& e : catalog(order))
                for (const auto& f : e.z_families)
                    if (!verify_family(f)) {
                        sound = false;
                        bad << " " << e.quandle.name();
                    }
        add(6, "z-families", "every printed family squares to itself", sound, bad.str());

        bool covered = true;
        std::ostringstream miss;
        for (int order : {3, 4, 5})
            for (const auto& e : catalog(order)) {
                RationalSet s = search_integral(e.quandle, 3, opts.exec);
                for (const auto& v : s.elems) {
                    bool member = false;
                    for (const auto& f : e.z_families)
                        if (family_membership(f, v)) { member = true; break; }
                    if (!member) {
                        covered = false;
                        miss << " " << e.quandle.name() << ":" << element_str(v);
                    }
                }
            }
        add(6, "z-families", "every integral idempotent at bound 3 instantiates a family",
            covered, miss.str());
    }

    // ---- criterion 7: coloring counts ---------------------------------------

    void colorings() {
        if (!wanted("colorings")) return;
        Quandle r6 = dihedral_quandle(6);
        ColoringTarget t6 = target_from_quandle(r6);
        long c7 = count_colorings(builtin_presentation("l4a1-0-r2"), t6, opts.exec);
        long c8 = count_colorings(builtin_presentation("l5a1-1-r2"), t6, opts.exec);
        add(7, "colorings", "two-bridge counts into R6 are 12 and 12",
            c7 == 12 && c8 == 12, std::to_string(c7) + ", " + std::to_string(c8));

        const Quandle& x = catalog(5)[size_t(catalog_index_of_medial_five())].quandle;
        ColoringTarget tx = target_from_quandle(x);
        long c9 = count_colorings(builtin_presentation("l2a1-0"), tx, opts.exec);
        long c11 = count_colorings(builtin_presentation("l4a1-1-r2"), tx, opts.exec);
        add(7, "colorings", "counts into the medial five-element quandle are 13 and 13",
            c9 == 13 && c11 == 13, std::to_string(c9) + ", " + std::to_string(c11));

        Mod2Set s = enumerate_mod2(x, opts.exec);
        ColoringTarget ti = target_from_mod2_set(s);
        long c68 = count_colorings(builtin_presentation("l2a1-0"), ti, opts.exec);
        long c76 = count_colorings(builtin_presentation("l4a1-1-r2"), ti, opts.exec);
        add(7, "colorings", "counts into its idempotent quandle are 68 and 76",
            c68 == 68 && c76 == 76, std::to_string(c68) + ", " + std::to_string(c76));
    }

    // ---- criterion 8: hom quandle isomorphisms -------------------------------

    void hom_quandles() {
        if (!wanted("hom-quandles")) return;
        Quandle r6 = dihedral_quandle(6);
        HomQuandle h1 = hom_quandle(builtin_presentation("l4a1-0-r2"), r6);
        HomQuandle h2 = hom_quandle(builtin_presentation("l5a1-1-r2"), r6);
        bool ok = h1.quandle.size() == 12 && h2.quandle.size() == 12 &&
                  is_medial(h1.quandle) && is_medial(h2.quandle) &&
                  is_isomorphic(h1.quandle, h2.quandle).has_value();
        add(8, "hom-quandles", "hom quandles into R6 are isomorphic (12 elements, medial)",
            ok, std::to_string(h1.quandle.size()) + ", " + std::to_string(h2.quandle.size()));

        const Quandle& x = catalog(5)[size_t(catalog_index_of_medial_five())].quandle;
        HomQuandle g1 = hom_quandle(builtin_presentation("l2a1-0"), x);
        HomQuandle g2 = hom_quandle(builtin_presentation("l4a1-1-r2"), x);
        bool ok2 = g1.quandle.size() == 13 && g2.quandle.size() == 13 &&
                   is_medial(g1.quandle) && is_medial(g2.quandle) &&
                   is_isomorphic(g1.quandle, g2.quandle).has_value();
        add(8, "hom-quandles", "hom quandles into the five-element quandle are isomorphic "
            "(13 elements, medial)", ok2,
            std::to_string(g1.quandle.size()) + ", " + std::to_string(g2.quandle.size()));
    }

    // ---- criterion 9: ring-relation structure --------------------------------

    void enhancement() {
        if (!wanted("enhancement")) return;
        auto fams = covering_family_r2n(3);
        std::vector<Rat> grid = {Rat(-1), Rat(0), Rat(1)};
        EnhancementReport rep = enhancement_report(builtin_presentation("l4a1-0-r2"),
                                                   builtin_presentation("l5a1-1-r2"),
                                                   fams, grid);
        const auto& cross = rep.category("cross_family");
        add(9, "enhancement", "cross-family pairs fail the first relation of both presentations",
            cross.pairs > 0 && cross.p1_by_rel[0] == 0 && cross.p2_by_rel[0] == 0,
            std::to_string(cross.pairs) + " pairs");
        const auto& same = rep.category("same_family");
        add(9, "enhancement", "same-family pairs satisfy all relations of both presentations",
            same.pairs > 0 && same.p1_all == same.pairs && same.p2_all == same.pairs,
            std::to_string(same.pairs) + " pairs");
        const auto& fz = rep.category("first_zero");
        const auto& sz = rep.category("second_zero");
        bool zero_ok = fz.p1_all == 0 && fz.p2_all == fz.pairs &&
                       sz.p1_all == sz.pairs && sz.p2_all == sz.pairs &&
                       rep.p2_admits_zero_first_nonzero_second &&
                       !rep.p1_admits_zero_first_nonzero_second;
        add(9, "enhancement", "zero assignments separate the two presentations", zero_ok,
            "first_zero satisfied: " + std::to_string(fz.p1_all) + " vs " +
                std::to_string(fz.p2_all));
    }

    // ---- criterion 10: trace identity and order-3 spectra ---------------------

    void spectra() {
        if (!wanted("spectra")) return;
        std::mt19937_64 rng(opts.seed + 1);
        bool trace_ok = true;
        for (int order : {3, 4, 5})
            for (const auto& e : catalog(order)) {
                bool latin = is_latin(e.quandle);
                for (int trial = 0; trial < 500 && trace_ok; ++trial) {
                    QElement u(e.quandle);
                    for (auto& c : u.c) c = random_rat(rng, 9, 9);
                    auto [tr, fix, eps] = trace_check(e.quandle, u);
                    if (tr != fix) trace_ok = false;
                    if (latin && tr != eps) trace_ok = false;
                }
            }
        add(10, "spectra", "trace identity on 500 random elements per catalog quandle",
            trace_ok, "");

        // the latin order-3 quandle: exactly the seven known idempotents
        const Quandle& r3 = catalog(3)[2].quandle;
        RationalSet s3 = search_rational(r3, 3, 3, opts.exec);
        std::set<std::vector<Rat>> expect;
        for (int i = 0; i < 3; ++i) {
            std::vector<Rat> e(3, Rat(0));
            e[size_t(i)] = 1;
            expect.insert(e);
        }
        expect.insert(parse_element("(1/3)*e1+(1/3)*e2+(1/3)*e3", 3));
        expect.insert(parse_element("(2/3)*e1-(1/3)*e2-(1/3)*e3", 3));
        expect.insert(parse_element("-(1/3)*e1+(2/3)*e2-(1/3)*e3", 3));
        expect.insert(parse_element("-(1/3)*e1-(1/3)*e2+(2/3)*e3", 3));
        bool latin3 = std::set<std::vector<Rat>>(s3.elems.begin(), s3.elems.end()) == expect;
        add(10, "spectra", "rational idempotents of the latin order-3 quandle",
            latin3, std::to_string(s3.elems.size()) + " found");

        // the non-latin order-3 quandle: instances of its two printed families
        const auto& nl = catalog(3)[1];
        RationalSet snl = search_rational(nl.quandle, 3, 3, opts.exec);
        std::set<std::vector<Rat>> nl_expect;
        for (const auto& fam : nl.z_families)
            for (long d = 1; d <= 3; ++d)
                for (long num = -12; num <= 12; ++num) {
                    std::map<std::string, Rat> asg;
                    Rat t(num);
                    t /= d;
                    for (const auto& p : fam.params) asg[p] = t;
                    QElement u = fam.instantiate(asg);
                    Int lcm(1);
                    bool fits = true;
                    for (const auto& c : u.c) {
                        Int den = c.get_den();
                        Int g;
                        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
                        lcm = lcm / g * den;
                    }
                    if (lcm > 3) fits = false;
                    for (const auto& c : u.c)
                        if (abs(c.get_num() * (lcm / c.get_den())) > 9) fits = false;
                    if (fits) nl_expect.insert(u.c);
                }
        bool nl_ok = std::set<std::vector<Rat>>(snl.elems.begin(), snl.elems.end()) == nl_expect;
        add(10, "spectra", "rational idempotents of the non-latin order-3 quandle",
            nl_ok, std::to_string(snl.elems.size()) + " found, " +
                       std::to_string(nl_expect.size()) + " expected");

        AlgebraSpectrum alg = algebra_spectrum(r3, s3.elems);
        std::vector<Rat> want = {Rat(-1), Rat(0), Rat(1)};
        add(10, "spectra", "algebra spectrum of the latin order-3 quandle is {0,1,-1}",
            alg.eigenvalues == want && !alg.has_residual, "");

        bool family_eigen = true;
        std::vector<Rat> samples = {Rat(0), Rat(1) / Rat(2), Rat(1), Rat(2)};
        for (const Rat& alpha : samples) {
            QElement u(nl.quandle);
            u.c = {alpha, alpha, 1 - 2 * alpha};
            Spectrum sp = rational_spectrum(right_mult_matrix(u));
            std::map<Rat, int> got(sp.eigenvalues.begin(), sp.eigenvalues.end());
            std::map<Rat, int> exp;
            exp[Rat(1)] += 2;
            exp[4 * alpha - 1] += 1;
            if (got != exp || sp.has_residual()) family_eigen = false;
        }
        add(10, "spectra", "one-parameter family shows eigenvalue 4a-1", family_eigen, "");
    }

    // ---- criterion 11: odd dihedral annihilator evidence ------------------------

    void annihilator() {
        if (!wanted("annihilator")) return;
        for (int n : {5, 7, 9}) {
            Quandle rn = dihedral_quandle(n);
            RationalSet s = search_rational(rn, 1, n, opts.exec);
            bool ok = !s.elems.empty();
            for (const auto& v : s.elems)
                if (!annihilator_check(q_element(rn, v))) ok = false;
            add(11, "annihilator",
                "R" + std::to_string(n) + " rational idempotents annihilate x(x-1)(x+1)",
                ok, std::to_string(s.elems.size()) + " idempotents checked");
        }
    }

    // ---- criterion 12: augmentation-one evidence ---------------------------------

    void augmentation_scan() {
        if (!wanted("augmentation")) return;
        bool integral_ok = true, family_ok = true;
        std::ostringstream bad;
        for (int order : {3, 4, 5})
            for (const auto& e : catalog(order)) {
                AugmentationReport rep =
                    check_augmentation_conjecture(e.quandle, 4, e.z_families, opts.exec);
                if (!rep.all_integral_have_eps_one) {
                    integral_ok = false;
                    bad << " " << e.quandle.name();
                }
                if (!rep.families_have_eps_one) {
                    family_ok = false;
                    bad << " " << e.quandle.name() << "(family)";
                }
            }
        add(12, "augmentation", "no integral idempotent with augmentation 0 at bound 4",
            integral_ok, bad.str());
        add(12, "augmentation", "every printed family has augmentation 1 symbolically",
            family_ok, "");

        // mod-2 rings do admit augmentation-0 idempotents (so the conjecture
        // is genuinely about the integral case)
        Mod2Set s = enumerate_mod2(catalog(3)[2].quandle, opts.exec);
        bool has_even = false;
        for (uint32_t m : s.masks)
            if (std::popcount(m) % 2 == 0) has_even = true;
        add(12, "augmentation", "mod-2 counterexamples with augmentation 0 exist",
            has_even, "");
    }
};

} // namespace

std::vector<CheckResult> run_reproduction(const ReproOptions& opts) {
    Suite suite{opts, {}};
    suite.mod2_tables();
    suite.medial_five();
    suite.latin_trivial();
    suite.commutative_count();
    suite.covering_families();
    suite.z_families();
    suite.colorings();
    suite.hom_quandles();
    suite.enhancement();
    suite.spectra();
    suite.annihilator();
    suite.augmentation_scan();
    return suite.results;
}

} // namespace qr
