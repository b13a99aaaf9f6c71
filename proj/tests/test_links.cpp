#include <doctest.h>

#include "qr/catalog.hpp"
#include "qr/links.hpp"

using namespace qr;

TEST_CASE("presentation parsing") {
    Presentation p = parse_presentation(
        "quandle { gens: a, b; rel: a*(a*b) = (a*b)*b; rel: (b*a)*(a*b) = b; }");
    CHECK(p.gens == std::vector<std::string>{"a", "b"});
    CHECK(p.rels.size() == 2);
    CHECK(presentation_str(p) ==
          "quandle { gens: a, b; rel: a*(a*b) = (a*b)*b; rel: (b*a)*(a*b) = b; }");

    // reparse of the printed form is stable
    Presentation q = parse_presentation(presentation_str(p));
    CHECK(presentation_str(q) == presentation_str(p));

    CHECK_THROWS_AS(parse_presentation("quandle { gens: a; rel: a*c = a; }"), ParseError);
    CHECK_THROWS_AS(parse_presentation("group { gens: a; }"), ParseError);
}

TEST_CASE("term evaluation") {
    Quandle r3 = dihedral_quandle(3);
    ColoringTarget t = target_from_quandle(r3);
    Presentation p = parse_presentation(
        "quandle { gens: a, b; rel: a*(a*b) = a; rel: (a\\b)*b = a; }");
    const Term& lhs = p.rels[0].first;
    CHECK(eval_term(lhs, {0, 1}, t) == 1); // 0*(0*1) = 0*2 = 1
    const Term& inv = p.rels[1].first;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(eval_term(inv, {a, b}, t) == a);

    Presentation diag = parse_presentation("quandle { gens: a; rel: a*a = a; }");
    for (int a = 0; a < 3; ++a)
        CHECK(eval_term(diag.rels[0].first, {a}, t) == a);
}

TEST_CASE("builtin presentations") {
    const auto& all = builtin_presentations();
    CHECK(all.size() == 7);
    const Presentation& p9 = builtin_presentation("l2a1-0");
    CHECK(p9.gens == std::vector<std::string>{"a", "b"});
    CHECK(p9.rels.size() == 2);
    CHECK_THROWS_AS(builtin_presentation("nope"), std::invalid_argument);
}

TEST_CASE("coloring counts") {
    Quandle r6 = dihedral_quandle(6);
    ColoringTarget t6 = target_from_quandle(r6);
    CHECK(count_colorings(builtin_presentation("l4a1-0-r2"), t6) == 12);
    CHECK(count_colorings(builtin_presentation("l5a1-1-r2"), t6) == 12);
    // the unreduced five-generator forms count the same homomorphisms
    CHECK(count_colorings(builtin_presentation("l4a1-0"), t6) == 12);
    CHECK(count_colorings(builtin_presentation("l5a1-1"), t6) == 12);

    const Quandle& x = catalog(5)[size_t(catalog_index_of_medial_five())].quandle;
    ColoringTarget tx = target_from_quandle(x);
    CHECK(count_colorings(builtin_presentation("l2a1-0"), tx) == 13);
    CHECK(count_colorings(builtin_presentation("l4a1-1-r2"), tx) == 13);
    CHECK(count_colorings(builtin_presentation("l4a1-1"), tx) == 13);

    Mod2Set s = enumerate_mod2(x);
    ColoringTarget ti = target_from_mod2_set(s);
    CHECK(count_colorings(builtin_presentation("l2a1-0"), ti) == 68);
    CHECK(count_colorings(builtin_presentation("l4a1-1-r2"), ti) == 76);

    // reduced and unreduced forms agree over the whole order-5 catalog
    for (const auto& e : catalog(5)) {
        ColoringTarget t = target_from_quandle(e.quandle);
        CHECK(count_colorings(builtin_presentation("l4a1-1"), t) ==
              count_colorings(builtin_presentation("l4a1-1-r2"), t));
    }
}

TEST_CASE("diagonal colorings always exist") {
    Quandle r5 = dihedral_quandle(5);
    ColoringTarget t = target_from_quandle(r5);
    for (const auto& p : builtin_presentations())
        CHECK(count_colorings(p, t) >= r5.size());
}

TEST_CASE("hom sets are lexicographic and consistent across target kinds") {
    const Quandle& x = catalog(5)[size_t(catalog_index_of_medial_five())].quandle;
    ColoringTarget tq = target_from_quandle(x);
    auto hs = hom_set(builtin_presentation("l2a1-0"), tq);
    CHECK(long(hs.size()) == count_colorings(builtin_presentation("l2a1-0"), tq));
    CHECK(std::is_sorted(hs.begin(), hs.end()));

    // a quandle viewed as a bare magma gives the same count
    Quandle t3 = trivial_quandle(3);
    Mod2Set trivial_view = enumerate_mod2(t3);
    ColoringTarget tm = target_from_mod2_set(trivial_view);
    Quandle as_quandle = *mod2_quandle(trivial_view);
    ColoringTarget tq2 = target_from_quandle(as_quandle);
    for (const auto& p : builtin_presentations())
        if (p.gens.size() <= 2)
            CHECK(count_colorings(p, tm) == count_colorings(p, tq2));
}

TEST_CASE("hom quandles") {
    Quandle r6 = dihedral_quandle(6);
    HomQuandle h = hom_quandle(builtin_presentation("l4a1-0-r2"), r6);
    CHECK(h.quandle.size() == 12);
    CHECK(is_medial(h.quandle));
    CHECK(!Quandle::check(h.quandle.table()));

    // one free generator: the hom quandle is the target itself
    Presentation free1 = parse_presentation("quandle { gens: a; rel: a*a = a; }");
    HomQuandle hf = hom_quandle(free1, r6);
    CHECK(is_isomorphic(hf.quandle, r6).has_value());

    // non-medial targets are rejected, never silently computed
    auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> h(3);
        for (int i = 0; i < 3; ++i) h[size_t(i)] = f[size_t(g[size_t(i)])];
        return h;
    };
    std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    Table s3(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto fg = compose(perms[size_t(a)], perms[size_t(b)]);
            for (int c = 0; c < 6; ++c)
                if (perms[size_t(c)] == fg) s3[size_t(a)][size_t(b)] = c;
        }
    Quandle nm = conj_quandle(s3);
    REQUIRE(!is_medial(nm));
    CHECK_THROWS_AS(hom_quandle(free1, nm), std::invalid_argument);
}

TEST_CASE("ring relations distinguish zero placements") {
    Quandle r6 = dihedral_quandle(6);
    auto fams = covering_family_r2n(3);
    QElement u = fams[0].instantiate(
        {{"b", Rat(1)}, {"a0", Rat(0)}, {"a1", Rat(1)}, {"a2", Rat(0)}});
    QElement zero(r6);

    const Presentation& p1 = builtin_presentation("l4a1-0-r2");
    const Presentation& p2 = builtin_presentation("l5a1-1-r2");

    // (0, u) violates the second relation of the first presentation
    CHECK(!check_ring_relations(p1, std::vector<QElement>{zero, u}));
    // (u, 0) satisfies it
    CHECK(check_ring_relations(p1, std::vector<QElement>{u, zero}));
    // the second presentation accepts zero in either slot
    CHECK(check_ring_relations(p2, std::vector<QElement>{zero, u}));
    CHECK(check_ring_relations(p2, std::vector<QElement>{u, zero}));

    // same-family pairs satisfy everything; cross-family pairs do not
    QElement u2 = fams[0].instantiate(
        {{"b", Rat(-1)}, {"a0", Rat(1)}, {"a1", Rat(0)}, {"a2", Rat(1)}});
    QElement v = fams[1].instantiate(
        {{"b", Rat(1)}, {"a0", Rat(0)}, {"a1", Rat(0)}, {"a2", Rat(0)}});
    CHECK(check_ring_relations(p1, std::vector<QElement>{u, u2}));
    CHECK(check_ring_relations(p2, std::vector<QElement>{u, u2}));
    CHECK(!check_ring_relations(p1, std::vector<QElement>{u, v}));
    CHECK(!check_ring_relations(p2, std::vector<QElement>{u, v}));

    // relations with the inverse operation are rejected over rings
    Presentation with_inv = parse_presentation("quandle { gens: a, b; rel: a\\b = a; }");
    CHECK_THROWS_AS(check_ring_relations(with_inv, std::vector<QElement>{u, u2}),
                    std::invalid_argument);
}

TEST_CASE("enhancement report shape") {
    auto fams = covering_family_r2n(3);
    std::vector<Rat> grid = {Rat(-1), Rat(0), Rat(1)};
    EnhancementReport rep = enhancement_report(builtin_presentation("l4a1-0-r2"),
                                               builtin_presentation("l5a1-1-r2"),
                                               fams, grid);
    const auto& cross = rep.category("cross_family");
    CHECK(cross.pairs > 0);
    CHECK(cross.p1_all == 0);
    CHECK(cross.p2_all == 0);
    const auto& same = rep.category("same_family");
    CHECK(same.p1_all == same.pairs);
    CHECK(same.p2_all == same.pairs);
    const auto& fz = rep.category("first_zero");
    CHECK(fz.p1_all == 0);
    CHECK(fz.p2_all == fz.pairs);
    CHECK(rep.p2_admits_zero_first_nonzero_second);
    CHECK(!rep.p1_admits_zero_first_nonzero_second);
}
