#include <doctest.h>

#include <bit>
#include <set>

#include "qr/catalog.hpp"
#include "qr/idempotents.hpp"

using namespace qr;

namespace {

std::set<std::string> strings_of(const Mod2Set& s) {
    auto v = s.element_strings();
    return {v.begin(), v.end()};
}

std::vector<Rat> coeffs(const Quandle& q, const std::string& s) {
    return parse_element(s, q.size());
}

} // namespace

TEST_CASE("is_idempotent basics") {
    Quandle r3 = dihedral_quandle(3);
    for (int x = 0; x < 3; ++x) CHECK(is_idempotent(basis_element<Int>(r3, x)));

    ZElement u(r3);
    u.c = {Int(1), Int(1), Int(0)}; // e1+e2 squares to augmentation 4
    CHECK(!is_idempotent(u));

    ZElement zero(r3);
    CHECK_THROWS_AS(is_idempotent(zero), std::invalid_argument);

    RingElement<GF2> v(r3);
    v.c = {GF2(1), GF2(1), GF2(1)};
    CHECK(is_idempotent(v));
}

TEST_CASE("mod-2 enumeration of the latin order-3 quandle") {
    Quandle r3 = dihedral_quandle(3);
    Mod2Set s = enumerate_mod2(r3);
    CHECK(s.masks.size() == 7);
    CHECK(strings_of(s) == std::set<std::string>{"e1", "e2", "e3", "e1+e2", "e1+e3",
                                                 "e2+e3", "e1+e2+e3"});
}

TEST_CASE("mod-2 enumeration of the five-element medial quandle") {
    const auto& e = catalog(5)[size_t(catalog_index_of_medial_five())];
    Mod2Set s = enumerate_mod2(e.quandle);
    CHECK(s.element_strings() ==
          std::vector<std::string>{"e1", "e2", "e3", "e4", "e5", "e1+e2+e3", "e1+e4+e5",
                                   "e2+e4+e5", "e3+e4+e5", "e1+e2+e3+e4+e5"});
}

TEST_CASE("commutative quandles have every nonzero subset sum") {
    Quandle r3 = dihedral_quandle(3);
    REQUIRE(is_commutative(r3));
    CHECK(enumerate_mod2(r3).masks.size() == (1u << 3) - 1);

    // trivial quandles instead keep exactly the odd-size supports
    Quandle t4 = trivial_quandle(4);
    Mod2Set t = enumerate_mod2(t4);
    for (uint32_t m : t.masks) CHECK(std::popcount(m) % 2 == 1);
    CHECK(t.masks.size() == 8);
}

TEST_CASE("bounded integral search") {
    Quandle r3 = dihedral_quandle(3);
    RationalSet s = search_integral(r3, 10);
    REQUIRE(s.elems.size() == 3);
    std::set<std::vector<Rat>> got(s.elems.begin(), s.elems.end());
    std::set<std::vector<Rat>> trivials = {coeffs(r3, "e1"), coeffs(r3, "e2"),
                                           coeffs(r3, "e3")};
    CHECK(got == trivials);

    // the latin order-4 entry keeps only trivial idempotents at bound 5
    const Quandle& latin4 = catalog(4)[6].quandle;
    REQUIRE(is_latin(latin4));
    CHECK(search_integral(latin4, 5).elems.size() == 4);

    // a non-latin entry picks up family members: a*(e1+e2)+(1-2a)*e3 at a=1
    const Quandle& nl = catalog(3)[1].quandle;
    RationalSet t = search_integral(nl, 2);
    CHECK(std::find(t.elems.begin(), t.elems.end(), coeffs(nl, "e1+e2-e3")) != t.elems.end());
}

TEST_CASE("bounded rational search finds the seven known elements") {
    Quandle r3 = dihedral_quandle(3);
    RationalSet s = search_rational(r3, 3, 3);
    std::set<std::vector<Rat>> got(s.elems.begin(), s.elems.end());
    std::set<std::vector<Rat>> want = {
        coeffs(r3, "e1"),
        coeffs(r3, "e2"),
        coeffs(r3, "e3"),
        coeffs(r3, "(1/3)*e1+(1/3)*e2+(1/3)*e3"),
        coeffs(r3, "(2/3)*e1-(1/3)*e2-(1/3)*e3"),
        coeffs(r3, "-(1/3)*e1+(2/3)*e2-(1/3)*e3"),
        coeffs(r3, "-(1/3)*e1-(1/3)*e2+(2/3)*e3"),
    };
    CHECK(got == want);
}

TEST_CASE("search guards") {
    Quandle r3 = dihedral_quandle(3);
    CHECK_THROWS_AS(search_integral(r3, 0), std::invalid_argument);
    CHECK_THROWS_AS(search_integral(dihedral_quandle(15), 10), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_mod2(dihedral_quandle(26)), ResourceLimitError);
}

TEST_CASE("family verification") {
    Quandle t3 = trivial_quandle(3);
    CHECK(verify_family(family_from_literal(t3, "a*e1+b*e2+(1-a-b)*e3")));

    Quandle r3 = dihedral_quandle(3);
    CHECK(!verify_family(family_from_literal(r3, "a*e1+b*e2+(1-a-b)*e3")));
}

TEST_CASE("covering families over the doubled dihedral quandle") {
    auto fams = covering_family_r2n(3);
    REQUIRE(fams.size() == 3);
    for (const auto& f : fams) {
        CHECK(f.params.size() == 4);
        CHECK(verify_family(f));
    }
    CHECK_THROWS_AS(covering_family_r2n(4), std::invalid_argument);

    // b=1, all a_i=0 recovers the base point
    QElement e0 = fams[0].instantiate({{"b", Rat(1)}, {"a0", Rat(0)},
                                       {"a1", Rat(0)}, {"a2", Rat(0)}});
    CHECK(e0 == basis_element<Rat>(*fams[0].q, 0));

    // b=1, a0=1 gives 3e_0 - 2e_3
    QElement u = fams[0].instantiate({{"b", Rat(1)}, {"a0", Rat(1)},
                                      {"a1", Rat(0)}, {"a2", Rat(0)}});
    CHECK(u.c == coeffs(*fams[0].q, "3*e1 - 2*e4"));
    CHECK(is_idempotent(u));
}

TEST_CASE("quandle structure on finite idempotent sets") {
    // the seven mod-2 idempotents of the latin order-3 quandle do not form one
    Quandle r3d = dihedral_quandle(3);
    Mod2Set s3 = enumerate_mod2(r3d);
    CHECK(!is_quandle_under_mul(s3));

    // those of the trivial quandle do
    Quandle t3 = trivial_quandle(3);
    Mod2Set st = enumerate_mod2(t3);
    CHECK(is_quandle_under_mul(st));

    // the ten-element example, with its exact table
    const auto& e = catalog(5)[size_t(catalog_index_of_medial_five())];
    Mod2Set sx = enumerate_mod2(e.quandle);
    CHECK(is_quandle_under_mul(sx));
    std::vector<std::string> labels;
    auto iq = mod2_quandle(sx, &labels);
    REQUIRE(iq.has_value());
    CHECK(labels.size() == 10);
    CHECK(is_medial(*iq));
    CHECK(iq->table() == expected_idempotent_quandle_table());

    // rational variant: the trivial idempotents of any quandle form a copy of it
    Quandle r3 = dihedral_quandle(3);
    std::vector<std::vector<Rat>> basis;
    for (int i = 0; i < 3; ++i) basis.push_back(coeffs(r3, "e" + std::to_string(i + 1)));
    CHECK(is_quandle_under_mul(r3, basis));
}

TEST_CASE("symbolic quandle decision on the printed families") {
    // order 3: yes, no, yes as printed
    CHECK(parametric_is_quandle(catalog(3)[0].z_families));
    CHECK(!parametric_is_quandle(catalog(3)[1].z_families));
    CHECK(parametric_is_quandle(catalog(3)[2].z_families));
    // the order-4 entry with two disjoint one-parameter families is a quandle
    CHECK(parametric_is_quandle(catalog(4)[5].z_families));
    CHECK(!parametric_is_quandle(catalog(4)[3].z_families));
}

TEST_CASE("family membership by exact linear solve") {
    Quandle r3 = catalog(3)[1].quandle;
    ParametricElement fam = family_from_literal(r3, "a*(e1+e2)+(1-2*a)*e3");
    auto asg = family_membership(fam, coeffs(r3, "(1/2)*e1+(1/2)*e2"));
    REQUIRE(asg.has_value());
    CHECK((*asg)["a"] == Rat(1) / 2);
    CHECK(!family_membership(fam, coeffs(r3, "e1")).has_value());

    ParametricElement other = family_from_literal(r3, "a*e1+(1-a)*e2");
    auto asg2 = family_membership(other, coeffs(r3, "e2"));
    REQUIRE(asg2.has_value());
    CHECK((*asg2)["a"] == 0);
}

TEST_CASE("augmentation values of enumerated idempotents") {
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order)) {
            Mod2Set s = enumerate_mod2(e.quandle);
            if (e.z2_quandle) {
                // a quandle of idempotents forces augmentation one throughout
                for (uint32_t m : s.masks) CHECK(std::popcount(m) % 2 == 1);
            }
            RationalSet zi = search_integral(e.quandle, 2);
            for (const auto& v : zi.elems) {
                Rat eps(0);
                for (const auto& c : v) eps += c;
                CHECK(eps == 1);
            }
        }
}

TEST_CASE("medial entries: products of idempotents are idempotents or zero") {
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order)) {
            if (!is_medial(e.quandle)) continue;
            Mod2Set s = enumerate_mod2(e.quandle);
            auto t = mod2_mul_table(s);
            for (size_t i = 0; i < s.masks.size(); ++i)
                for (size_t j = 0; j < s.masks.size(); ++j) {
                    if (t[i][j] >= 0) continue;
                    // a product outside the set can only be zero
                    CHECK(mod2_product(e.quandle, s.masks[i], s.masks[j]) == 0);
                }
        }
}

TEST_CASE("rational idempotents have augmentation 0 or 1") {
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order)) {
            RationalSet s = search_rational(e.quandle, 1, 2);
            for (const auto& v : s.elems) {
                Rat eps(0);
                for (const auto& c : v) eps += c;
                CHECK((eps == 0 || eps == 1));
            }
        }
}

TEST_CASE("augmentation conjecture scan") {
    const auto& e = catalog(3)[2]; // latin order 3
    AugmentationReport rep = check_augmentation_conjecture(e.quandle, 4, e.z_families);
    CHECK(rep.all_integral_have_eps_one);
    CHECK(rep.families_have_eps_one);
    // mod-2 counterexamples: e1+e2 has augmentation 0 there
    Mod2Set s = enumerate_mod2(e.quandle);
    bool has_even = false;
    for (uint32_t m : s.masks)
        if (std::popcount(m) % 2 == 0) has_even = true;
    CHECK(has_even);
}
