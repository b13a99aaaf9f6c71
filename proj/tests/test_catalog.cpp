#include <doctest.h>

#include "qr/catalog.hpp"

using namespace qr;

TEST_CASE("catalog sizes") {
    CHECK(catalog(3).size() == 3);
    CHECK(catalog(4).size() == 7);
    CHECK(catalog(5).size() == 22);
    CHECK_THROWS_AS(catalog(6), std::invalid_argument);
}

TEST_CASE("every entry is a valid quandle") {
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order)) {
            CHECK(e.quandle.size() == order);
            CHECK(!Quandle::check(e.quandle.table()));
        }
}

TEST_CASE("latin entries have permutation rows") {
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order)) {
            if (!is_latin(e.quandle)) continue;
            for (int x = 0; x < order; ++x) {
                std::vector<bool> seen(size_t(order), false);
                for (int y = 0; y < order; ++y) seen[size_t(e.quandle.op(x, y))] = true;
                CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
            }
        }
}

TEST_CASE("no two entries of one order are isomorphic") {
    for (int order : {3, 4, 5}) {
        const auto& cat = catalog(order);
        for (size_t i = 0; i < cat.size(); ++i) {
            CHECK(is_isomorphic(cat[i].quandle, cat[i].quandle).has_value());
            for (size_t j = i + 1; j < cat.size(); ++j) {
                CHECK(!is_isomorphic(cat[i].quandle, cat[j].quandle).has_value());
                CHECK(!is_isomorphic(cat[j].quandle, cat[i].quandle).has_value());
            }
        }
    }
}

TEST_CASE("known members appear") {
    // dihedral of order 3 is the third order-3 entry, as printed
    CHECK(catalog(3)[2].quandle == dihedral_quandle(3));
    CHECK(catalog(3)[0].quandle == trivial_quandle(3));
    CHECK(catalog(4)[0].quandle == trivial_quandle(4));
    CHECK(catalog(5)[0].quandle == trivial_quandle(5));
    // one of the three latin order-5 entries is the dihedral quandle
    bool found = false;
    for (const auto& e : catalog(5))
        if (is_isomorphic(e.quandle, dihedral_quandle(5)).has_value()) found = true;
    CHECK(found);
}

TEST_CASE("families cover the bounded searches") {
    // deeper than the acceptance bound, as a guard against missing families
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order)) {
            RationalSet s = search_integral(e.quandle, 4);
            for (const auto& v : s.elems) {
                bool member = false;
                for (const auto& f : e.z_families)
                    if (family_membership(f, v)) member = true;
                CHECK(member);
            }
        }
}

TEST_CASE("stored mod-2 sets really are idempotents") {
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order))
            for (uint32_t m : e.z2_idempotents) CHECK(mod2_square(e.quandle, m) == m);
}

TEST_CASE("the designated medial five-element entry") {
    const auto& e = catalog(5)[size_t(catalog_index_of_medial_five())];
    CHECK(is_medial(e.quandle));
    CHECK(!is_latin(e.quandle));
    CHECK(e.z2_idempotents.size() == 10);
    CHECK(e.z2_quandle);
}
