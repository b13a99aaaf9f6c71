#include <doctest.h>

#include "qr/quandle.hpp"

using namespace qr;

namespace {

Table one_based(Table t) {
    for (auto& row : t)
        for (int& v : row) --v;
    return t;
}

// S3 as permutations of three points: e, (12), (13), (23), (123), (132)
Table s3_table() {
    auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> h(3);
        for (int i = 0; i < 3; ++i) h[size_t(i)] = f[size_t(g[size_t(i)])];
        return h;
    };
    std::vector<std::vector<int>> elems = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    Table g(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto h = compose(elems[size_t(a)], elems[size_t(b)]);
            for (int c = 0; c < 6; ++c)
                if (elems[size_t(c)] == h) g[size_t(a)][size_t(b)] = c;
        }
    return g;
}

} // namespace

TEST_CASE("table validation") {
    // the latin order-3 quandle, as printed 1-based
    Table r3 = one_based({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
    CHECK(!Quandle::check(r3));
    Quandle q = Quandle::from_table(r3);
    CHECK(q.size() == 3);
    CHECK(q.op(0, 1) == 2);

    CHECK(!Quandle::check(trivial_quandle(3).table()));

    Table bad = trivial_quandle(2).table();
    bad[0][0] = 1; // 0*0 = 1 breaks idempotency
    auto v = Quandle::check(bad);
    REQUIRE(v.has_value());
    CHECK(v->axiom == Axiom::Idempotency);
    CHECK(v->x == 0);

    CHECK_THROWS_AS(Quandle::from_table({{0, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(Quandle::from_table({{0, 5}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("dihedral construction") {
    Quandle r3 = dihedral_quandle(3);
    Quandle printed = Quandle::from_table(one_based({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}}));
    CHECK(r3 == printed);
    for (int n = 1; n <= 12; ++n) CHECK(is_medial(dihedral_quandle(n)));
}

TEST_CASE("core and conjugation quandles") {
    Table z2 = {{0, 1}, {1, 0}};
    CHECK(core_quandle(z2) == trivial_quandle(2));

    Table s3 = s3_table();
    REQUIRE(is_group_table(s3));
    Quandle c = conj_quandle(s3);
    auto orbits = inner_orbits(c);
    std::vector<size_t> sizes;
    for (const auto& o : orbits) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});

    CHECK_THROWS_AS(conj_quandle({{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("predicates") {
    Quandle r3 = dihedral_quandle(3);
    CHECK(is_latin(r3));
    CHECK(is_medial(r3));
    CHECK(is_commutative(r3));
    CHECK(is_involutory(r3));

    Quandle t4 = trivial_quandle(4);
    CHECK(!is_commutative(t4));
    CHECK(is_medial(t4));
    CHECK(!is_latin(t4));

    // the five-element medial quandle used by the coloring examples
    Quandle x = Quandle::from_table(one_based(
        {{1, 1, 1, 2, 2}, {2, 2, 2, 3, 3}, {3, 3, 3, 1, 1}, {5, 5, 5, 4, 4}, {4, 4, 4, 5, 5}}));
    CHECK(is_medial(x));
    CHECK(!is_latin(x));
}

TEST_CASE("homomorphisms and coverings") {
    Quandle r6 = dihedral_quandle(6);
    Quandle r3 = dihedral_quandle(3);
    QuandleMap mod3{&r6, &r3, {0, 1, 2, 0, 1, 2}};
    CHECK(is_homomorphism(mod3));
    CHECK(is_covering(mod3));

    QuandleMap id{&r3, &r3, {0, 1, 2}};
    CHECK(is_covering(id));

    QuandleMap constant{&r3, &r3, {0, 0, 0}};
    CHECK(is_homomorphism(constant));
    CHECK(!is_covering(constant));

    QuandleMap not_hom{&r3, &r3, {0, 1, 1}};
    CHECK(!is_homomorphism(not_hom));
}

TEST_CASE("isomorphism search") {
    Quandle r3 = dihedral_quandle(3);
    Quandle printed = Quandle::from_table(one_based({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}}));
    auto wit = is_isomorphic(r3, printed);
    REQUIRE(wit.has_value());
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK((*wit)[size_t(r3.op(x, y))] == printed.op((*wit)[size_t(x)], (*wit)[size_t(y)]));

    Quandle t3 = trivial_quandle(3);
    Quandle other = Quandle::from_table(one_based({{1, 1, 2}, {2, 2, 1}, {3, 3, 3}}));
    CHECK(!is_isomorphic(t3, other).has_value());
    CHECK(!is_isomorphic(t3, r3).has_value());
}

TEST_CASE("congruences and quotients") {
    Quandle r6 = dihedral_quandle(6);
    auto congs = proper_congruences(r6);
    CHECK(!congs.empty());
    bool has_mod3 = false;
    for (const auto& cls : congs) {
        int k = *std::max_element(cls.begin(), cls.end()) + 1;
        Quandle quot = quotient_quandle(r6, cls);
        CHECK(quot.size() == k);
        if (k == 3) {
            has_mod3 = true;
            CHECK(is_isomorphic(quot, dihedral_quandle(3)).has_value());
        }
    }
    CHECK(has_mod3);

    // dihedral quandles of odd prime order have no proper congruence
    CHECK(proper_congruences(dihedral_quandle(5)).empty());
}
