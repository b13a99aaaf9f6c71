#include <doctest.h>

#include <random>

#include "qr/idempotents.hpp"
#include "qr/ring.hpp"

using namespace qr;

namespace {

QElement from_literal(const Quandle& q, const std::string& s) {
    return q_element(q, parse_element(s, q.size()));
}

} // namespace

TEST_CASE("basis products follow the table") {
    Quandle r3 = dihedral_quandle(3);
    auto e0 = basis_element<Int>(r3, 0);
    auto e1 = basis_element<Int>(r3, 1);
    auto e2 = basis_element<Int>(r3, 2);
    CHECK(mul(e0, e1) == e2);
    for (int x = 0; x < 3; ++x) {
        auto ex = basis_element<Int>(r3, x);
        CHECK(mul(ex, ex) == ex);
    }
    CHECK(mul(e0 + e1, e2) == e1 + e0); // 0*2 = 1, 1*2 = 0
}

TEST_CASE("the product is not associative in general") {
    Quandle r3 = dihedral_quandle(3);
    bool found = false;
    for (int a = 0; a < 3 && !found; ++a)
        for (int b = 0; b < 3 && !found; ++b)
            for (int c = 0; c < 3 && !found; ++c) {
                auto ea = basis_element<Int>(r3, a);
                auto eb = basis_element<Int>(r3, b);
                auto ec = basis_element<Int>(r3, c);
                if (!(mul(mul(ea, eb), ec) == mul(ea, mul(eb, ec)))) found = true;
            }
    CHECK(found);
}

TEST_CASE("augmentation") {
    Quandle r3 = dihedral_quandle(3);
    CHECK(augmentation(basis_element<Rat>(r3, 1)) == 1);
    CHECK(augmentation(from_literal(r3, "e2 - e3")) == 0);

    // symbolically: a*e2 + (1-a)*e3 has augmentation 1
    ParametricElement fam = family_from_literal(r3, "a*e2+(1-a)*e3");
    CHECK(fam.augmentation_poly() == Polynomial(1));
}

TEST_CASE("augmentation is multiplicative") {
    Quandle r6 = dihedral_quandle(6);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        QElement u(r6), v(r6);
        for (auto& c : u.c) c = coeff(rng);
        for (auto& c : v.c) c = coeff(rng);
        CHECK(augmentation(mul(u, v)) == augmentation(u) * augmentation(v));
        CHECK(augmentation(mul(u, u)) == augmentation(u) * augmentation(u));
    }
}

TEST_CASE("scaling") {
    Quandle r3 = dihedral_quandle(3);
    QElement u = from_literal(r3, "e1+e2+e3");
    CHECK(scale(Rat(Rat(1) / 3), u) == from_literal(r3, "(1/3)*e1+(1/3)*e2+(1/3)*e3"));
}

TEST_CASE("bilinearity on random elements") {
    Quandle q = dihedral_quandle(5);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        QElement u(q), v(q), w(q);
        for (auto& c : u.c) c = coeff(rng);
        for (auto& c : v.c) c = coeff(rng);
        for (auto& c : w.c) c = coeff(rng);
        CHECK(mul(u + v, w) == mul(u, w) + mul(v, w));
        CHECK(mul(w, u + v) == mul(w, u) + mul(w, v));
    }
}

TEST_CASE("induced maps push coefficients forward") {
    Quandle r6 = dihedral_quandle(6);
    Quandle r3 = dihedral_quandle(3);
    QuandleMap mod3{&r6, &r3, {0, 1, 2, 0, 1, 2}};

    QElement u = from_literal(r6, "e1 - e4"); // e_0 - e_3, both map to e_0
    CHECK(induced_map(mod3, u).is_zero());

    QuandleMap id{&r3, &r3, {0, 1, 2}};
    QElement v = from_literal(r3, "2*e1 - e2");
    CHECK(induced_map(id, v) == v);

    QuandleMap bad{&r3, &r3, {0, 1, 1}};
    CHECK_THROWS_AS(induced_map(bad, v), std::invalid_argument);

    // pushforward of an idempotent is an idempotent or zero
    for (const auto& fam : covering_family_r2n(3)) {
        std::map<std::string, Rat> asg;
        for (const auto& p : fam.params) asg[p] = Rat(1) / 2;
        QElement w = fam.instantiate(asg);
        QElement img = induced_map(mod3, w);
        CHECK((img.is_zero() || is_idempotent(img)));
    }
}

TEST_CASE("element literals") {
    Quandle r3 = dihedral_quandle(3);
    auto v = parse_element("2*e1 - e2 + (1/3)*e3", 3);
    CHECK(v[0] == 2);
    CHECK(v[1] == -1);
    CHECK(v[2] == Rat(1) / 3);
    CHECK(element_str(v) == "2*e1 - e2 + (1/3)*e3");

    CHECK_THROWS_AS(parse_element("e4", 3), ParseError);
    CHECK_THROWS_AS(parse_element("a*e1", 3), ParseError);
    CHECK_THROWS_AS(parse_element("e1*e2", 3), ParseError);
    CHECK_THROWS_AS(parse_element("1 + 2", 3), ParseError);

    // mismatched quandles are rejected
    Quandle t3 = trivial_quandle(3);
    CHECK_THROWS_AS(mul(basis_element<Rat>(r3, 0), basis_element<Rat>(t3, 0)),
                    std::invalid_argument);
}

TEST_CASE("family literals carry their parameters") {
    Quandle t3 = trivial_quandle(3);
    ParametricElement fam = family_from_literal(t3, "a*e1+b*e2+(1-a-b)*e3");
    CHECK(fam.params == std::vector<std::string>{"a", "b"});
    QElement u = fam.instantiate({{"a", Rat(1)}, {"b", Rat(0)}});
    CHECK(u == basis_element<Rat>(t3, 0));
}
