#include <doctest.h>

#include <random>

#include "qr/polynomial.hpp"

using namespace qr;

namespace {

Polynomial var(const char* n) { return Polynomial::variable(n); }

Polynomial random_poly(std::mt19937_64& rng) {
    static const char* names[] = {"a", "b", "c"};
    std::uniform_int_distribution<int> coeff(-4, 4), pick(0, 2), deg(0, 2), nterms(1, 4);
    Polynomial p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Polynomial term(coeff(rng));
        int d = deg(rng);
        for (int i = 0; i < d; ++i) term *= var(names[pick(rng)]);
        p += term;
    }
    return p;
}

} // namespace

TEST_CASE("binomial identity") {
    Polynomial a = var("a"), b = var("b");
    Polynomial lhs = (a + b) * (a + b);
    Polynomial rhs = a * a + Polynomial(2) * a * b + b * b;
    CHECK(lhs == rhs);
}

TEST_CASE("root substitution") {
    Polynomial p = var("a") * (Polynomial(1) - var("a"));
    CHECK(p.subst({{"a", Rat(1)}}) == 0);
    CHECK(p.subst({{"a", Rat(2)}}) == -2);
}

TEST_CASE("rational substitution") {
    // b^2 + 2*c*a at b=1/3, c=2/3, a=1/3
    Polynomial p = var("b") * var("b") + Polynomial(2) * var("c") * var("a");
    Rat v = p.subst({{"a", Rat(1) / 3}, {"b", Rat(1) / 3}, {"c", Rat(2) / 3}});
    CHECK(v == Rat(5) / 9);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("rendering") {
    Polynomial p = Polynomial(1) - Polynomial(2) * var("a");
    CHECK(p.str() == "1-2*a");
    CHECK(Polynomial().str() == "0");
    Polynomial q = var("a") * var("a") - var("b");
    CHECK(q.str() == "-b+a^2");
}

TEST_CASE("affine extraction") {
    Polynomial p = Polynomial(1) - var("a") - Polynomial(2) * var("b");
    CHECK(p.is_affine());
    CHECK(p.constant_term() == 1);
    CHECK(p.linear_coeff("a") == -1);
    CHECK(p.linear_coeff("b") == -2);
    CHECK(p.linear_coeff("c") == 0);
    CHECK(!(var("a") * var("b")).is_affine());
}

TEST_CASE("partial substitution and renaming") {
    Polynomial p = var("a") * var("b") + var("a");
    Polynomial q = p.subst_partial({{"b", Rat(3)}});
    CHECK(q == Polynomial(4) * var("a"));
    Polynomial r = p.rename({{"a", "x"}});
    CHECK(r == var("x") * var("b") + var("x"));
}

TEST_CASE("variable blocks") {
    Polynomial t = var("p") * var("q") + Polynomial(2) * var("p") + var("q");
    Polynomial lin = t.coeff_of_linear("p");
    CHECK(lin == var("q") + Polynomial(2));
    CHECK(t.drop_vars({"p"}) == var("q"));
    CHECK(t.degree_in("p") == 1);
}
