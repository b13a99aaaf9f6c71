#include <doctest.h>

#include <set>

#include "qr/catalog.hpp"
#include "qr/links.hpp"

// The OpenMP kernels must give byte-identical results to the serial paths,
// and both must agree with the slow reference implementations.

using namespace qr;

TEST_CASE("mod-2 scan: kernel vs serial vs reference") {
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order)) {
            Mod2Set par = enumerate_mod2(e.quandle, Exec::parallel);
            Mod2Set ser = enumerate_mod2(e.quandle, Exec::serial);
            Mod2Set ref = enumerate_mod2_reference(e.quandle);
            CHECK(par.masks == ser.masks);
            CHECK(par.masks == ref.masks);
        }
    Quandle big = dihedral_quandle(14);
    CHECK(enumerate_mod2(big, Exec::parallel).masks ==
          enumerate_mod2(big, Exec::serial).masks);
}

TEST_CASE("integral search: kernel vs serial vs reference") {
    for (int order : {3, 4}) {
        for (const auto& e : catalog(order)) {
            RationalSet par = search_integral(e.quandle, 2, Exec::parallel);
            RationalSet ser = search_integral(e.quandle, 2, Exec::serial);
            RationalSet ref = search_integral_reference(e.quandle, 2);
            CHECK(par.elems == ser.elems);
            CHECK(par.elems == ref.elems);
        }
    }
    Quandle r5 = dihedral_quandle(5);
    CHECK(search_integral(r5, 4, Exec::parallel).elems ==
          search_integral(r5, 4, Exec::serial).elems);
}

TEST_CASE("rational search: kernel vs serial, and consistency with the integral search") {
    Quandle r3 = dihedral_quandle(3);
    CHECK(search_rational(r3, 3, 3, Exec::parallel).elems ==
          search_rational(r3, 3, 3, Exec::serial).elems);

    Quandle r7 = dihedral_quandle(7);
    CHECK(search_rational(r7, 1, 2, Exec::parallel).elems ==
          search_rational(r7, 1, 2, Exec::serial).elems);

    // denominator one must reproduce the integral search exactly
    for (int order : {3, 4, 5})
        for (const auto& e : catalog(order))
            CHECK(search_rational(e.quandle, 2, 1).elems ==
                  search_integral(e.quandle, 2).elems);
}

namespace {

// Brute force over every numerator vector and common denominator, checking
// each candidate with the plain ring product.  Completely independent of the
// search machinery.
std::set<std::vector<Rat>> brute_rational(const Quandle& q, long bound, long denom) {
    const int n = q.size();
    const long N = bound * denom;
    std::set<std::vector<Rat>> out;
    for (long d = 1; d <= denom; ++d) {
        std::vector<long> p(size_t(n), -N);
        while (true) {
            QElement u(q);
            bool zero = true;
            for (int i = 0; i < n; ++i) {
                u.c[size_t(i)] = Rat(p[size_t(i)]);
                u.c[size_t(i)] /= d;
                if (p[size_t(i)] != 0) zero = false;
            }
            if (!zero && mul(u, u) == u) out.insert(u.c);
            int i = 0;
            while (i < n && ++p[size_t(i)] > N) {
                p[size_t(i)] = -N;
                ++i;
            }
            if (i == n) break;
        }
    }
    return out;
}

} // namespace

TEST_CASE("rational search against a brute-force oracle") {
    // no proper congruence: the augmentation-only path
    Quandle r5 = dihedral_quandle(5);
    RationalSet s5 = search_rational(r5, 1, 3);
    CHECK(std::set<std::vector<Rat>>(s5.elems.begin(), s5.elems.end()) ==
          brute_rational(r5, 1, 3));

    // quotient-filtered paths
    Quandle t4 = trivial_quandle(4);
    RationalSet st = search_rational(t4, 1, 2);
    CHECK(std::set<std::vector<Rat>>(st.elems.begin(), st.elems.end()) ==
          brute_rational(t4, 1, 2));

    const Quandle& x = catalog(5)[size_t(catalog_index_of_medial_five())].quandle;
    RationalSet sx = search_rational(x, 1, 2);
    CHECK(std::set<std::vector<Rat>>(sx.elems.begin(), sx.elems.end()) ==
          brute_rational(x, 1, 2));
}

TEST_CASE("coloring kernels agree") {
    Quandle r6 = dihedral_quandle(6);
    ColoringTarget t = target_from_quandle(r6);
    for (const auto& p : builtin_presentations()) {
        long par = count_colorings(p, t, Exec::parallel);
        long ser = count_colorings(p, t, Exec::serial);
        long ref = count_colorings_reference(p, t);
        CHECK(par == ser);
        CHECK(par == ref);
        CHECK(hom_set(p, t, Exec::parallel) == hom_set(p, t, Exec::serial));
    }
}
