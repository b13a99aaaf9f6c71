#pragma once

#include <vector>

#include "qr/coeffs.hpp"

namespace qr {

// Univariate polynomials, coefficients low to high, no trailing zeros.
using UPolyQ = std::vector<Rat>;
using UPolyZ = std::vector<Int>;

namespace upoly {

void normalize(UPolyQ& p);
int degree(const UPolyQ& p); // -1 for the zero polynomial
bool is_zero(const UPolyQ& p);

UPolyQ add(const UPolyQ& a, const UPolyQ& b);
UPolyQ sub(const UPolyQ& a, const UPolyQ& b);
UPolyQ mul(const UPolyQ& a, const UPolyQ& b);
UPolyQ scale(const Rat& s, const UPolyQ& a);
Rat eval(const UPolyQ& p, const Rat& x);
UPolyQ derivative(const UPolyQ& p);
UPolyQ monic(const UPolyQ& p);

// quotient and remainder; exact division asserts zero remainder
std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& a, const UPolyQ& b);
UPolyQ divexact(const UPolyQ& a, const UPolyQ& b);

UPolyQ gcd(UPolyQ a, UPolyQ b); // monic

// Yun: p = prod factors[i].first ^ factors[i].second with squarefree parts
std::vector<std::pair<UPolyQ, int>> squarefree_decomposition(const UPolyQ& p);

// Primitive integer image (positive leading coefficient) of a rational poly.
UPolyZ primitive_z(const UPolyQ& p);
std::string str(const UPolyZ& p, const char* var = "x");

// All integer roots of a monic integer polynomial, with multiplicity,
// by bounded scan over divisors of the constant term.
std::vector<std::pair<Int, int>> integer_roots_monic(const UPolyQ& monic_poly);

} // namespace upoly

} // namespace qr
