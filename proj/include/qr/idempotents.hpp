#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qr/ring.hpp"

namespace qr {

enum class Exec { serial, parallel };

// u^2 = u, exactly.  The zero element is not an idempotent and is rejected.
template <class R>
bool is_idempotent(const RingElement<R>& u) {
    if (u.is_zero()) throw std::invalid_argument("the zero element is excluded");
    return mul(u, u) == u;
}

// A coefficient family with named parameters; substituting any rational
// assignment yields an ordinary element.
struct ParametricElement {
    const Quandle* q = nullptr;
    std::vector<std::string> params;
    std::vector<Polynomial> coeffs;
    std::vector<Polynomial> constraints; // required to vanish; usually empty

    QElement instantiate(const std::map<std::string, Rat>& assignment) const;
    RingElement<Polynomial> as_ring_element() const;
    Polynomial augmentation_poly() const;
    std::string str() const;
};

ParametricElement family_from_literal(const Quandle& q, const std::string& text);

// fam^2 = fam as a polynomial identity, coefficient-wise.
bool verify_family(const ParametricElement& fam);

// The idempotent families of k[R_{2n}] obtained from the modular covering
// R_{2n} -> R_n, one family per base point j = 0..n-1, with parameters
// b, a0..a{n-1}.  Requires odd n >= 3.
std::vector<ParametricElement> covering_family_r2n(int n);

// --- exhaustive mod-2 scan ---------------------------------------------------

struct Mod2Set {
    const Quandle* q = nullptr;
    std::vector<uint32_t> masks; // canonical: support size, then value

    std::vector<std::string> element_strings() const;
};

// All nonzero u over Z_2 with u^2 = u; 2^n scan, n <= 25.
Mod2Set enumerate_mod2(const Quandle& q, Exec exec = Exec::parallel);
// Straightforward serial oracle built on RingElement<GF2>; kept for testing
// the kernel against an independent path.
Mod2Set enumerate_mod2_reference(const Quandle& q);

uint32_t mod2_square(const Quandle& q, uint32_t mask);
uint32_t mod2_product(const Quandle& q, uint32_t a, uint32_t b);
std::string mask_str(uint32_t mask);
uint32_t parse_mask(const std::string& text, int order);

// --- bounded integral / rational search --------------------------------------

struct RationalSet {
    const Quandle* q = nullptr;
    RingTag ring = RingTag::Rationals;
    long bound = 0, denom = 1;
    std::vector<std::vector<Rat>> elems; // canonical: L1 norm, then lex

    std::vector<std::string> element_strings() const;
};

// All integral idempotents with |coefficient| <= bound.  Depth-first over
// L1 shells with augmentation pruning.
RationalSet search_integral(const Quandle& q, long bound, Exec exec = Exec::parallel);
RationalSet search_integral_reference(const Quandle& q, long bound);

// All rational idempotents expressible over a common denominator d <= denom
// with integer numerators bounded by bound*denom at that denominator.
// Enumeration is filtered through quandle quotients: the pushforward of an
// idempotent along any surjection is an idempotent or zero, which pins the
// class-sums of the numerator vector to a small candidate list.
RationalSet search_rational(const Quandle& q, long bound, long denom,
                            Exec exec = Exec::parallel);

// Dispatch per the CLI's --ring flag (Z2 ignores bounds).
RationalSet search_bounded(const Quandle& q, RingTag ring, long bound, long denom,
                           Exec exec = Exec::parallel);

// --- quandle structure on idempotent sets ------------------------------------

// Multiplication table of the set under the ring product, if closed;
// entries index into the set, -1 marks products that leave the set.
std::vector<std::vector<int>> mod2_mul_table(const Mod2Set& s);

bool is_quandle_under_mul(const Mod2Set& s);
bool is_quandle_under_mul(const Quandle& q, const std::vector<std::vector<Rat>>& elems);

// The set as a Quandle (labels u1, u2, ... in canonical order); nullopt if
// the three axioms do not hold on the set.
std::optional<Quandle> mod2_quandle(const Mod2Set& s, std::vector<std::string>* labels = nullptr);

// Symbolic decision for a finite union of affine families over Z: closure
// into the union, right multiplications acting as unimodular affine
// parameter maps permuting the families, and right distributivity as a
// polynomial identity.
bool parametric_is_quandle(const std::vector<ParametricElement>& families);

// Membership of a concrete element in an affine family: exact linear solve
// for the parameters.  Returns the assignment if one exists.
std::optional<std::map<std::string, Rat>> family_membership(const ParametricElement& fam,
                                                            const std::vector<Rat>& target);

// --- augmentation scan --------------------------------------------------------

struct AugmentationReport {
    long bound = 0;
    bool all_integral_have_eps_one = true;
    std::vector<std::vector<Rat>> eps_zero_witnesses;
    bool families_have_eps_one = true; // symbolic, over the supplied families
};

AugmentationReport check_augmentation_conjecture(const Quandle& q, long bound,
                                                 const std::vector<ParametricElement>& families,
                                                 Exec exec = Exec::parallel);

} // namespace qr
