#pragma once

#include <stdexcept>
#include <vector>

#include "qr/coeffs.hpp"
#include "qr/polynomial.hpp"
#include "qr/quandle.hpp"

namespace qr {

// Element of the quandle ring k[X]: a dense coefficient vector over the basis
// {e_x}.  The product is the bilinear extension of e_x e_y = e_{x*y}; it is
// non-associative for non-trivial X, so nothing here re-associates: callers
// parenthesize explicitly.
template <class R>
struct RingElement {
    const Quandle* q = nullptr;
    std::vector<R> c;

    RingElement() = default;
    explicit RingElement(const Quandle& quandle)
        : q(&quandle), c(size_t(quandle.size()), R(0)) {}

    bool is_zero() const {
        for (const auto& x : c)
            if (!(x == R(0))) return false;
        return true;
    }
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return (a.q == b.q || *a.q == *b.q) && a.c == b.c;
    }
};

template <class R>
RingElement<R> basis_element(const Quandle& q, int x) {
    RingElement<R> u(q);
    u.c[size_t(x)] = R(1);
    return u;
}

namespace detail {
inline void require_same(const Quandle* a, const Quandle* b) {
    if (a != b && !(*a == *b))
        throw std::invalid_argument("elements live over different quandles");
}
} // namespace detail

template <class R>
RingElement<R> operator+(const RingElement<R>& a, const RingElement<R>& b) {
    detail::require_same(a.q, b.q);
    RingElement<R> r(*a.q);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <class R>
RingElement<R> operator-(const RingElement<R>& a, const RingElement<R>& b) {
    detail::require_same(a.q, b.q);
    RingElement<R> r(*a.q);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <class R>
RingElement<R> scale(const R& s, const RingElement<R>& a) {
    RingElement<R> r(*a.q);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = s * a.c[i];
    return r;
}

// Sum_{x,y} a_x b_y e_{x*y}
template <class R>
RingElement<R> mul(const RingElement<R>& a, const RingElement<R>& b) {
    detail::require_same(a.q, b.q);
    const int n = a.q->size();
    RingElement<R> r(*a.q);
    for (int x = 0; x < n; ++x) {
        if (a.c[size_t(x)] == R(0)) continue;
        for (int y = 0; y < n; ++y) {
            if (b.c[size_t(y)] == R(0)) continue;
            r.c[size_t(a.q->op(x, y))] += a.c[size_t(x)] * b.c[size_t(y)];
        }
    }
    return r;
}

template <class R>
R augmentation(const RingElement<R>& u) {
    R s(0);
    for (const auto& x : u.c) s = s + x;
    return s;
}

// Pushforward along a quandle homomorphism; multiplicative by functoriality.
template <class R>
RingElement<R> induced_map(const QuandleMap& f, const RingElement<R>& u) {
    if (u.q != f.source && !(*u.q == *f.source))
        throw std::invalid_argument("element not over the map's source");
    if (!is_homomorphism(f)) throw std::invalid_argument("map is not a homomorphism");
    RingElement<R> r(*f.target);
    for (size_t x = 0; x < u.c.size(); ++x)
        r.c[size_t(f.values[x])] += u.c[x];
    return r;
}

using ZElement = RingElement<Int>;
using QElement = RingElement<Rat>;

inline QElement q_element(const Quandle& q, const std::vector<Rat>& coeffs) {
    if (int(coeffs.size()) != q.size())
        throw std::invalid_argument("coefficient count does not match order");
    QElement u(q);
    u.c = coeffs;
    return u;
}

// --- literals ---------------------------------------------------------------
// Element syntax (1-based indices):  2*e1 - e2 + (1/3)*e3
// Family syntax adds parameter variables:  a*(e1+e2)+(1-2*a)*e3
std::vector<Rat> parse_element(const std::string& text, int order);

struct FamilyLiteral {
    std::vector<std::string> params;   // in order of first appearance
    std::vector<Polynomial> coeffs;    // length = order
};
FamilyLiteral parse_family(const std::string& text, int order);

std::string element_str(const std::vector<Rat>& coeffs);

} // namespace qr
