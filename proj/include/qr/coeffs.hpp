#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qr {

// All coefficient arithmetic in this library is exact.  Integers and
// rationals are GMP-backed so nothing overflows silently.
using Int = mpz_class;
using Rat = mpq_class;

enum class RingTag { Integers, IntegersMod2, Rationals, Polynomials };

inline const char* ring_name(RingTag t) {
    switch (t) {
        case RingTag::Integers: return "Z";
        case RingTag::IntegersMod2: return "Z2";
        case RingTag::Rationals: return "Q";
        case RingTag::Polynomials: return "Z[params]";
    }
    return "?";
}

// The field with two elements, used by the reference mod-2 path.  The fast
// enumeration kernels work on whole-element bitmasks instead.
struct GF2 {
    uint8_t v = 0;
    GF2() = default;
    GF2(int x) : v(static_cast<uint8_t>(x & 1)) {}
    GF2(long x) : v(static_cast<uint8_t>(x & 1)) {}
    friend GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend GF2 operator-(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
    GF2 operator-() const { return *this; }
    GF2& operator+=(GF2 o) { v ^= o.v; return *this; }
    friend bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace qr
