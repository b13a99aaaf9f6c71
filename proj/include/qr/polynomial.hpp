#pragma once

#include <map>
#include <string>
#include <vector>

#include "qr/coeffs.hpp"

namespace qr {

// Multivariate polynomial with exact rational coefficients over an ordered
// list of named variables.  Exponent vectors are dense over the declared
// variable list; no family in the catalog needs more than a handful of
// variables, so sparse generality is not worth the bookkeeping.
class Polynomial {
public:
    using Exps = std::vector<uint8_t>;

    Polynomial() = default;
    Polynomial(int c) { if (c != 0) terms_[Exps{}] = Rat(c); }
    Polynomial(const Int& c) { if (c != 0) terms_[Exps{}] = Rat(c); }
    Polynomial(const Rat& c) { if (c != 0) terms_[Exps{}] = c; }

    static Polynomial variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero exponent vector).
    Rat constant_term() const;

    int total_degree() const;
    int degree_in(const std::string& var) const;
    bool is_affine() const { return total_degree() <= 1; }
    bool has_integer_coeffs() const;

    // Coefficient of the degree-1 term in `var` that involves no other
    // variable; meaningful for affine polynomials.
    Rat linear_coeff(const std::string& var) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Full substitution: every variable must be assigned.
    Rat subst(const std::map<std::string, Rat>& assignment) const;

    // Partial substitution of a subset of variables.
    Polynomial subst_partial(const std::map<std::string, Rat>& assignment) const;

    // Renames variables; names not present in the map are kept.
    Polynomial rename(const std::map<std::string, std::string>& renaming) const;

    // Derivative-like extraction: the polynomial of everything multiplying
    // var^1 where var appears to the first power, discarding higher powers.
    // Used to read off parameter maps that are affine in a variable block.
    Polynomial coeff_of_linear(const std::string& var) const;

    // Drops every term that involves any variable from `block`.
    Polynomial drop_vars(const std::vector<std::string>& block) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exps, Rat> terms_; // canonical: no zero coefficients stored

    void strip_zeros();
    static void align(const Polynomial& a, const Polynomial& b,
                      std::vector<std::string>& vars,
                      std::vector<int>& map_a, std::vector<int>& map_b);
    Polynomial remapped(const std::vector<std::string>& vars,
                        const std::vector<int>& map) const;
};

} // namespace qr
