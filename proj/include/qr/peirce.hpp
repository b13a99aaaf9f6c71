#pragma once

#include <tuple>

#include "qr/ring.hpp"
#include "qr/upoly.hpp"

namespace qr {

// Dense matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int n) : n_(n), a_(size_t(n) * n, Rat(0)) {}
    static ExactMatrix identity(int n);

    int size() const { return n_; }
    Rat& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    bool is_zero() const;
    Rat trace() const;

private:
    int n_ = 0;
    std::vector<Rat> a_;
};

// Matrix of the right multiplication S_u(w) = w u in the basis {e_x};
// column x holds the coefficients of e_x u.
ExactMatrix right_mult_matrix(const QElement& u);

// Fraction-free elimination on the denominator-cleared integer matrix.
Rat det_bareiss(const ExactMatrix& m);

// Monic characteristic polynomial det(xI - M), coefficients low to high.
// Small sizes expand the polynomial determinant over column subsets; larger
// ones use the division-controlled trace recurrence.  Both are exact.
UPolyQ char_poly(const ExactMatrix& m);
UPolyQ char_poly_expansion(const ExactMatrix& m);
UPolyQ char_poly_leverrier(const ExactMatrix& m);
// Integer-scaled primitive image of the characteristic polynomial.
UPolyZ char_poly_scaled(const ExactMatrix& m);

struct Spectrum {
    std::vector<std::pair<Rat, int>> eigenvalues;     // sorted by value
    std::vector<std::pair<UPolyZ, int>> residual;     // rational-root-free factors
    bool has_residual() const { return !residual.empty(); }
    int total_degree() const;
};

// Rational eigenvalues with multiplicity via squarefree splitting and exact
// root extraction; what does not split over Q is reported unfactored.
Spectrum rational_spectrum(const ExactMatrix& m);

// (Trace(S_u), sum_i u_i |Fixed(S_{e_i})|, eps(u)); the first two always
// agree, and all three agree for latin quandles.
std::tuple<Rat, Rat, Rat> trace_check(const Quandle& q, const QElement& u);

struct AlgebraSpectrum {
    std::vector<Rat> eigenvalues; // sorted union over the supplied idempotents
    bool has_residual = false;
};

AlgebraSpectrum algebra_spectrum(const Quandle& q,
                                 const std::vector<std::vector<Rat>>& idempotents);

// S_u (S_u - I)(S_u + I) = 0, i.e. the minimal polynomial divides x(x-1)(x+1).
bool annihilator_check(const QElement& u);

} // namespace qr
