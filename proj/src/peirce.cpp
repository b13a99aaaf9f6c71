#include "qr/peirce.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "qr/idempotents.hpp"

namespace qr {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("size mismatch");
    ExactMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("size mismatch");
    ExactMatrix r(a.n_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Rat ExactMatrix::trace() const {
    Rat t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

ExactMatrix right_mult_matrix(const QElement& u) {
    const Quandle& q = *u.q;
    const int n = q.size();
    ExactMatrix m(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            m.at(q.op(x, y), x) += u.c[size_t(y)];
    return m;
}

namespace {

Int matrix_denominator_lcm(const ExactMatrix& m) {
    Int l(1);
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            Int d = m.at(i, j).get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
    return l;
}

} // namespace

Rat det_bareiss(const ExactMatrix& m) {
    const int n = m.size();
    if (n == 0) return Rat(1);
    Int scale = matrix_denominator_lcm(m);
    std::vector<std::vector<Int>> a;
    a.assign(size_t(n), std::vector<Int>(size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = m.at(i, j) * scale;
            a[size_t(i)][size_t(j)] = v.get_num();
        }
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[size_t(k)][size_t(k)] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[size_t(i)][size_t(k)] != 0) { p = i; break; }
            if (p < 0) return Rat(0);
            std::swap(a[size_t(k)], a[size_t(p)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a[size_t(i)][size_t(j)] * a[size_t(k)][size_t(k)] -
                        a[size_t(i)][size_t(k)] * a[size_t(k)][size_t(j)];
                a[size_t(i)][size_t(j)] = t / prev; // exact by Bareiss
            }
        prev = a[size_t(k)][size_t(k)];
    }
    Rat det(a[size_t(n - 1)][size_t(n - 1)] * sign);
    Rat denom(1);
    for (int i = 0; i < n; ++i) denom *= scale;
    return det / denom;
}

UPolyQ char_poly_expansion(const ExactMatrix& m) {
    const int n = m.size();
    if (n > 20) throw ResourceLimitError("expansion route limited to small sizes");
    // det over the available-column subset; row index is determined by the
    // number of columns already consumed
    std::vector<UPolyQ> memo(size_t(1) << n);
    std::vector<bool> known(size_t(1) << n, false);
    memo[0] = UPolyQ{Rat(1)};
    known[0] = true;
    std::function<const UPolyQ&(uint32_t)> det = [&](uint32_t cols) -> const UPolyQ& {
        if (known[cols]) return memo[cols];
        int row = n - std::popcount(cols);
        UPolyQ acc;
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(cols & (uint32_t(1) << c))) continue;
            UPolyQ entry; // (xI - M)[row][c]
            if (row == c) entry = {Rat(-m.at(row, c)), Rat(1)};
            else entry = {Rat(-m.at(row, c))};
            upoly::normalize(entry);
            if (!entry.empty()) {
                UPolyQ term = upoly::mul(entry, det(cols & ~(uint32_t(1) << c)));
                acc = (pos % 2 == 0) ? upoly::add(acc, term) : upoly::sub(acc, term);
            }
            ++pos;
        }
        memo[cols] = std::move(acc);
        known[cols] = true;
        return memo[cols];
    };
    uint32_t full = (n == 32) ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    return det(full);
}

UPolyQ char_poly_leverrier(const ExactMatrix& m) {
    const int n = m.size();
    UPolyQ c(size_t(n) + 1, Rat(0));
    c[size_t(n)] = 1;
    ExactMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            ExactMatrix adj = mk;
            for (int i = 0; i < n; ++i) adj.at(i, i) += c[size_t(n - k + 1)];
            mk = m * adj;
        }
        Rat ck = -mk.trace() / k;
        c[size_t(n - k)] = ck;
    }
    return c;
}

UPolyQ char_poly(const ExactMatrix& m) {
    if (m.size() <= 6) return char_poly_expansion(m);
    return char_poly_leverrier(m);
}

UPolyZ char_poly_scaled(const ExactMatrix& m) {
    return upoly::primitive_z(char_poly(m));
}

int Spectrum::total_degree() const {
    int d = 0;
    for (const auto& [v, k] : eigenvalues) d += k;
    for (const auto& [p, k] : residual) d += (int(p.size()) - 1) * k;
    return d;
}

Spectrum rational_spectrum(const ExactMatrix& m) {
    const int n = m.size();
    Spectrum s;
    if (n == 0) return s;
    UPolyQ p = char_poly(m);
    // integer model: q(y) = d^n p(y/d) is the (monic, integer) characteristic
    // polynomial of the denominator-cleared matrix dM
    Int d = matrix_denominator_lcm(m);
    UPolyQ q(p.size());
    Int dpow(1);
    for (size_t i = p.size(); i-- > 0;) {
        q[i] = p[i] * dpow;
        if (q[i].get_den() != 1)
            throw std::logic_error("scaled characteristic polynomial not integral");
        dpow *= d;
    }
    std::map<Rat, int> eig;
    for (const auto& [factor, mult] : upoly::squarefree_decomposition(q)) {
        UPolyQ rem = factor;
        for (const auto& [root, k] : upoly::integer_roots_monic(factor)) {
            if (k != 1) throw std::logic_error("squarefree factor with repeated root");
            Rat lambda = Rat(root) / Rat(d);
            lambda.canonicalize();
            eig[lambda] += mult;
            UPolyQ lin = {Rat(-root), Rat(1)};
            rem = upoly::divexact(rem, lin);
        }
        if (upoly::degree(rem) >= 1) {
            // translate the leftover back to the eigenvalue variable x = y/d
            UPolyQ back(rem.size());
            Int dp(1);
            for (size_t i = 0; i < rem.size(); ++i) {
                back[i] = rem[i] * dp;
                dp *= d;
            }
            s.residual.emplace_back(upoly::primitive_z(back), mult);
        }
    }
    for (const auto& [v, k] : eig) s.eigenvalues.emplace_back(v, k);
    if (s.total_degree() != n)
        throw std::logic_error("spectrum degrees do not add up");
    return s;
}

std::tuple<Rat, Rat, Rat> trace_check(const Quandle& q, const QElement& u) {
    if (u.q != &q && !(*u.q == q))
        throw std::invalid_argument("element over a different quandle");
    ExactMatrix m = right_mult_matrix(u);
    Rat fixed_sum(0);
    for (int i = 0; i < q.size(); ++i)
        fixed_sum += u.c[size_t(i)] * q.fixed_points_of_column(i);
    return {m.trace(), fixed_sum, augmentation(u)};
}

AlgebraSpectrum algebra_spectrum(const Quandle& q,
                                 const std::vector<std::vector<Rat>>& idempotents) {
    AlgebraSpectrum out;
    std::set<Rat> values;
    for (const auto& coeffs : idempotents) {
        QElement u = q_element(q, coeffs);
        if (!is_idempotent(u))
            throw std::invalid_argument("algebra spectrum expects idempotents: " +
                                        element_str(coeffs));
        Spectrum s = rational_spectrum(right_mult_matrix(u));
        for (const auto& [v, k] : s.eigenvalues) values.insert(v);
        if (s.has_residual()) out.has_residual = true;
    }
    out.eigenvalues.assign(values.begin(), values.end());
    return out;
}

bool annihilator_check(const QElement& u) {
    ExactMatrix m = right_mult_matrix(u);
    ExactMatrix m2 = m * m;
    return (m2 * m - m).is_zero();
}

} // namespace qr
