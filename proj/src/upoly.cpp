#include "qr/upoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qr::upoly {

void normalize(UPolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPolyQ& p) { return int(p.size()) - 1; }

bool is_zero(const UPolyQ& p) { return p.empty(); }

UPolyQ add(const UPolyQ& a, const UPolyQ& b) {
    UPolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

UPolyQ sub(const UPolyQ& a, const UPolyQ& b) {
    UPolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

UPolyQ mul(const UPolyQ& a, const UPolyQ& b) {
    if (a.empty() || b.empty()) return {};
    UPolyQ r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

UPolyQ scale(const Rat& s, const UPolyQ& a) {
    UPolyQ r = a;
    for (auto& c : r) c *= s;
    normalize(r);
    return r;
}

Rat eval(const UPolyQ& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

UPolyQ derivative(const UPolyQ& p) {
    if (p.size() <= 1) return {};
    UPolyQ r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * long(i);
    normalize(r);
    return r;
}

UPolyQ monic(const UPolyQ& p) {
    if (p.empty()) return p;
    return scale(Rat(1) / p.back(), p);
}

std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& a, const UPolyQ& b) {
    if (b.empty()) throw std::invalid_argument("division by the zero polynomial");
    UPolyQ rem = a, quot(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    while (!rem.empty() && rem.size() >= b.size()) {
        Rat c = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        normalize(rem);
    }
    normalize(quot);
    return {quot, rem};
}

UPolyQ divexact(const UPolyQ& a, const UPolyQ& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw std::logic_error("division was not exact");
    return q;
}

UPolyQ gcd(UPolyQ a, UPolyQ b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = monic(r); // keeps coefficient growth in check
    }
    return monic(a);
}

std::vector<std::pair<UPolyQ, int>> squarefree_decomposition(const UPolyQ& p) {
    std::vector<std::pair<UPolyQ, int>> out;
    if (degree(p) < 1) return out;
    UPolyQ a = monic(p);
    UPolyQ g = gcd(a, derivative(a));
    UPolyQ w = divexact(a, g);
    int i = 1;
    while (degree(w) > 0) {
        UPolyQ y = gcd(w, g);
        UPolyQ factor = divexact(w, y);
        if (degree(factor) > 0) out.emplace_back(monic(factor), i);
        w = std::move(y);
        g = divexact(g, w);
        ++i;
    }
    if (degree(g) > 0)
        throw std::logic_error("squarefree decomposition left a factor behind");
    return out;
}

UPolyZ primitive_z(const UPolyQ& p) {
    if (p.empty()) return {};
    Int lcm_den(1);
    for (const auto& c : p) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    UPolyZ z(p.size());
    Int content(0);
    for (size_t i = 0; i < p.size(); ++i) {
        Rat scaled = p[i] * lcm_den;
        z[i] = scaled.get_num();
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
        content = g;
    }
    if (content == 0) return z;
    for (auto& c : z) c /= content;
    if (z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

std::string str(const UPolyZ& p, const char* var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        Int a = abs(p[i]);
        if (first) {
            if (p[i] < 0) os << "-";
            first = false;
        } else {
            os << (p[i] < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return Int(2);
    for (unsigned long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = abs(x - y);
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factorize(Int n, std::map<Int, int>& out) {
    for (long p = 2; p < 100000 && Int(p) * p <= n; p == 2 ? p = 3 : p += 2)
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factorize(d, out);
    factorize(n / d, out);
}

std::vector<Int> divisors_up_to(const Int& n, const Int& bound) {
    std::map<Int, int> f;
    factorize(abs(n), f);
    std::vector<Int> divs = {Int(1)};
    for (const auto& [p, e] : f) {
        size_t sz = divs.size();
        Int pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            if (pk > bound) break;
            for (size_t i = 0; i < sz; ++i) {
                Int d = divs[i] * pk;
                if (d <= bound) divs.push_back(d);
            }
        }
        if (divs.size() > 200000)
            throw ResourceLimitError("too many divisor candidates for root extraction");
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

} // namespace

std::vector<std::pair<Int, int>> integer_roots_monic(const UPolyQ& monic_poly) {
    UPolyQ p = monic_poly;
    normalize(p);
    if (p.empty() || p.back() != 1)
        throw std::invalid_argument("expected a monic polynomial");
    std::vector<std::pair<Int, int>> roots;
    // strip roots at zero
    int zero_mult = 0;
    while (p.size() > 1 && p.front() == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Int(0), zero_mult);
    if (degree(p) < 1) return roots;

    // Cauchy bound: every root r satisfies |r| <= 1 + max |c_i|
    Int bound(1);
    for (const auto& c : p) {
        Int a = abs(c.get_num()); // coefficients are integers here
        if (a > bound) bound = a;
    }
    bound += 1;
    Int c0 = p.front().get_num();
    for (const Int& d : divisors_up_to(c0, bound)) {
        for (int sign = 0; sign < 2 && degree(p) >= 1; ++sign) {
            Int r = sign ? -d : d;
            if (eval(p, Rat(r)) != 0) continue;
            int mult = 0;
            UPolyQ lin = {Rat(-r), Rat(1)};
            while (true) {
                auto [q, rem] = divmod(p, lin);
                if (!rem.empty()) break;
                p = q;
                ++mult;
            }
            roots.emplace_back(r, mult);
        }
        if (degree(p) < 1) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace qr::upoly
