#include "qr/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qr {

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.vars_ = {name};
    p.terms_[Exps{1}] = Rat(1);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rat Polynomial::constant_term() const {
    for (const auto& [e, c] : terms_) {
        bool zero = std::all_of(e.begin(), e.end(), [](uint8_t x) { return x == 0; });
        if (zero) return c;
    }
    return Rat(0);
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (uint8_t x : e) t += x;
        d = std::max(d, t);
    }
    return d < 0 ? 0 : d;
}

int Polynomial::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_)
        if (idx < e.size()) d = std::max(d, int(e[idx]));
    return d;
}

bool Polynomial::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

Rat Polynomial::linear_coeff(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return Rat(0);
    size_t idx = static_cast<size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_) {
        if (idx >= e.size() || e[idx] != 1) continue;
        int total = 0;
        for (uint8_t x : e) total += x;
        if (total == 1) return c;
    }
    return Rat(0);
}

void Polynomial::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

void Polynomial::align(const Polynomial& a, const Polynomial& b,
                       std::vector<std::string>& vars,
                       std::vector<int>& map_a, std::vector<int>& map_b) {
    vars = a.vars_;
    for (const auto& v : b.vars_)
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    auto index_map = [&vars](const std::vector<std::string>& from) {
        std::vector<int> m(from.size());
        for (size_t i = 0; i < from.size(); ++i)
            m[i] = int(std::find(vars.begin(), vars.end(), from[i]) - vars.begin());
        return m;
    };
    map_a = index_map(a.vars_);
    map_b = index_map(b.vars_);
}

Polynomial Polynomial::remapped(const std::vector<std::string>& vars,
                                const std::vector<int>& map) const {
    Polynomial r;
    r.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exps ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[size_t(map[i])] = e[i];
        r.terms_[ne] += c;
    }
    r.strip_zeros();
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<std::string> vars;
    std::vector<int> ma, mb;
    Polynomial::align(a, b, vars, ma, mb);
    Polynomial r = a.remapped(vars, ma);
    Polynomial bb = b.remapped(vars, mb);
    for (const auto& [e, c] : bb.terms_) r.terms_[e] += c;
    r.strip_zeros();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<std::string> vars;
    std::vector<int> ma, mb;
    Polynomial::align(a, b, vars, ma, mb);
    Polynomial aa = a.remapped(vars, ma);
    Polynomial bb = b.remapped(vars, mb);
    Polynomial r;
    r.vars_ = vars;
    for (const auto& [ea, ca] : aa.terms_) {
        for (const auto& [eb, cb] : bb.terms_) {
            Polynomial::Exps e(vars.size(), 0);
            for (size_t i = 0; i < vars.size(); ++i) {
                int s = int(ea[i]) + int(eb[i]);
                if (s > 255) throw std::overflow_error("polynomial degree overflow");
                e[i] = uint8_t(s);
            }
            r.terms_[e] += ca * cb;
        }
    }
    r.strip_zeros();
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return (a - b).is_zero();
}

Rat Polynomial::subst(const std::map<std::string, Rat>& assignment) const {
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(vars_[i]);
            if (it == assignment.end())
                throw std::invalid_argument("unassigned variable: " + vars_[i]);
            for (int k = 0; k < e[i]; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::subst_partial(const std::map<std::string, Rat>& assignment) const {
    Polynomial acc;
    for (const auto& [e, c] : terms_) {
        Polynomial term(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(vars_[i]);
            Polynomial f = (it != assignment.end()) ? Polynomial(it->second)
                                                    : Polynomial::variable(vars_[i]);
            for (int k = 0; k < e[i]; ++k) term *= f;
        }
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string>& renaming) const {
    Polynomial r;
    for (const auto& v : vars_) {
        auto it = renaming.find(v);
        r.vars_.push_back(it == renaming.end() ? v : it->second);
    }
    r.terms_ = terms_;
    return r;
}

Polynomial Polynomial::coeff_of_linear(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return Polynomial();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (idx >= e.size() || e[idx] != 1) continue;
        Exps ne = e;
        ne[idx] = 0;
        r.terms_[ne] += c;
    }
    r.strip_zeros();
    return r;
}

Polynomial Polynomial::drop_vars(const std::vector<std::string>& block) const {
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (size_t i = 0; i < e.size() && keep; ++i)
            if (e[i] > 0 && std::find(block.begin(), block.end(), vars_[i]) != block.end())
                keep = false;
        if (keep) r.terms_[e] += c;
    }
    r.strip_zeros();
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // Print low-degree terms first (constant leading), matching the
    // table-rendering convention "1-2*a".
    std::vector<std::pair<Exps, Rat>> items(terms_.begin(), terms_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (uint8_t x : a.first) da += x;
        for (uint8_t x : b.first) db += x;
        if (da != db) return da < db;
        return b.first < a.first; // earlier-declared variables print first
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : items) {
        Rat a = abs(c);
        bool neg = c < 0;
        std::string mon;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += vars_[i];
            if (e[i] > 1) mon += "^" + std::to_string(int(e[i]));
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (mon.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mon;
        }
    }
    return os.str();
}

} // namespace qr
