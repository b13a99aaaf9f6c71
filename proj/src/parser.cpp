#include "qr/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qr {

namespace {

struct Value {
    Polynomial scalar;
    bool is_vec = false;
    std::vector<Polynomial> vec;
};

class LiteralParser {
public:
    LiteralParser(const std::string& text, int order, bool allow_vars)
        : s_(text), n_(order), allow_vars_(allow_vars) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

    std::vector<std::string> params;

private:
    const std::string& s_;
    size_t pos_ = 0;
    int n_;
    bool allow_vars_;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Value expr() {
        bool neg = eat('-');
        Value acc = term();
        if (neg) acc = negate(acc);
        while (true) {
            if (eat('+')) acc = add(acc, term(), false);
            else if (eat('-')) acc = add(acc, term(), true);
            else break;
        }
        return acc;
    }

    Value term() {
        Value acc = factor();
        while (true) {
            if (eat('*')) acc = multiply(acc, factor());
            else if (eat('/')) acc = divide(acc, factor());
            else break;
        }
        return acc;
    }

    Value factor() {
        skip();
        if (eat('(')) {
            Value v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Value v;
            v.scalar = Polynomial(Int(s_.substr(start, pos_ - start)));
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name.size() >= 2 && name[0] == 'e' &&
                std::all_of(name.begin() + 1, name.end(),
                            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                int idx = std::stoi(name.substr(1));
                if (idx < 1 || idx > n_) fail("basis index out of range: " + name);
                Value v;
                v.is_vec = true;
                v.vec.assign(size_t(n_), Polynomial());
                v.vec[size_t(idx - 1)] = Polynomial(1);
                return v;
            }
            if (!allow_vars_) fail("variables are not allowed here: " + name);
            if (std::find(params.begin(), params.end(), name) == params.end())
                params.push_back(name);
            Value v;
            v.scalar = Polynomial::variable(name);
            return v;
        }
        fail("unexpected character");
    }

    Value negate(const Value& a) {
        Value r = a;
        if (r.is_vec) {
            for (auto& p : r.vec) p = -p;
        } else {
            r.scalar = -r.scalar;
        }
        return r;
    }

    Value add(const Value& a, const Value& b, bool sub) {
        if (a.is_vec != b.is_vec) fail("cannot add a scalar to a basis combination");
        Value r = a;
        if (a.is_vec) {
            for (size_t i = 0; i < r.vec.size(); ++i)
                r.vec[i] = sub ? r.vec[i] - b.vec[i] : r.vec[i] + b.vec[i];
        } else {
            r.scalar = sub ? r.scalar - b.scalar : r.scalar + b.scalar;
        }
        return r;
    }

    Value multiply(const Value& a, const Value& b) {
        if (a.is_vec && b.is_vec) fail("products of basis combinations are not literals");
        if (!a.is_vec && !b.is_vec) {
            Value r;
            r.scalar = a.scalar * b.scalar;
            return r;
        }
        const Value& vec = a.is_vec ? a : b;
        const Value& sc = a.is_vec ? b : a;
        Value r = vec;
        for (auto& p : r.vec) p = sc.scalar * p;
        return r;
    }

    Value divide(const Value& a, const Value& b) {
        if (b.is_vec || !b.scalar.is_constant()) fail("divisor must be a constant");
        Rat d = b.scalar.constant_term();
        if (d == 0) fail("division by zero");
        Value r = a;
        Polynomial inv(Rat(1) / d);
        if (r.is_vec) {
            for (auto& p : r.vec) p = inv * p;
        } else {
            r.scalar = inv * r.scalar;
        }
        return r;
    }
};

} // namespace

std::vector<Rat> parse_element(const std::string& text, int order) {
    LiteralParser p(text, order, /*allow_vars=*/false);
    Value v = p.parse();
    if (!v.is_vec) throw ParseError("element literal has no basis term: " + text);
    std::vector<Rat> out;
    out.resize(size_t(order));
    for (int i = 0; i < order; ++i) {
        if (!v.vec[size_t(i)].is_constant())
            throw ParseError("non-constant coefficient in element literal");
        out[size_t(i)] = v.vec[size_t(i)].constant_term();
    }
    return out;
}

FamilyLiteral parse_family(const std::string& text, int order) {
    LiteralParser p(text, order, /*allow_vars=*/true);
    Value v = p.parse();
    if (!v.is_vec) throw ParseError("family literal has no basis term: " + text);
    FamilyLiteral f;
    f.params = p.params;
    f.coeffs = v.vec;
    return f;
}

std::string element_str(const std::vector<Rat>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Rat& c = coeffs[i];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1) {
            if (a.get_den() == 1) os << a.get_str() << "*";
            else os << "(" << a.get_str() << ")*";
        }
        os << "e" << i + 1;
    }
    if (first) return "0";
    return os.str();
}

} // namespace qr
