#include "qr/quandle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace qr {

std::string AxiomViolation::message() const {
    std::ostringstream os;
    switch (axiom) {
        case Axiom::Idempotency:
            os << "idempotency fails at x=" << x + 1 << ": x*x != x";
            break;
        case Axiom::RightBijectivity:
            os << "column " << y + 1 << " is not a permutation (rows "
               << x + 1 << " and " << z + 1 << " collide)";
            break;
        case Axiom::RightDistributivity:
            os << "right distributivity fails at (x,y,z)=(" << x + 1 << ","
               << y + 1 << "," << z + 1 << ")";
            break;
    }
    return os.str();
}

std::optional<AxiomViolation> Quandle::check(const Table& t) {
    const int n = int(t.size());
    if (n == 0) throw std::invalid_argument("empty table");
    for (const auto& row : t) {
        if (int(row.size()) != n) throw std::invalid_argument("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    }
    for (int x = 0; x < n; ++x)
        if (t[x][x] != x) return AxiomViolation{Axiom::Idempotency, x, x, -1};
    for (int y = 0; y < n; ++y) {
        std::vector<int> seen(n, -1);
        for (int x = 0; x < n; ++x) {
            int v = t[x][y];
            if (seen[v] >= 0)
                return AxiomViolation{Axiom::RightBijectivity, seen[v], y, x};
            seen[v] = x;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t[t[x][y]][z] != t[t[x][z]][t[y][z]])
                    return AxiomViolation{Axiom::RightDistributivity, x, y, z};
    return std::nullopt;
}

Quandle Quandle::from_table(Table t, std::string name) {
    if (auto v = check(t)) throw QuandleError(v->message());
    Quandle q;
    q.n_ = int(t.size());
    q.name_ = std::move(name);
    q.table_.resize(size_t(q.n_) * q.n_);
    q.inv_.resize(size_t(q.n_) * q.n_);
    for (int x = 0; x < q.n_; ++x)
        for (int y = 0; y < q.n_; ++y)
            q.table_[size_t(x) * q.n_ + y] = t[x][y];
    for (int b = 0; b < q.n_; ++b)
        for (int c = 0; c < q.n_; ++c)
            q.inv_[size_t(t[c][b]) * q.n_ + b] = c;
    return q;
}

Table Quandle::table() const {
    Table t(n_, std::vector<int>(n_));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) t[x][y] = op(x, y);
    return t;
}

std::vector<int> Quandle::right_column(int y) const {
    std::vector<int> col(n_);
    for (int x = 0; x < n_; ++x) col[x] = op(x, y);
    return col;
}

int Quandle::fixed_points_of_column(int y) const {
    int k = 0;
    for (int x = 0; x < n_; ++x)
        if (op(x, y) == x) ++k;
    return k;
}

Quandle trivial_quandle(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return Quandle::from_table(t, "T" + std::to_string(n));
}

Quandle dihedral_quandle(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
    return Quandle::from_table(t, "R" + std::to_string(n));
}

bool is_group_table(const Table& g) {
    const int n = int(g.size());
    if (n == 0) return false;
    for (const auto& row : g) {
        if (int(row.size()) != n) return false;
        for (int v : row)
            if (v < 0 || v >= n) return false;
    }
    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool left_id = true, right_id = true;
        for (int x = 0; x < n; ++x) {
            if (g[c][x] != x) left_id = false;
            if (g[x][c] != x) right_id = false;
        }
        if (left_id && right_id) { e = c; break; }
    }
    if (e < 0) return false;
    for (int x = 0; x < n; ++x) {
        bool has_inv = false;
        for (int y = 0; y < n; ++y)
            if (g[x][y] == e && g[y][x] == e) has_inv = true;
        if (!has_inv) return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g[g[a][b]][c] != g[a][g[b][c]]) return false;
    return true;
}

static int group_inverse(const Table& g, int x) {
    const int n = int(g.size());
    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool id = true;
        for (int y = 0; y < n; ++y)
            if (g[c][y] != y || g[y][c] != y) { id = false; break; }
        if (id) { e = c; break; }
    }
    for (int y = 0; y < n; ++y)
        if (g[x][y] == e) return y;
    return -1;
}

Quandle conj_quandle(const Table& group, std::string name) {
    if (!is_group_table(group)) throw std::invalid_argument("not a group table");
    const int n = int(group.size());
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = group[group[y][x]][group_inverse(group, y)]; // y x y^-1
    return Quandle::from_table(t, name.empty() ? "Conj" : name);
}

Quandle core_quandle(const Table& group, std::string name) {
    if (!is_group_table(group)) throw std::invalid_argument("not a group table");
    const int n = int(group.size());
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = group[group[y][group_inverse(group, x)]][y]; // y x^-1 y
    return Quandle::from_table(t, name.empty() ? "Core" : name);
}

bool is_latin(const Quandle& q) {
    const int n = q.size();
    for (int x = 0; x < n; ++x) {
        std::vector<bool> seen(n, false);
        for (int y = 0; y < n; ++y) {
            int v = q.op(x, y);
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

bool is_medial(const Quandle& q) {
    const int n = q.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w)
                    if (q.op(q.op(x, y), q.op(z, w)) != q.op(q.op(x, z), q.op(y, w)))
                        return false;
    return true;
}

bool is_commutative(const Quandle& q) {
    const int n = q.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (q.op(x, y) != q.op(y, x)) return false;
    return true;
}

bool is_involutory(const Quandle& q) {
    const int n = q.size();
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (q.op(q.op(x, y), y) != x) return false;
    return true;
}

bool is_homomorphism(const QuandleMap& f) {
    const int n = f.source->size();
    if (int(f.values.size()) != n) return false;
    for (int v : f.values)
        if (v < 0 || v >= f.target->size()) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f.values[size_t(f.source->op(x, y))] !=
                f.target->op(f.values[size_t(x)], f.values[size_t(y)]))
                return false;
    return true;
}

bool is_covering(const QuandleMap& f) {
    if (!is_homomorphism(f)) return false;
    const int n = f.source->size();
    std::vector<bool> hit(f.target->size(), false);
    for (int v : f.values) hit[size_t(v)] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
    // S_x = S_x' whenever both map to the same point.
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (f.values[size_t(x)] != f.values[size_t(y)]) continue;
            for (int w = 0; w < n; ++w)
                if (f.source->op(w, x) != f.source->op(w, y)) return false;
        }
    return true;
}

namespace {

// Invariant profile of an element, refined WL-style so the isomorphism
// backtracking only tries class-compatible images.
std::vector<int> element_classes(const Quandle& q) {
    const int n = q.size();
    auto orbs = inner_orbits(q);
    std::vector<int> orbit_size(n);
    for (const auto& o : orbs)
        for (int x : o) orbit_size[size_t(x)] = int(o.size());

    std::vector<std::string> sig(n);
    for (int x = 0; x < n; ++x) {
        // cycle type of S_x
        std::vector<int> col = q.right_column(x);
        std::vector<bool> used(n, false);
        std::vector<int> cycles;
        for (int s = 0; s < n; ++s) {
            if (used[s]) continue;
            int len = 0, c = s;
            while (!used[c]) { used[c] = true; c = col[c]; ++len; }
            cycles.push_back(len);
        }
        std::sort(cycles.begin(), cycles.end());
        std::ostringstream os;
        os << orbit_size[size_t(x)] << "|" << q.fixed_points_of_column(x) << "|";
        for (int c : cycles) os << c << ",";
        sig[x] = os.str();
    }
    std::vector<int> cls(n);
    {
        std::vector<std::string> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int x = 0; x < n; ++x)
            cls[x] = int(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
    }
    // refine by multiset of (class of x*y, class of y*x) over y
    for (int round = 0; round < n; ++round) {
        std::vector<std::string> rsig(n);
        for (int x = 0; x < n; ++x) {
            std::vector<std::pair<int, int>> nb;
            for (int y = 0; y < n; ++y)
                nb.emplace_back(cls[size_t(q.op(x, y))], cls[size_t(q.op(y, x))]);
            std::sort(nb.begin(), nb.end());
            std::ostringstream os;
            os << cls[x] << ";";
            for (auto& [a, b] : nb) os << a << ":" << b << ",";
            rsig[x] = os.str();
        }
        std::vector<std::string> sorted = rsig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> ncls(n);
        for (int x = 0; x < n; ++x)
            ncls[x] = int(std::lower_bound(sorted.begin(), sorted.end(), rsig[x]) - sorted.begin());
        if (ncls == cls) break;
        cls = ncls;
    }
    return cls;
}

bool iso_extend(const Quandle& a, const Quandle& b, std::vector<int>& f,
                std::vector<bool>& used, int x,
                const std::vector<int>& ca, const std::vector<int>& cb) {
    const int n = a.size();
    if (x == n) return true;
    for (int img = 0; img < n; ++img) {
        if (used[img] || ca[size_t(x)] != cb[size_t(img)]) continue;
        f[size_t(x)] = img;
        used[img] = true;
        bool ok = true;
        // consistency over already-assigned pairs
        for (int y = 0; y < n && ok; ++y) {
            if (f[size_t(y)] < 0) continue;
            int xy = a.op(x, y);
            if (f[size_t(xy)] >= 0 && f[size_t(xy)] != b.op(img, f[size_t(y)])) ok = false;
            int yx = a.op(y, x);
            if (ok && f[size_t(yx)] >= 0 && f[size_t(yx)] != b.op(f[size_t(y)], img)) ok = false;
        }
        if (ok && iso_extend(a, b, f, used, x + 1, ca, cb)) return true;
        f[size_t(x)] = -1;
        used[img] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> is_isomorphic(const Quandle& a, const Quandle& b) {
    if (a.size() != b.size()) return std::nullopt;
    auto ca = element_classes(a);
    auto cb = element_classes(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> f(size_t(a.size()), -1);
    std::vector<bool> used(size_t(a.size()), false);
    if (iso_extend(a, b, f, used, 0, ca, cb)) return f;
    return std::nullopt;
}

std::vector<std::vector<int>> inner_orbits(const Quandle& q) {
    const int n = q.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = find(x), b = find(q.op(x, y));
            if (a != b) parent[size_t(a)] = b;
        }
    std::vector<std::vector<int>> orbits;
    std::vector<int> label(n, -1);
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (label[size_t(r)] < 0) {
            label[size_t(r)] = int(orbits.size());
            orbits.emplace_back();
        }
        orbits[size_t(label[size_t(r)])].push_back(x);
    }
    return orbits;
}

namespace {

// Smallest congruence containing the given pairs: union-find closed under
// x~x', y~y' => x*y ~ x'*y'.
std::vector<int> congruence_closure(const Quandle& q, int a, int b) {
    const int n = q.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x); y = find(y);
        if (x == y) return false;
        parent[size_t(x)] = y;
        return true;
    };
    unite(a, b);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int xx = 0; xx < n; ++xx) {
                if (find(x) != find(xx)) continue;
                for (int y = 0; y < n; ++y)
                    for (int yy = 0; yy < n; ++yy) {
                        if (find(y) != find(yy)) continue;
                        if (unite(q.op(x, y), q.op(xx, yy))) changed = true;
                    }
            }
    }
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (cls[size_t(r)] < 0) cls[size_t(r)] = next++;
    }
    std::vector<int> out(n);
    for (int x = 0; x < n; ++x) out[size_t(x)] = cls[size_t(find(x))];
    return out;
}

} // namespace

std::vector<std::vector<int>> proper_congruences(const Quandle& q) {
    const int n = q.size();
    std::vector<std::vector<int>> found;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto cls = congruence_closure(q, a, b);
            int k = *std::max_element(cls.begin(), cls.end()) + 1;
            if (k <= 1 || k >= n) continue;
            if (std::find(found.begin(), found.end(), cls) == found.end())
                found.push_back(cls);
        }
    return found;
}

Quandle quotient_quandle(const Quandle& q, const std::vector<int>& classes,
                         std::string name) {
    const int n = q.size();
    int k = *std::max_element(classes.begin(), classes.end()) + 1;
    Table t(k, std::vector<int>(k, -1));
    std::vector<int> rep(size_t(k), -1);
    for (int x = 0; x < n; ++x)
        if (rep[size_t(classes[size_t(x)])] < 0) rep[size_t(classes[size_t(x)])] = x;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            t[i][j] = classes[size_t(q.op(rep[size_t(i)], rep[size_t(j)]))];
    // well-definedness is exactly the congruence property
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (classes[size_t(q.op(x, y))] !=
                t[size_t(classes[size_t(x)])][size_t(classes[size_t(y)])])
                throw std::invalid_argument("partition is not a congruence");
    return Quandle::from_table(t, std::move(name));
}

// --- file formats ----------------------------------------------------------

namespace {

Quandle table_from_one_based(Table t, const std::string& name) {
    for (auto& row : t)
        for (int& v : row) v -= 1;
    auto v = Quandle::check(t);
    if (!v) return Quandle::from_table(std::move(t), name);
    // Diagnose the common transposition mistake rather than corrupting
    // every downstream computation by silently accepting it.
    Table tr(t.size(), std::vector<int>(t.size()));
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < t.size(); ++j) tr[j][i] = t[i][j];
    if (!Quandle::check(tr))
        throw QuandleError("table is valid only under transpose; expected rows to "
                           "be the left operand (entry (x,y) = x*y). " + v->message());
    throw QuandleError(v->message());
}

} // namespace

Quandle parse_quandle_text(const std::string& text, const std::string& name) {
    std::istringstream is(text);
    int n;
    if (!(is >> n) || n < 1) throw QuandleError("expected order on the first line");
    Table t;
    t.assign(size_t(n), std::vector<int>(size_t(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!(is >> t[size_t(x)][size_t(y)]))
                throw QuandleError("truncated table");
    return table_from_one_based(std::move(t), name);
}

std::string quandle_to_text(const Quandle& q) {
    std::ostringstream os;
    os << q.size() << "\n";
    for (int x = 0; x < q.size(); ++x) {
        for (int y = 0; y < q.size(); ++y)
            os << (y ? " " : "") << q.op(x, y) + 1;
        os << "\n";
    }
    return os.str();
}

Quandle load_quandle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto j = nlohmann::json::parse(text);
        int n = j.at("order").get<int>();
        Table t = j.at("table").get<Table>();
        if (int(t.size()) != n) throw QuandleError("order does not match table");
        std::string name = j.value("name", "");
        return table_from_one_based(std::move(t), name);
    }
    return parse_quandle_text(text, path);
}

std::string quandle_to_json_string(const Quandle& q) {
    nlohmann::ordered_json j;
    j["name"] = q.name();
    j["order"] = q.size();
    Table t = q.table();
    for (auto& row : t)
        for (int& v : row) v += 1;
    j["table"] = t;
    return j.dump(2);
}

} // namespace qr
