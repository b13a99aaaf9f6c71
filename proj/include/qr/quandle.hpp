#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qr {

// n x n multiplication table with 0-based entries; entry (x, y) is x*y.
using Table = std::vector<std::vector<int>>;

enum class Axiom { Idempotency, RightBijectivity, RightDistributivity };

struct AxiomViolation {
    Axiom axiom;
    int x = -1, y = -1, z = -1;
    std::string message() const;
};

struct QuandleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Quandle {
public:
    Quandle() = default;

    // Shape and range problems throw std::invalid_argument; axiom failures
    // are reported with a witness.
    static std::optional<AxiomViolation> check(const Table& t);
    static Quandle from_table(Table t, std::string name = "");

    int size() const { return n_; }
    int op(int x, int y) const { return table_[size_t(x) * n_ + y]; }
    // a = c * b for a unique c; the right inverse operation.
    int inv_op(int a, int b) const { return inv_[size_t(a) * n_ + b]; }
    const std::string& name() const { return name_; }
    Table table() const;

    // Column y of the table as the permutation S_y.
    std::vector<int> right_column(int y) const;
    int fixed_points_of_column(int y) const;

    friend bool operator==(const Quandle& a, const Quandle& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

private:
    int n_ = 0;
    std::string name_;
    std::vector<int> table_; // row-major
    std::vector<int> inv_;   // inv_[a*n+b] = c with c*b = a
};

Quandle trivial_quandle(int n);
Quandle dihedral_quandle(int n);

// Finite group given by a 0-based multiplication table; validated.
Quandle conj_quandle(const Table& group, std::string name = "");
Quandle core_quandle(const Table& group, std::string name = "");
bool is_group_table(const Table& g);

bool is_latin(const Quandle& q);
bool is_medial(const Quandle& q);
bool is_commutative(const Quandle& q);
bool is_involutory(const Quandle& q);

struct QuandleMap {
    const Quandle* source = nullptr;
    const Quandle* target = nullptr;
    std::vector<int> values;
};

bool is_homomorphism(const QuandleMap& f);
bool is_covering(const QuandleMap& f);

// Backtracking search pruned by per-element profiles; intended for order <= 20.
std::optional<std::vector<int>> is_isomorphic(const Quandle& a, const Quandle& b);

// Orbits of the inner automorphism group generated by the columns S_x.
std::vector<std::vector<int>> inner_orbits(const Quandle& q);

// All congruences with more than one and fewer than n classes, as class-label
// vectors (labels are 0-based and appear in order of first occurrence).
std::vector<std::vector<int>> proper_congruences(const Quandle& q);
Quandle quotient_quandle(const Quandle& q, const std::vector<int>& classes,
                         std::string name = "");

// --- file formats ---------------------------------------------------------
// Plain text: first line n, then n rows of n whitespace-separated 1-based
// entries.  The JSON form has fields name, order, table (1-based rows).
Quandle parse_quandle_text(const std::string& text, const std::string& name = "");
std::string quandle_to_text(const Quandle& q);
Quandle load_quandle(const std::string& path); // sniffs text vs JSON
std::string quandle_to_json_string(const Quandle& q);

} // namespace qr
