#include "qr/catalog.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>

namespace qr {

namespace {

struct RowData {
    const char* table;      // rows separated by ';', 1-based entries
    const char* families;   // integral families separated by ';'
    bool z_quandle;
    const char* z2;         // explicit list, or "@odd" / "@all"
    bool z2_quandle;
};

// Order 3.
const RowData kOrder3[] = {
    {"1 1 1;2 2 2;3 3 3",
     "a*e1+b*e2+(1-a-b)*e3", true,
     "e1,e2,e3,e1+e2+e3", true},
    {"1 1 2;2 2 1;3 3 3",
     "a*(e1+e2)+(1-2*a)*e3; a*e1+(1-a)*e2", false,
     "e1,e2,e3,e1+e2+e3", true},
    {"1 3 2;3 2 1;2 1 3",
     "e1; e2; e3", true,
     "@all", false},
};

// Order 4.
const RowData kOrder4[] = {
    {"1 1 1 1;2 2 2 2;3 3 3 3;4 4 4 4",
     "a*e1+b*e2+c*e3+(1-a-b-c)*e4", true,
     "@odd", true},
    {"1 1 1 1;2 2 2 3;3 3 3 2;4 4 4 4",
     "a*e1+b*(e2+e3)+(1-a-2*b)*e4; (1-a-b)*e1+a*e2+b*e3", false,
     "e1,e2,e3,e4,e1+e2+e3,e2+e3+e4", true},
    {"1 1 1 2;2 2 2 3;3 3 3 1;4 4 4 4",
     "a*(e1+e2+e3)+(1-3*a)*e4; a*e1+b*e2+(1-a-b)*e3", false,
     "e1,e2,e3,e4,e1+e2+e3", true},
    {"1 1 1 1;2 2 4 3;3 4 3 2;4 3 2 4",
     "(1-3*a)*e1+a*(e2+e3+e4); (1-a)*e1+a*e4; (1-a)*e1+a*e3; (1-a)*e1+a*e2", false,
     "e1,e2,e3,e4,e2+e3,e2+e4,e3+e4,e2+e3+e4", false},
    {"1 1 2 2;2 2 1 1;3 3 3 3;4 4 4 4",
     "a*(e1+e2)+b*e3+(1-2*a-b)*e4; a*e1+(1-a)*e2+b*(e3-e4)", false,
     "@odd", true},
    {"1 1 2 2;2 2 1 1;4 4 3 3;3 3 4 4",
     "a*e1+(1-a)*e2; a*e3+(1-a)*e4", true,
     "@odd", true},
    {"1 4 2 3;3 2 4 1;4 1 3 2;2 3 1 4",
     "e1; e2; e3; e4", true,
     "e1,e2,e3,e4", true},
};

// Order 5.
const RowData kOrder5[] = {
    {"1 1 1 1 1;2 2 2 2 2;3 3 3 3 3;4 4 4 4 4;5 5 5 5 5",
     "a*e1+b*e2+c*e3+d*e4+(1-a-b-c-d)*e5", true,
     "@odd", true},
    {"1 1 1 1 1;2 2 2 2 2;3 3 3 3 4;4 4 4 4 3;5 5 5 5 5",
     "(1-a-2*b-c)*e1+a*e2+b*(e3+e4)+c*e5; (1-a-b-c)*e1+a*e2+b*e3+c*e4", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e2+e4,e1+e2+e5,e1+e3+e4,e2+e3+e4,e3+e4+e5,"
     "e1+e2+e3+e4+e5", true},
    {"1 1 1 1 1;2 2 2 2 3;3 3 3 3 4;4 4 4 4 2;5 5 5 5 5",
     "(1-3*a-b)*e1+a*(e2+e3+e4)+b*e5; (1-a-b-c)*e1+a*e2+b*e3+c*e4", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e2+e4,e1+e3+e4,e2+e3+e4,e1+e2+e3+e4+e5", true},
    {"1 1 1 1 2;2 2 2 2 1;3 3 3 3 4;4 4 4 4 3;5 5 5 5 5",
     "a*(e1+e2)+b*(e3+e4)+(1-2*a-2*b)*e5; (1-a-b-c)*e1+a*e2+b*e3+c*e4", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e2+e4,e1+e2+e5,e1+e3+e4,e2+e3+e4,e3+e4+e5,"
     "e1+e2+e3+e4+e5", true},
    {"1 1 1 1 2;2 2 2 2 3;3 3 3 3 4;4 4 4 4 1;5 5 5 5 5",
     "a*(e1+e2+e3+e4)+(1-4*a)*e5; (1-a-b-c)*e1+a*e2+b*e3+c*e4", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e2+e4,e1+e3+e4,e2+e3+e4,e1+e2+e3+e4+e5", true},
    {"1 1 1 1 1;2 2 2 2 2;3 3 3 5 4;4 4 5 4 3;5 5 4 3 5",
     "a*e1+(1-a-3*b)*e2+b*(e3+e4+e5); a*e1+(1-a-b)*e2+b*e3; a*e1+(1-a-b)*e2+b*e4;"
     " a*e1+(1-a-b)*e2+b*e5", false,
     "e1,e2,e3,e4,e5,e3+e4,e3+e5,e4+e5,e1+e2+e3,e1+e2+e4,e1+e2+e5,e3+e4+e5,"
     "e1+e2+e3+e4+e5", false},
    {"1 1 1 1 1;2 2 2 3 3;3 3 3 2 2;4 4 4 4 4;5 5 5 5 5",
     "(1-a-b)*e1+a*e2+b*e3+c*(e4-e5); (1-2*a-b-c)*e1+a*(e2+e3)+b*e4+c*e5", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e4+e5,e2+e3+e4,e2+e3+e5,e2+e4+e5,e3+e4+e5,"
     "e1+e2+e3+e4+e5", true},
    {"1 1 1 1 1;2 2 2 3 3;3 3 3 2 2;4 5 5 4 4;5 4 4 5 5",
     "e1+a*(e2-e3)+b*(e4-e5); (1-a-b)*e1+a*e4+b*e5; (1-a-b)*e1+a*e2+b*e3;"
     " (1-2*a-2*b)*e1+a*(e2+e3)+b*(e4+e5)", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e4+e5,e2+e3+e4,e2+e3+e5,e2+e4+e5,e3+e4+e5,"
     "e1+e2+e3+e4+e5", true},
    {"1 1 1 2 2;2 2 2 1 1;3 3 3 3 3;4 4 5 4 4;5 5 4 5 5",
     "a*(e1+e2)+b*e4+(1-2*a-b)*e5; a*(e1+e2)+(1-2*a-2*b)*e3+b*(e4+e5);"
     " a*e1+b*e2+(1-a-b)*e3; a*e1+(1-a)*e2+b*(e4-e5)", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e2+e4,e1+e2+e5,e1+e4+e5,e2+e4+e5,e3+e4+e5,"
     "e1+e2+e3+e4+e5", true},
    {"1 1 1 2 2;2 2 2 3 3;3 3 3 1 1;4 4 4 4 4;5 5 5 5 5",
     "a*(e1+e2+e3)+(1-3*a-b)*e4+b*e5; (1-a-b)*e1+a*e2+b*e3+c*(e4-e5)", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e4+e5,e2+e4+e5,e3+e4+e5,e1+e2+e3+e4+e5", true},
    {"1 1 1 2 3;2 2 2 3 1;3 3 3 1 2;4 4 4 4 4;5 5 5 5 5",
     "a*(e1+e2+e3)+b*e4+(1-3*a-b)*e5; a*e1+b*e2+(1-a-b)*e3", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e2+e3+e4+e5", false},
    {"1 1 1 1 1;2 2 2 2 2;3 3 3 3 3;5 5 5 4 4;4 4 4 5 5",
     "-(a+b)*e1+a*e2+b*e3+(1-c)*e4+c*e5; (1-a-b-2*c)*e1+a*e2+b*e3+c*(e4+e5)", false,
     "@odd", true},
    {"1 1 1 1 1;2 2 2 3 3;3 3 3 2 2;5 5 5 4 4;4 4 4 5 5",
     "-2*a*e1+a*(e2+e3)+b*e4+(1-b)*e5; (1-a-b)*e1+a*e2+b*e3;"
     " (1-2*a-2*b)*e1+a*(e2+e3)+b*(e4+e5)", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e4+e5,e2+e3+e4,e2+e3+e5,e2+e4+e5,e3+e4+e5,"
     "e1+e2+e3+e4+e5", true},
    {"1 1 1 2 2;2 2 2 3 3;3 3 3 1 1;5 5 5 4 4;4 4 4 5 5",
     "(1-a-b)*e1+a*e2+b*e3; a*e4+(1-a)*e5; -(1+2*a)*(e1+e2+e3)+(2+3*a)*(e4+e5)", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e4+e5,e2+e4+e5,e3+e4+e5,e1+e2+e3+e4+e5", true},
    {"1 1 1 1 1;2 2 5 3 4;3 4 3 5 2;4 5 2 4 3;5 3 4 2 5",
     "e1+a*(e2+e3-e4-e5); e1+a*(e2-e3+e4-e5); e1+a*(e2-e3-e4+e5); a*e1+(1-a)*e2;"
     " a*e1+(1-a)*e3; a*e1+(1-a)*e4; a*e1+(1-a)*e5; (1-4*a)*e1+a*(e2+e3+e4+e5)", false,
     "e1,e2,e3,e4,e5,e1+e2+e3+e4+e5", false},
    {"1 1 2 2 2;2 2 1 1 1;3 3 3 3 4;4 4 4 4 3;5 5 5 5 5",
     "a*(e1+e2)+b*(e3+e4)+(1-2*a-2*b)*e5; a*(e1+e2)+b*e3+(1-2*a-b)*e4;"
     " a*e1+(1-a)*e2+b*(e3+e4-2*e5); a*e1+(1-a)*e2+b*(e3-e4)", false,
     "e1,e2,e3,e4,e5,e1+e2+e3,e1+e2+e4,e1+e2+e5,e1+e3+e4,e2+e3+e4,e3+e4+e5,"
     "e1+e2+e3+e4+e5", true},
    {"1 1 2 2 2;2 2 1 1 1;3 3 3 5 4;4 4 5 4 3;5 5 4 3 5",
     "a*(e1+e2)+(1-2*a)*e3; a*(e1+e2)+(1-2*a)*e4; a*(e1+e2)+(1-2*a)*e5;"
     " a*e1+(1-a)*e2; (2+3*a)*(e1+e2)-(1+2*a)*(e3+e4+e5)", false,
     "e1,e2,e3,e4,e5,e3+e4,e3+e5,e4+e5,e1+e2+e3,e1+e2+e4,e1+e2+e5,e3+e4+e5,"
     "e1+e2+e3+e4+e5", false},
    {"1 1 2 2 2;2 2 1 1 1;3 3 3 3 3;5 5 5 4 4;4 4 4 5 5",
     "a*(e1+e2)-2*a*e3+b*e4+(1-b)*e5; a*(e1+e2)+(1-2*a-2*b)*e3+b*(e4+e5);"
     " a*e1+(1-a)*e2-e3+b*e4+(1-b)*e5; a*e1+(1-a)*e2-2*b*e3+b*(e4+e5)", false,
     "@odd", true},
    {"1 1 2 2 2;2 2 1 1 1;4 5 3 5 4;5 3 5 4 3;3 4 4 3 5",
     "e3+a*(e1+e2-e4-e5); e4+a*(e1+e2-e3-e5); e5+a*(e1+e2-e3-e4); a*e1+(1-a)*e2;"
     " (2+3*a)*(e1+e2)-(1+2*a)*(e3+e4+e5)", false,
     "e1,e2,e3,e4,e5,e3+e4,e3+e5,e4+e5,e3+e4+e5,e1+e2+e3+e4+e5", false},
    {"1 3 4 5 2;3 2 5 1 4;4 5 3 2 1;5 1 2 4 3;2 4 1 3 5",
     "e1; e2; e3; e4; e5", true,
     "@all", false},
    {"1 4 5 3 2;3 2 4 5 1;2 5 3 1 4;5 1 2 4 3;4 3 1 2 5",
     "e1; e2; e3; e4; e5", true,
     "e1,e2,e3,e4,e5,e1+e2+e3+e4,e1+e2+e3+e5,e1+e2+e4+e5,e1+e3+e4+e5,e2+e3+e4+e5,"
     "e1+e2+e3+e4+e5", false},
    {"1 4 5 2 3;3 2 1 5 4;4 5 3 1 2;5 3 2 4 1;2 1 4 3 5",
     "e1; e2; e3; e4; e5", true,
     "e1,e2,e3,e4,e5,e1+e2+e3+e4,e1+e2+e3+e5,e1+e2+e4+e5,e1+e3+e4+e5,e2+e3+e4+e5,"
     "e1+e2+e3+e4+e5", false},
};

Table parse_rows(const std::string& spec) {
    Table t;
    std::stringstream ss(spec);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::stringstream rs(row);
        std::vector<int> r;
        int v;
        while (rs >> v) r.push_back(v - 1);
        t.push_back(std::move(r));
    }
    return t;
}

std::vector<uint32_t> parse_z2(const std::string& spec, int n) {
    std::vector<uint32_t> masks;
    if (spec == "@all") {
        for (uint32_t m = 1; m < (uint32_t(1) << n); ++m) masks.push_back(m);
    } else if (spec == "@odd") {
        for (uint32_t m = 1; m < (uint32_t(1) << n); ++m)
            if (std::popcount(m) % 2 == 1) masks.push_back(m);
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) masks.push_back(parse_mask(item, n));
    }
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return masks;
}

std::vector<CatalogEntry> build(int order, const RowData* rows, size_t count) {
    std::vector<CatalogEntry> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        CatalogEntry e;
        std::string name = "Q" + std::to_string(order) + "." + std::to_string(i + 1);
        e.quandle = Quandle::from_table(parse_rows(rows[i].table), name);
        e.z_quandle = rows[i].z_quandle;
        e.z2_idempotents = parse_z2(rows[i].z2, order);
        e.z2_quandle = rows[i].z2_quandle;
        out.push_back(std::move(e));
    }
    // families refer to the final resting place of each quandle
    for (size_t i = 0; i < count; ++i) {
        std::stringstream ss(rows[i].families);
        std::string item;
        while (std::getline(ss, item, ';'))
            out[i].z_families.push_back(family_from_literal(out[i].quandle, item));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog(int order) {
    static std::once_flag flag3, flag4, flag5;
    static std::vector<CatalogEntry> c3, c4, c5;
    switch (order) {
        case 3:
            std::call_once(flag3, [] { c3 = build(3, kOrder3, std::size(kOrder3)); });
            return c3;
        case 4:
            std::call_once(flag4, [] { c4 = build(4, kOrder4, std::size(kOrder4)); });
            return c4;
        case 5:
            std::call_once(flag5, [] { c5 = build(5, kOrder5, std::size(kOrder5)); });
            return c5;
        default:
            throw std::invalid_argument("catalog covers orders 3, 4 and 5");
    }
}

int catalog_index_of_medial_five() { return 13; } // Q5.14

const std::vector<std::vector<int>>& expected_idempotent_quandle_table() {
    // Indices are 0-based positions in the canonical ordering of the ten
    // mod-2 idempotents of the Q5.14 ring: u1..u5 are e1..e5, u6 = e1+e2+e3,
    // u7 = e1+e4+e5, u8 = e2+e4+e5, u9 = e3+e4+e5, u10 = the full sum.
    static const std::vector<std::vector<int>> t = {
        {0, 0, 0, 1, 1, 0, 0, 0, 0, 0},
        {1, 1, 1, 2, 2, 1, 1, 1, 1, 1},
        {2, 2, 2, 0, 0, 2, 2, 2, 2, 2},
        {4, 4, 4, 3, 3, 4, 4, 4, 4, 4},
        {3, 3, 3, 4, 4, 3, 3, 3, 3, 3},
        {5, 5, 5, 5, 5, 5, 5, 5, 5, 5},
        {6, 6, 6, 7, 7, 6, 6, 6, 6, 6},
        {7, 7, 7, 8, 8, 7, 7, 7, 7, 7},
        {8, 8, 8, 6, 6, 8, 8, 8, 8, 8},
        {9, 9, 9, 9, 9, 9, 9, 9, 9, 9},
    };
    return t;
}

} // namespace qr
