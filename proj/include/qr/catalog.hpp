#pragma once

#include "qr/idempotents.hpp"
#include "qr/quandle.hpp"

namespace qr {

// One catalog row: the quandle, its integral idempotent families with the
// quandle-under-multiplication flag, and the expected mod-2 idempotent set
// with its flag.
struct CatalogEntry {
    Quandle quandle;
    std::vector<ParametricElement> z_families;
    bool z_quandle = false;
    std::vector<uint32_t> z2_idempotents; // canonical order
    bool z2_quandle = false;
};

// All quandles of the given order (3, 4 or 5), in catalog order.
const std::vector<CatalogEntry>& catalog(int order);

// Index (within order 5) of the five-element medial quandle whose mod-2
// idempotents form the ten-element quandle used by the coloring examples.
int catalog_index_of_medial_five();

// Convenience: the expected ten-by-ten multiplication table of that
// idempotent quandle, as indices into the canonical mod-2 ordering.
const std::vector<std::vector<int>>& expected_idempotent_quandle_table();

} // namespace qr
