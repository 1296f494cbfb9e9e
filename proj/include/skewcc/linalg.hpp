#pragma once

/**
 * @file linalg.hpp
 * @brief Row reduction over a finite field, on encoding-level matrices.
 *
 * Rows are vectors of element encodings. The reduced row echelon form with
 * zero rows dropped is the canonical presentation used to compare row spaces.
 */

#include <cstdint>
#include <vector>

#include "galois_field.hpp"

namespace skewcc::detail {

using EncRow = std::vector<std::uint32_t>;
using EncMatrix = std::vector<EncRow>;

/// In-place reduced row echelon form; returns the rank.
inline std::size_t rref(const FiniteField& F, EncMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[pivot_row], m[sel]);
        const std::uint32_t inv = F.inv_enc(m[pivot_row][col]);
        for (std::size_t j = col; j < cols; ++j) m[pivot_row][j] = F.mul_enc(inv, m[pivot_row][j]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == pivot_row || m[i][col] == 0) continue;
            const std::uint32_t c = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = F.sub_enc(m[i][j], F.mul_enc(c, m[pivot_row][j]));
        }
        ++pivot_row;
    }
    return pivot_row;
}

/// Canonical row-space form: RREF with zero rows removed.
inline EncMatrix canonical_row_space(const FiniteField& F, EncMatrix m) {
    const std::size_t rank = rref(F, m);
    m.resize(rank);
    return m;
}

/// Membership of v in the row space of an already-reduced matrix.
inline bool in_row_space(const FiniteField& F, const EncMatrix& reduced, EncRow v) {
    for (const EncRow& row : reduced) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        const std::uint32_t c = v[lead];
        if (c == 0) continue;
        for (std::size_t j = lead; j < v.size(); ++j) v[j] = F.sub_enc(v[j], F.mul_enc(c, row[j]));
    }
    for (std::uint32_t x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace skewcc::detail
