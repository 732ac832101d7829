#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fgroup/bigint.hpp"

namespace fgroup {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal form D = U·M·V of an integer matrix. The group presented is
/// Z^cols / (row space of M); generator e_j maps to row j of V.
struct SmithForm {
    std::vector<BigInt> diagonal; ///< d_1 | d_2 | ... , nonnegative, length min(rows, cols)
    IntMatrix column_transform;   ///< V, unimodular cols x cols
};

namespace detail {

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (auto& row : m) {
        std::swap(row[a], row[b]);
    }
}

inline void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q)
{
    for (auto& row : m) {
        row[dst] -= q * row[src];
    }
}

} // namespace detail

/// Smith normal form over exact integers, tracking the column transform.
inline SmithForm smith_normal_form(IntMatrix m, std::size_t cols)
{
    const std::size_t rows = m.size();
    IntMatrix v(cols, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) {
        v[i][i] = 1;
    }
    const std::size_t diag = std::min(rows, cols);

    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == rows) {
                break;
            }
            std::swap(m[t], m[pi]);
            detail::swap_cols(m, t, pj);
            detail::swap_cols(v, t, pj);

            bool clean = true;
            BigInt q;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) {
                    continue;
                }
                mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) {
                    m[i][j] -= q * m[t][j];
                }
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) {
                    continue;
                }
                mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                detail::add_col_multiple(m, j, t, q);
                detail::add_col_multiple(v, j, t, q);
                clean = clean && m[t][j] == 0;
            }
            if (!clean) {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t c = t; c < cols; ++c) {
                            m[t][c] += m[i][c];
                        }
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
    }

    SmithForm out;
    out.diagonal.resize(diag);
    for (std::size_t t = 0; t < diag; ++t) {
        if (sgn(m[t][t]) < 0) {
            for (auto& row : v) {
                row[t] = -row[t];
            }
        }
        out.diagonal[t] = abs(m[t][t]);
    }
    out.column_transform = std::move(v);
    return out;
}

/// Invariant factors only (no transform bookkeeping beyond what the routine keeps).
inline std::vector<BigInt> invariant_factors(IntMatrix m, std::size_t cols)
{
    return smith_normal_form(std::move(m), cols).diagonal;
}

} // namespace fgroup
