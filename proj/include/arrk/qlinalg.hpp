// Exact rational linear algebra: elimination, solving, kernels, rank.
#pragma once

#include <optional>

#include "arrk/rat.hpp"

namespace arrk {

struct RationalMatrix {
    size_t rows = 0;
    size_t cols = 0;
    QMat entries;  // rows x cols

    RationalMatrix() = default;
    RationalMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r, QVec(c, Rat(0))) {}

    Rat& at(size_t i, size_t j) { return entries[i][j]; }
    const Rat& at(size_t i, size_t j) const { return entries[i][j]; }
};

// Result of Gaussian elimination on [A | b]: one solution plus a kernel
// basis of A, or inconsistency.
struct RationalSolveResult {
    bool consistent = false;
    QVec particular;   // a solution of A x = b (when consistent)
    QMat kernel;       // basis of {x : A x = 0}
    size_t rank = 0;
};

inline RationalSolveResult solve_rational(const QMat& a, const QVec& b) {
    size_t r = a.size();
    size_t c = r ? a[0].size() : 0;
    QMat m(r, QVec(c + 1));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < c; ++j) m[i][j] = a[i][j];
        m[i][c] = b.empty() ? Rat(0) : b[i];
    }

    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        size_t p = row;
        while (p < r && m[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(m[p], m[row]);
        Rat inv = 1 / m[row][col];
        for (size_t j = col; j <= c; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j <= c; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    RationalSolveResult res;
    res.rank = row;
    for (size_t i = row; i < r; ++i)
        if (m[i][c] != 0) return res;  // 0 = nonzero
    res.consistent = true;

    std::vector<char> is_pivot(c, 0);
    for (size_t k = 0; k < pivot_col.size(); ++k) is_pivot[pivot_col[k]] = 1;

    res.particular.assign(c, Rat(0));
    for (size_t k = 0; k < pivot_col.size(); ++k) res.particular[pivot_col[k]] = m[k][c];

    for (size_t j = 0; j < c; ++j) {
        if (is_pivot[j]) continue;
        QVec v(c, Rat(0));
        v[j] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m[k][j];
        res.kernel.push_back(std::move(v));
    }
    return res;
}

// Fraction-free (Bareiss) elimination on denominator-cleared rows.
inline size_t integer_rank(ZMat m) {
    size_t r = m.size();
    size_t c = r ? m[0].size() : 0;
    Int prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        size_t p = row;
        while (p < r && m[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(m[p], m[row]);
        for (size_t i = row + 1; i < r; ++i) {
            for (size_t j = col + 1; j < c; ++j)
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return row;
}

inline size_t rational_rank(const QMat& a) {
    if (a.empty()) return 0;
    ZMat m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = primitive_integer_vector(a[i]);
    return integer_rank(std::move(m));
}

inline size_t rational_rank(const RationalMatrix& m) { return rational_rank(m.entries); }

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace arrk
