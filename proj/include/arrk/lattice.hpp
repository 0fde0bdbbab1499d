// Integer lattices in canonical Hermite normal form, with the solve and
// kernel machinery built on a tracked unimodular transform.
//
// Convention, fixed once: row-style echelon, pivot entries positive,
// entries above each pivot reduced into [0, pivot).  Equal lattices have
// identical basis matrices, so equality is representation equality.
#pragma once

#include <optional>

#include "arrk/qlinalg.hpp"
#include "arrk/rat.hpp"

namespace arrk {

struct IntegerLattice {
    size_t ambient_rank = 0;  // m: vectors live in Z^m
    ZMat basis;               // canonical HNF rows, linearly independent

    size_t rank() const { return basis.size(); }
    bool operator==(const IntegerLattice& o) const {
        return ambient_rank == o.ambient_rank && basis == o.basis;
    }
};

// HNF of the row span of `a`, with U unimodular such that U * a = [H; 0].
// Rows rank.. of U span the left kernel {x : x * a = 0}.
struct HnfTransform {
    ZMat h;          // `rank` nonzero rows, canonical
    ZMat u;          // square, size = #input rows
    std::vector<size_t> pivots;
    size_t rank = 0;
    size_t cols = 0;
};

namespace detail {

inline void row_axpy(ZVec& dst, const Int& q, const ZVec& src) {
    for (size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

}  // namespace detail

inline HnfTransform hnf_transform(const ZMat& a, size_t cols) {
    size_t r = a.size();
    HnfTransform t;
    t.cols = cols;
    ZMat m = a;
    t.u.assign(r, ZVec(r, Int(0)));
    for (size_t i = 0; i < r; ++i) t.u[i][i] = 1;

    size_t row = 0;
    for (size_t col = 0; col < cols && row < r; ++col) {
        // gcd out the column below `row`
        for (;;) {
            size_t best = r;
            for (size_t i = row; i < r; ++i) {
                if (m[i][col] == 0) continue;
                if (best == r || cmp(abs(m[i][col]), abs(m[best][col])) < 0) best = i;
            }
            if (best == r) break;
            if (best != row) {
                std::swap(m[best], m[row]);
                std::swap(t.u[best], t.u[row]);
            }
            bool done = true;
            for (size_t i = row + 1; i < r; ++i) {
                if (m[i][col] == 0) continue;
                Int q = fdiv(m[i][col], m[row][col]);
                detail::row_axpy(m[i], q, m[row]);
                detail::row_axpy(t.u[i], q, t.u[row]);
                if (m[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (row < r && m[row][col] != 0) {
            if (m[row][col] < 0) {
                for (auto& x : m[row]) x = -x;
                for (auto& x : t.u[row]) x = -x;
            }
            for (size_t i = 0; i < row; ++i) {
                Int q = fdiv(m[i][col], m[row][col]);
                if (q != 0) {
                    detail::row_axpy(m[i], q, m[row]);
                    detail::row_axpy(t.u[i], q, t.u[row]);
                }
            }
            t.pivots.push_back(col);
            ++row;
        }
    }
    t.rank = row;
    t.h.assign(m.begin(), m.begin() + row);
    return t;
}

inline IntegerLattice hnf(const ZMat& generators, size_t ambient) {
    IntegerLattice l;
    l.ambient_rank = ambient;
    if (!generators.empty()) l.basis = hnf_transform(generators, ambient).h;
    return l;
}

inline bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) { return a == b; }

// Membership / solve against an echelon basis: reduce v by pivot rows,
// requiring exact division at every pivot.
inline std::optional<ZVec> solve_in_rows(const ZMat& h, const std::vector<size_t>& pivots,
                                         const ZVec& v) {
    ZVec residual = v;
    ZVec coeff(h.size(), Int(0));
    for (size_t k = 0; k < h.size(); ++k) {
        const Int& p = h[k][pivots[k]];
        Int rem = residual[pivots[k]] % p;
        if (rem != 0) return std::nullopt;
        Int q = residual[pivots[k]] / p;
        coeff[k] = q;
        if (q != 0) detail::row_axpy(residual, q, h[k]);
    }
    if (!is_zero(residual)) return std::nullopt;
    return coeff;
}

inline bool lattice_contains(const IntegerLattice& l, const ZVec& v) {
    std::vector<size_t> pivots;
    for (const auto& row : l.basis) {
        size_t j = 0;
        while (j < row.size() && row[j] == 0) ++j;
        pivots.push_back(j);
    }
    return solve_in_rows(l.basis, pivots, v).has_value();
}

// Repeated solves against a fixed generating set: z with z * rows = v.
class RowSolver {
public:
    RowSolver() = default;
    RowSolver(ZMat rows, size_t cols) : rows_(std::move(rows)), t_(hnf_transform(rows_, cols)) {}

    size_t rank() const { return t_.rank; }
    const HnfTransform& transform() const { return t_; }
    IntegerLattice lattice(size_t ambient) const { return IntegerLattice{ambient, t_.h}; }

    std::optional<ZVec> solve(const ZVec& v) const {
        auto y = solve_in_rows(t_.h, t_.pivots, v);
        if (!y) return std::nullopt;
        ZVec z(rows_.size(), Int(0));
        for (size_t k = 0; k < t_.rank; ++k)
            if ((*y)[k] != 0)
                for (size_t i = 0; i < rows_.size(); ++i) z[i] += (*y)[k] * t_.u[k][i];
        return z;
    }

    bool contains(const ZVec& v) const { return solve_in_rows(t_.h, t_.pivots, v).has_value(); }

    // basis of {x : x * rows = 0}
    ZMat left_kernel() const {
        ZMat k;
        for (size_t i = t_.rank; i < t_.u.size(); ++i) k.push_back(t_.u[i]);
        return k;
    }

private:
    ZMat rows_;
    HnfTransform t_;
};

inline ZMat transpose(const ZMat& m, size_t cols) {
    ZMat t(cols, ZVec(m.size(), Int(0)));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

// One integer solution z of M z = v, if any.  M given as rows (r x c).
inline std::optional<ZVec> integer_solve(const ZMat& m, size_t cols, const ZVec& v) {
    RowSolver s(transpose(m, cols), m.size());
    return s.solve(v);
}

// Basis of the integer kernel {z : M z = 0}, saturated by unimodularity.
inline ZMat integer_kernel(const ZMat& m, size_t cols) {
    RowSolver s(transpose(m, cols), m.size());
    return s.left_kernel();
}

// Lattice spanned by the columns of M inside Z^rows.
inline IntegerLattice column_lattice(const ZMat& m, size_t cols) {
    return hnf(transpose(m, cols), m.size());
}

inline ZVec matvec(const ZMat& m, const ZVec& v) {
    ZVec r(m.size(), Int(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline ZMat matmul(const ZMat& a, const ZMat& b, size_t bcols) {
    ZMat r(a.size(), ZVec(bcols, Int(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < bcols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace arrk
