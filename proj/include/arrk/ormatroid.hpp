// Pointed oriented-matroid data of an arrangement: circuits with their
// sign decompositions, broken circuits, nbc-sets, and the minimal
// infeasible half-space pairs indexing relation families 4 and 5.
#pragma once

#include <algorithm>
#include <set>

#include "arrk/arrangement.hpp"

namespace arrk {

struct Circuit {
    std::vector<size_t> support;  // ascending
    std::vector<size_t> plus;     // canonical: min(support) lies here
    std::vector<size_t> minus;
};

struct SignPair {
    std::vector<size_t> plus;
    std::vector<size_t> minus;
    bool family5_eligible = false;
};

namespace detail {

// lambda with sum lambda_i * (a_i, c_i) = 0; one-dimensional for circuits
inline QMat affine_dependencies(const Arrangement& arr, const std::vector<size_t>& s) {
    QMat m(arr.d + 1, QVec(s.size(), Rat(0)));
    for (size_t col = 0; col < s.size(); ++col) {
        const AffineForm& f = arr.functionals[s[col]];
        for (size_t k = 0; k < arr.d; ++k) m[k][col] = f.a[k];
        m[arr.d][col] = f.c;
    }
    return solve_rational(m, QVec(arr.d + 1, Rat(0))).kernel;
}

inline std::vector<LinCon> half_space_system(const Arrangement& arr,
                                             const std::vector<size_t>& plus,
                                             const std::vector<size_t>& minus) {
    std::vector<LinCon> cons;
    for (size_t i : plus) cons.push_back(sign_constraint(arr.functionals[i], +1));
    for (size_t j : minus) cons.push_back(sign_constraint(arr.functionals[j], -1));
    return cons;
}

}  // namespace detail

inline bool half_spaces_empty(const Arrangement& arr, const std::vector<size_t>& plus,
                              const std::vector<size_t>& minus) {
    return !strict_feasible(detail::half_space_system(arr, plus, minus), arr.d).has_value();
}

// Minimal S with nonempty intersection flat and dependent normals.  The
// split is read off the one-dimensional affine dependency and then
// verified geometrically.
inline std::vector<Circuit> circuits(const Arrangement& arr) {
    std::vector<Circuit> out;
    size_t n = arr.n();
    std::vector<size_t> idx;
    auto contains_found = [&](const std::vector<size_t>& s) {
        for (const auto& c : out)
            if (std::includes(s.begin(), s.end(), c.support.begin(), c.support.end()))
                return true;
        return false;
    };
    auto rec = [&](auto&& self, size_t start, size_t need) -> void {
        if (need == 0) {
            if (contains_found(idx)) return;
            if (!flat_nonempty(arr, idx)) return;
            if (normals_rank(arr, idx) == idx.size()) return;
            auto kernel = detail::affine_dependencies(arr, idx);
            if (kernel.size() != 1)
                throw error(errc::internal_error,
                            "circuit dependency space is not one-dimensional");
            ZVec lambda = primitive_integer_vector(kernel[0]);
            if (lambda[0] < 0)
                for (auto& x : lambda) x = -x;
            Circuit c;
            c.support = idx;
            for (size_t k = 0; k < idx.size(); ++k) {
                if (lambda[k] == 0)
                    throw error(errc::internal_error,
                                "circuit dependency vanishes on a support index");
                (lambda[k] > 0 ? c.plus : c.minus).push_back(idx[k]);
            }
            if (!half_spaces_empty(arr, c.plus, c.minus) ||
                !half_spaces_empty(arr, c.minus, c.plus))
                throw error(errc::internal_error, "circuit split fails the emptiness check");
            out.push_back(std::move(c));
            return;
        }
        for (size_t i = start; i + need <= n; ++i) {
            idx.push_back(i);
            self(self, i + 1, need - 1);
            idx.pop_back();
        }
    };
    for (size_t k = 2; k <= std::min(n, arr.d + 1); ++k) rec(rec, 0, k);
    return out;
}

inline std::vector<std::vector<size_t>> broken_circuits(const std::vector<Circuit>& circs) {
    std::set<std::vector<size_t>> seen;
    for (const auto& c : circs) {
        std::vector<size_t> t(c.support.begin() + 1, c.support.end());
        seen.insert(std::move(t));
    }
    std::vector<std::vector<size_t>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline std::vector<std::vector<size_t>> broken_circuits(const Arrangement& arr) {
    return broken_circuits(circuits(arr));
}

// Index sets with nonempty flat containing no broken circuit; includes
// the empty set.  Ordered by size, then lexicographically.
inline std::vector<std::vector<size_t>> nbc_sets(const Arrangement& arr) {
    auto broken = broken_circuits(arr);
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> idx;
    auto rec = [&](auto&& self, size_t start, size_t need) -> void {
        if (need == 0) {
            for (const auto& b : broken)
                if (std::includes(idx.begin(), idx.end(), b.begin(), b.end())) return;
            if (!flat_nonempty(arr, idx)) return;
            out.push_back(idx);
            return;
        }
        for (size_t i = start; i + need <= arr.n(); ++i) {
            idx.push_back(i);
            self(self, i + 1, need - 1);
            idx.pop_back();
        }
    };
    for (size_t k = 0; k <= arr.n(); ++k) rec(rec, 0, k);
    return out;
}

// Disjoint pairs (S+, S-) with empty open intersection, minimal under
// single-index removal, by increasing support size.  Emptiness is decided
// against the exact chamber list: the open intersection is nonempty iff
// some chamber sign vector is compatible.
inline std::vector<SignPair> minimal_infeasible_pairs(const Arrangement& arr,
                                                      const std::vector<Chamber>& chambers) {
    size_t n = arr.n();
    std::vector<SignPair> out;
    auto compatible_chamber_exists = [&](size_t pmask, size_t mmask) {
        for (const auto& ch : chambers) {
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i) {
                if ((pmask >> i) & 1)
                    ok = ch.sign[i] > 0;
                else if ((mmask >> i) & 1)
                    ok = ch.sign[i] < 0;
            }
            if (ok) return true;
        }
        return false;
    };
    std::vector<std::pair<size_t, size_t>> found_masks;
    std::vector<size_t> supports;
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) supports.push_back(mask);
    std::sort(supports.begin(), supports.end(), [](size_t a, size_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    for (size_t support : supports) {
        // P runs over submasks of support, ascending
        for (size_t p = 0;; p = (p - support) & support) {
            size_t m = support & ~p;
            bool dominated = false;
            for (const auto& [fp, fm] : found_masks)
                if ((fp & ~p) == 0 && (fm & ~m) == 0) { dominated = true; break; }
            if (!dominated && !compatible_chamber_exists(p, m)) {
                SignPair sp;
                for (size_t i = 0; i < n; ++i) {
                    if ((p >> i) & 1) sp.plus.push_back(i);
                    if ((m >> i) & 1) sp.minus.push_back(i);
                }
                // double-entry: confirm emptiness by exact elimination
                if (!half_spaces_empty(arr, sp.plus, sp.minus))
                    throw error(errc::internal_error,
                                "chamber scan and elimination disagree on emptiness");
                std::vector<size_t> s;
                for (size_t i = 0; i < n; ++i)
                    if ((support >> i) & 1) s.push_back(i);
                bool min_in_plus = !sp.plus.empty() && sp.plus[0] == s[0];
                sp.family5_eligible = min_in_plus && flat_nonempty(arr, s) &&
                                      normals_rank(arr, s) < s.size();
                found_masks.emplace_back(p, m);
                out.push_back(std::move(sp));
            }
            if (p == support) break;
        }
    }
    return out;
}

inline std::vector<SignPair> minimal_infeasible_pairs(const Arrangement& arr) {
    return minimal_infeasible_pairs(arr, enumerate_chambers(arr));
}

}  // namespace arrk
