// Cooriented affine hyperplane arrangements over Q: chambers, faces,
// reorientation, deletion and restriction.  All witnesses are exact.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "arrk/feasible.hpp"
#include "arrk/qlinalg.hpp"
#include "arrk/rat.hpp"

namespace arrk {

// omega(p) = a.p + c
struct AffineForm {
    QVec a;
    Rat c;

    Rat eval(const QVec& p) const {
        Rat s = c;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
        return s;
    }
};

// sign entries are -1, 0, +1; chambers have no zeros
using SignVector = std::vector<int>;

struct Arrangement {
    size_t d = 0;
    std::vector<AffineForm> functionals;

    size_t n() const { return functionals.size(); }
};

struct Chamber {
    SignVector sign;
    QVec witness;
    size_t index = 0;
};

struct Face {
    SignVector sign;
    size_t codim = 0;
    std::vector<size_t> cofaces;  // chamber indices, ascending
    QVec witness;
};

inline LinCon sign_constraint(const AffineForm& f, int s) {
    return LinCon{f.a, f.c, s > 0 ? Rel::gt : (s < 0 ? Rel::lt : Rel::eq)};
}

inline std::vector<LinCon> sign_system(const Arrangement& arr, const SignVector& sv) {
    std::vector<LinCon> cons;
    cons.reserve(sv.size());
    for (size_t i = 0; i < sv.size(); ++i) cons.push_back(sign_constraint(arr.functionals[i], sv[i]));
    return cons;
}

inline std::optional<QVec> realize_sign(const Arrangement& arr, const SignVector& sv) {
    return strict_feasible(sign_system(arr, sv), arr.d);
}

// Incremental insertion: split the regions of the first i hyperplanes by
// hyperplane i+1, testing both refinements exactly.
inline std::vector<Chamber> enumerate_chambers(const Arrangement& arr) {
    std::vector<Chamber> regions;
    {
        Chamber whole;
        whole.witness.assign(arr.d, Rat(0));
        regions.push_back(std::move(whole));
    }
    for (size_t i = 0; i < arr.n(); ++i) {
        std::vector<Chamber> next;
        for (auto& r : regions) {
            int s = sign_of(arr.functionals[i].eval(r.witness));
            for (int cand : {+1, -1}) {
                SignVector sv = r.sign;
                sv.push_back(cand);
                if (cand == s) {
                    // witness already on this side
                    Chamber c{std::move(sv), r.witness, 0};
                    next.push_back(std::move(c));
                    continue;
                }
                auto w = realize_sign(arr, sv);
                if (w) next.push_back(Chamber{std::move(sv), std::move(*w), 0});
            }
        }
        regions = std::move(next);
    }
    std::sort(regions.begin(), regions.end(),
              [](const Chamber& a, const Chamber& b) { return a.sign < b.sign; });
    for (size_t i = 0; i < regions.size(); ++i) regions[i].index = i;
    return regions;
}

// nonempty intersection of the hyperplanes indexed by S
inline bool flat_nonempty(const Arrangement& arr, const std::vector<size_t>& s) {
    std::vector<LinCon> cons;
    for (size_t i : s) cons.push_back(sign_constraint(arr.functionals[i], 0));
    return strict_feasible(cons, arr.d).has_value();
}

inline size_t normals_rank(const Arrangement& arr, const std::vector<size_t>& s) {
    QMat m;
    for (size_t i : s) m.push_back(arr.functionals[i].a);
    return rational_rank(m);
}

// codim(cap H_i) == |S| for every S with nonempty intersection; it is
// enough to look at |S| <= min(n, d+1).
inline bool is_simple(const Arrangement& arr) {
    size_t n = arr.n();
    size_t cap = std::min(n, arr.d + 1);
    std::vector<size_t> idx;
    auto rec = [&](auto&& self, size_t start, size_t need) -> bool {
        if (need == 0) {
            if (!flat_nonempty(arr, idx)) return true;
            return normals_rank(arr, idx) == idx.size();
        }
        for (size_t i = start; i + need <= n; ++i) {
            idx.push_back(i);
            bool ok = self(self, i + 1, need - 1);
            idx.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (size_t k = 2; k <= cap; ++k) {
        idx.clear();
        if (!rec(rec, 0, k)) return false;
    }
    return true;
}

// All subsets with nonempty intersection flat, by size then lex.
inline std::vector<std::vector<size_t>> nonempty_flat_subsets(const Arrangement& arr,
                                                              size_t max_size) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> idx;
    auto rec = [&](auto&& self, size_t start, size_t need) -> void {
        if (need == 0) {
            if (flat_nonempty(arr, idx)) out.push_back(idx);
            return;
        }
        for (size_t i = start; i < arr.n(); ++i) {
            idx.push_back(i);
            self(self, i + 1, need - 1);
            idx.pop_back();
        }
    };
    for (size_t k = 0; k <= std::min(arr.n(), max_size); ++k) rec(rec, 0, k);
    return out;
}

// Faces of the polytopal complex |A|, simple arrangements only.  Chambers
// appear as the codim-0 faces.  A candidate sign vector comes from zeroing
// an independent flat subset inside a chamber's sign vector; realizable
// candidates are kept with an exact relative-interior witness.
inline std::vector<Face> enumerate_faces(const Arrangement& arr,
                                         const std::vector<Chamber>& chambers) {
    if (!is_simple(arr))
        throw error(errc::not_simple, "enumerate_faces: arrangement is not simple");

    auto flats = nonempty_flat_subsets(arr, arr.d);
    std::map<SignVector, Face> found;
    for (const auto& ch : chambers) {
        for (const auto& z : flats) {
            SignVector sv = ch.sign;
            for (size_t i : z) sv[i] = 0;
            if (found.count(sv)) continue;
            if (z.empty()) {
                Face f{sv, 0, {}, ch.witness};
                found.emplace(std::move(sv), std::move(f));
                continue;
            }
            auto w = realize_sign(arr, sv);
            if (!w) continue;
            Face f;
            f.codim = normals_rank(arr, z);
            f.witness = std::move(*w);
            f.sign = sv;
            found.emplace(std::move(sv), std::move(f));
        }
    }
    std::vector<Face> faces;
    faces.reserve(found.size());
    for (auto& [sv, f] : found) faces.push_back(std::move(f));
    // cofaces: chambers whose sign agrees on every nonzero coordinate
    for (auto& f : faces) {
        for (const auto& ch : chambers) {
            bool ok = true;
            for (size_t i = 0; i < f.sign.size(); ++i)
                if (f.sign[i] != 0 && f.sign[i] != ch.sign[i]) { ok = false; break; }
            if (ok) f.cofaces.push_back(ch.index);
        }
    }
    return faces;
}

inline std::vector<Face> enumerate_faces(const Arrangement& arr) {
    return enumerate_faces(arr, enumerate_chambers(arr));
}

inline Arrangement reorient(const Arrangement& arr, size_t i) {
    Arrangement out = arr;
    for (auto& x : out.functionals[i].a) x = -x;
    out.functionals[i].c = -out.functionals[i].c;
    return out;
}

// Reorient so that `base` becomes the all-minus chamber, making
// Delta = cap H_i^- nonempty.
inline Arrangement normalize_delta(const Arrangement& arr, const Chamber& base) {
    Arrangement out = arr;
    for (size_t i = 0; i < arr.n(); ++i)
        if (base.sign[i] > 0) {
            for (auto& x : out.functionals[i].a) x = -x;
            out.functionals[i].c = -out.functionals[i].c;
        }
    return out;
}

inline Arrangement delete_last(const Arrangement& arr) {
    Arrangement out = arr;
    out.functionals.pop_back();
    return out;
}

// Exact affine parametrization p = origin + basis * t of the last
// hyperplane; deterministic pivot choice.
struct HyperplaneChart {
    QVec origin;   // point on H_n
    QMat basis;    // d x (d-1), columns span ker(a_n)
};

inline HyperplaneChart chart_of_last(const Arrangement& arr) {
    const AffineForm& f = arr.functionals.back();
    size_t d = arr.d;
    size_t piv = 0;
    while (piv < d && f.a[piv] == 0) ++piv;
    HyperplaneChart ch;
    ch.origin.assign(d, Rat(0));
    ch.origin[piv] = -f.c / f.a[piv];
    ch.basis.assign(d, QVec(d - 1, Rat(0)));
    size_t col = 0;
    for (size_t k = 0; k < d; ++k) {
        if (k == piv) continue;
        ch.basis[k][col] = 1;
        ch.basis[piv][col] = -f.a[k] / f.a[piv];
        ++col;
    }
    return ch;
}

inline QVec chart_point(const HyperplaneChart& ch, const QVec& t) {
    QVec p = ch.origin;
    for (size_t k = 0; k < p.size(); ++k)
        for (size_t j = 0; j < t.size(); ++j) p[k] += ch.basis[k][j] * t[j];
    return p;
}

// Restriction A'' to the last hyperplane.  Surviving original indices map
// to (new index, orientation); orientation is -1 when the surviving form
// is a negative multiple of its class representative.
struct Restriction {
    Arrangement arr;                       // lives in dimension d-1
    std::map<size_t, std::pair<size_t, int>> index_map;
    HyperplaneChart chart;
};

inline Restriction restrict_last(const Arrangement& arr, const HyperplaneChart& chart) {
    Restriction res;
    res.chart = chart;
    res.arr.d = arr.d - 1;
    for (size_t i = 0; i + 1 < arr.n(); ++i) {
        const AffineForm& f = arr.functionals[i];
        AffineForm pb;
        pb.c = f.eval(chart.origin);
        pb.a.assign(arr.d - 1, Rat(0));
        for (size_t j = 0; j < pb.a.size(); ++j)
            for (size_t k = 0; k < arr.d; ++k) pb.a[j] += f.a[k] * chart.basis[k][j];
        if (is_zero(pb.a)) continue;  // misses H_n (or equals it); not a hyperplane of A''
        // collapse forms defining the same hyperplane of H_n
        bool matched = false;
        for (size_t m = 0; m < res.arr.functionals.size(); ++m) {
            const AffineForm& rep = res.arr.functionals[m];
            size_t piv = 0;
            while (piv < rep.a.size() && rep.a[piv] == 0) ++piv;
            if (pb.a[piv] == 0) continue;
            Rat lambda = pb.a[piv] / rep.a[piv];
            bool prop = (pb.c == lambda * rep.c);
            for (size_t j = 0; prop && j < rep.a.size(); ++j)
                if (pb.a[j] != lambda * rep.a[j]) prop = false;
            if (prop) {
                res.index_map[i] = {m, sign_of(lambda)};
                matched = true;
                break;
            }
        }
        if (!matched) {
            res.index_map[i] = {res.arr.functionals.size(), +1};
            res.arr.functionals.push_back(std::move(pb));
        }
    }
    return res;
}

inline Restriction restrict_last(const Arrangement& arr) {
    return restrict_last(arr, chart_of_last(arr));
}

// Repeated (possibly reoriented) hyperplanes are legal input but outside
// what the underlying theory discusses; surface them as warnings.
inline std::vector<std::string> validate(const Arrangement& arr) {
    std::vector<std::string> warnings;
    for (size_t i = 0; i < arr.n(); ++i)
        for (size_t j = i + 1; j < arr.n(); ++j) {
            const AffineForm &f = arr.functionals[i], &g = arr.functionals[j];
            size_t piv = 0;
            while (piv < arr.d && f.a[piv] == 0) ++piv;
            if (piv == arr.d || g.a[piv] == 0) continue;
            Rat lambda = g.a[piv] / f.a[piv];
            bool prop = (g.c == lambda * f.c);
            for (size_t k = 0; prop && k < arr.d; ++k)
                if (g.a[k] != lambda * f.a[k]) prop = false;
            if (prop)
                warnings.push_back("hyperplanes " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " coincide" +
                                   (lambda < 0 ? " with opposite coorientation" : ""));
        }
    return warnings;
}

}  // namespace arrk
