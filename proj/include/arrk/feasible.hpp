// Exact strict-feasibility via Fourier-Motzkin elimination.
//
// A constraint is (a, c, rel) meaning  a.p + c  rel  0, with rel strict.
// Equalities are eliminated by substitution, inequalities by pairing; the
// answer is an exact rational witness or a definite "infeasible".
#pragma once

#include <algorithm>
#include <optional>
#include <set>

#include "arrk/qlinalg.hpp"
#include "arrk/rat.hpp"

namespace arrk {

enum class Rel { gt, lt, eq };

struct LinCon {
    QVec a;
    Rat c;
    Rel rel = Rel::gt;
};

namespace detail {

// normalized form: rel is gt or eq, leading coefficient scaled to +-1
struct NormCon {
    QVec a;
    Rat c;
    bool eq;

    bool operator<(const NormCon& o) const {
        if (eq != o.eq) return eq < o.eq;
        if (a != o.a) return std::lexicographical_compare(
            a.begin(), a.end(), o.a.begin(), o.a.end());
        return c < o.c;
    }
};

inline void scale_canonical(NormCon& n) {
    Rat lead = 0;
    for (const auto& x : n.a)
        if (x != 0) { lead = abs(x); break; }
    if (lead == 0) lead = abs(n.c);
    if (lead == 0 || lead == 1) return;
    for (auto& x : n.a) x /= lead;
    n.c /= lead;
}

inline std::optional<QVec> fm_solve(std::vector<NormCon> cons, size_t nvars) {
    // constant constraints are decided immediately; duplicates dropped
    std::set<NormCon> seen;
    std::vector<NormCon> live;
    for (auto& cc : cons) {
        bool all_zero = true;
        for (const auto& x : cc.a)
            if (x != 0) { all_zero = false; break; }
        if (all_zero) {
            if (cc.eq ? (cc.c != 0) : (cc.c <= 0)) return std::nullopt;
            continue;
        }
        scale_canonical(cc);
        if (seen.insert(cc).second) live.push_back(cc);
    }
    if (nvars == 0) return QVec{};

    size_t j = nvars - 1;

    // substitution step: x_j = -(c + sum_{k<j} a_k x_k) / a_j
    for (size_t e = 0; e < live.size(); ++e) {
        if (!live[e].eq || live[e].a[j] == 0) continue;
        NormCon sub = live[e];
        std::vector<NormCon> next;
        for (size_t i = 0; i < live.size(); ++i) {
            if (i == e) continue;
            NormCon n = live[i];
            if (n.a[j] != 0) {
                Rat f = n.a[j] / sub.a[j];
                for (size_t k = 0; k < nvars; ++k) n.a[k] -= f * sub.a[k];
                n.c -= f * sub.c;
            }
            n.a.resize(j);
            next.push_back(std::move(n));
        }
        auto w = fm_solve(std::move(next), j);
        if (!w) return std::nullopt;
        Rat num = sub.c;
        for (size_t k = 0; k < j; ++k) num += sub.a[k] * (*w)[k];
        w->push_back(-num / sub.a[j]);
        return w;
    }

    // elimination step: pair lower and upper bounds on x_j
    std::vector<NormCon> lower, upper, passthrough;
    for (auto& n : live) {
        if (n.a[j] > 0)
            lower.push_back(std::move(n));
        else if (n.a[j] < 0)
            upper.push_back(std::move(n));
        else {
            n.a.resize(j);
            passthrough.push_back(std::move(n));
        }
    }
    std::vector<NormCon> next = std::move(passthrough);
    for (const auto& lo : lower)
        for (const auto& up : upper) {
            NormCon n;
            n.eq = false;
            n.a.assign(j, Rat(0));
            Rat fl = -up.a[j];  // positive
            Rat fu = lo.a[j];   // positive
            for (size_t k = 0; k < j; ++k) n.a[k] = fl * lo.a[k] + fu * up.a[k];
            n.c = fl * lo.c + fu * up.c;
            next.push_back(std::move(n));
        }
    auto w = fm_solve(std::move(next), j);
    if (!w) return std::nullopt;

    // pick x_j inside the open interval the witness leaves
    auto bound_at = [&](const NormCon& n) -> Rat {
        Rat num = -n.c;
        for (size_t k = 0; k < j; ++k) num -= n.a[k] * (*w)[k];
        return num / n.a[j];
    };
    bool has_lo = false, has_up = false;
    Rat lo_val, up_val;
    for (const auto& n : lower) {
        Rat b = bound_at(n);
        if (!has_lo || b > lo_val) { lo_val = b; has_lo = true; }
    }
    for (const auto& n : upper) {
        Rat b = bound_at(n);
        if (!has_up || b < up_val) { up_val = b; has_up = true; }
    }
    Rat x;
    if (has_lo && has_up)
        x = (lo_val + up_val) / 2;
    else if (has_lo)
        x = lo_val + 1;
    else if (has_up)
        x = up_val - 1;
    else
        x = 0;
    w->push_back(x);
    return w;
}

}  // namespace detail

// Witness point satisfying every constraint exactly, or nullopt when the
// system is infeasible.  Infeasible is a normal outcome, not an error.
inline std::optional<QVec> strict_feasible(const std::vector<LinCon>& cons, size_t dim) {
    std::vector<detail::NormCon> norm;
    norm.reserve(cons.size());
    for (const auto& c : cons) {
        detail::NormCon n;
        n.a.assign(dim, Rat(0));
        for (size_t k = 0; k < c.a.size() && k < dim; ++k) n.a[k] = c.a[k];
        n.c = c.c;
        n.eq = (c.rel == Rel::eq);
        if (c.rel == Rel::lt) {
            for (auto& x : n.a) x = -x;
            n.c = -n.c;
        }
        norm.push_back(std::move(n));
    }
    return detail::fm_solve(std::move(norm), dim);
}

}  // namespace arrk
