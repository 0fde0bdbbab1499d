// Rational equivariant K/KO dimension counts: the even part of the
// Orlik-Solomon algebra (graded dimensions = nbc-set counts by size)
// plus one copy of Q per chamber.
#pragma once

#include "arrk/ormatroid.hpp"
#include "arrk/report.hpp"

namespace arrk {

struct BettiProfile {
    std::vector<size_t> b;  // b[k] = number of nbc-sets of size k
    size_t chamber_count = 0;

    size_t total() const {
        size_t s = 0;
        for (size_t x : b) s += x;
        return s;
    }
    size_t even_sum() const {
        size_t s = 0;
        for (size_t k = 0; k < b.size(); k += 2) s += b[k];
        return s;
    }
};

inline BettiProfile betti(const Arrangement& arr) {
    BettiProfile p;
    p.chamber_count = enumerate_chambers(arr).size();
    for (const auto& a : nbc_sets(arr)) {
        if (p.b.size() <= a.size()) p.b.resize(a.size() + 1, 0);
        ++p.b[a.size()];
    }
    return p;
}

struct KDimensions {
    size_t dim_k = 0;        // H^{2*}(X;Q)^{sigma} + one Q per chamber
    size_t dim_ko = 0;       // same count through the H^{4*} identification
    size_t dim_line_q = 0;   // rank of P(A)
    size_t gap = 0;          // dim_k - dim_line_q
};

inline KDimensions k_dimensions(const BettiProfile& p) {
    KDimensions d;
    d.dim_k = p.even_sum() + p.chamber_count;
    d.dim_ko = d.dim_k;
    d.dim_line_q = p.chamber_count + 1;
    d.gap = d.dim_k - d.dim_line_q;
    return d;
}

inline KDimensions k_dimensions(const Arrangement& arr) { return k_dimensions(betti(arr)); }

inline Report dims_report(const Arrangement& arr) {
    Report rep("dims");
    auto p = betti(arr);
    auto d = k_dimensions(p);
    for (size_t k = 0; k < p.b.size(); ++k)
        rep.fact("betti." + std::to_string(k), p.b[k]);
    rep.fact("chambers", p.chamber_count);
    rep.fact("os_even_sum", p.even_sum());
    rep.fact("dim_k", d.dim_k);
    rep.fact("dim_ko", d.dim_ko);
    rep.fact("dim_line_q", d.dim_line_q);
    rep.fact("gap", d.gap);
    rep.fact("ko.note",
             "second KO factor counted as one Q per chamber, matching the K case");
    rep.check("betti_sum_equals_chambers", p.total() == p.chamber_count,
              std::to_string(p.total()) + " vs " + std::to_string(p.chamber_count));
    return rep;
}

}  // namespace arrk
