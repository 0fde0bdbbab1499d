// Deletion-restriction four-term sequences on P and on B, certified
// exact by integer kernel/image lattice comparisons.
#pragma once

#include "arrk/kring.hpp"
#include "arrk/subring.hpp"

namespace arrk {

// 0 -> P(A') --alpha--> P(A) --beta--> P(A'') --gamma--> Z -> 0
// on canonical nbc bases
struct PSequence {
    KRing ring;       // P(A)
    KRing ring_del;   // P(A')
    KRing ring_res;   // P(A'')
    Restriction restriction;
    ZMat alpha;   // dim P(A)  x dim P(A')
    ZMat beta;    // dim P(A'') x dim P(A)
    ZVec gamma;   // 1 x dim P(A'')
};

namespace detail {

inline std::map<std::pair<bool, std::vector<size_t>>, size_t> basis_index(const KRing& ring) {
    std::map<std::pair<bool, std::vector<size_t>>, size_t> idx;
    for (size_t j = 0; j < ring.basis_size(); ++j)
        idx[{ring.basis()[j].is_x, ring.basis()[j].eset}] = j;
    return idx;
}

}  // namespace detail

inline PSequence build_p_sequence(const Arrangement& arr) {
    if (arr.n() == 0)
        throw error(errc::precondition_failed, "deletion-restriction needs n >= 1");
    PSequence seq{KRing(arr), KRing(delete_last(arr)), KRing(restrict_last(arr).arr),
                  restrict_last(arr), {}, {}, {}};

    size_t last = arr.n() - 1;
    auto idx_a = detail::basis_index(seq.ring);
    auto idx_res = detail::basis_index(seq.ring_res);

    // alpha: the ring map e_i -> e_i, x -> x is a coordinate inclusion,
    // since every A'-nbc-set is an A-nbc-set
    seq.alpha.assign(seq.ring.basis_size(), ZVec(seq.ring_del.basis_size(), Int(0)));
    for (size_t j = 0; j < seq.ring_del.basis_size(); ++j) {
        const auto& m = seq.ring_del.basis()[j];
        auto it = idx_a.find({m.is_x, m.eset});
        if (it == idx_a.end())
            throw error(errc::internal_error,
                        "deleted-arrangement nbc-set is not an nbc-set of the full arrangement");
        seq.alpha[it->second][j] = 1;
    }

    // beta: x -> 0; e_A -> e_{A minus n} translated through the
    // restriction index map when n lies in A, else 0
    seq.beta.assign(seq.ring_res.basis_size(), ZVec(seq.ring.basis_size(), Int(0)));
    for (size_t j = 0; j < seq.ring.basis_size(); ++j) {
        const auto& m = seq.ring.basis()[j];
        if (m.is_x || m.eset.empty()) continue;
        if (std::find(m.eset.begin(), m.eset.end(), last) == m.eset.end()) continue;
        std::vector<size_t> translated;
        bool ok = true;
        for (size_t i : m.eset) {
            if (i == last) continue;
            auto it = seq.restriction.index_map.find(i);
            if (it == seq.restriction.index_map.end() || it->second.second != +1) {
                ok = false;
                break;
            }
            translated.push_back(it->second.first);
        }
        if (!ok)
            throw error(errc::restriction_mismatch,
                        "nbc-set " + index_set_string(m.eset) +
                            " does not translate through the restriction index map");
        std::sort(translated.begin(), translated.end());
        auto it = idx_res.find({false, translated});
        if (it == idx_res.end())
            throw error(errc::restriction_mismatch,
                        "translated set " + index_set_string(translated) +
                            " is not an nbc-set of the restriction");
        seq.beta[it->second][j] = 1;
    }

    // gamma: the x-coefficient
    seq.gamma.assign(seq.ring_res.basis_size(), Int(0));
    seq.gamma[1] = 1;
    return seq;
}

inline Report certify_exactness_p(const Arrangement& arr) {
    Report rep("check-delres-p");
    auto seq = build_p_sequence(arr);
    size_t dim = seq.ring.basis_size(), dim_del = seq.ring_del.basis_size(),
           dim_res = seq.ring_res.basis_size();
    rep.fact("rank_p", dim);
    rep.fact("rank_p_deleted", dim_del);
    rep.fact("rank_p_restricted", dim_res);

    rep.check("alpha_injective", integer_kernel(seq.alpha, dim_del).empty());

    ZMat comp = matmul(seq.beta, seq.alpha, dim_del);
    bool zero = true;
    for (const auto& row : comp) zero = zero && is_zero(row);
    rep.check("beta_alpha_zero", zero);

    auto ker_beta = hnf(integer_kernel(seq.beta, dim), dim);
    auto im_alpha = column_lattice(seq.alpha, dim_del);
    rep.check("ker_beta_equals_im_alpha", lattice_equal(ker_beta, im_alpha),
              "ranks " + std::to_string(ker_beta.rank()) + " vs " +
                  std::to_string(im_alpha.rank()));

    auto ker_gamma = hnf(integer_kernel(ZMat{seq.gamma}, dim_res), dim_res);
    auto im_beta = column_lattice(seq.beta, dim);
    rep.check("ker_gamma_equals_im_beta", lattice_equal(ker_gamma, im_beta),
              "ranks " + std::to_string(ker_gamma.rank()) + " vs " +
                  std::to_string(im_beta.rank()));

    Int g = 0;
    for (const auto& x : seq.gamma) g = gcd_int(g, x);
    rep.check("gamma_surjective", g == 1);

    // rank additivity forced by exactness of a four-term sequence into Z
    rep.check("rank_additivity", dim_del + dim_res == dim + 1);
    return rep;
}

// 0 -> B(A') --a--> B(A) --b--> B(A'') --c--> Z -> 0 on lattice bases.
struct BSequence {
    Arrangement arr;
    std::vector<Chamber> chambers, chambers_del, chambers_res;
    BData b, b_del, b_res;
    Restriction restriction;
    size_t delta_res_chamber = 0;  // index of the all-minus chamber of A''
    ZMat a;   // rank B(A)  x rank B(A')
    ZMat bmap;  // rank B(A'') x rank B(A)
    ZVec c;   // 1 x rank B(A'')
};

namespace detail {

inline std::map<SignVector, size_t> sign_lookup(const std::vector<Chamber>& chambers) {
    std::map<SignVector, size_t> m;
    for (const auto& ch : chambers) m[ch.sign] = ch.index;
    return m;
}

}  // namespace detail

// Reorient so that the first chamber (in canonical order) with a
// realizable facet on H_n becomes the all-minus chamber; the B-sequence
// preconditions then hold.  nullopt when no chamber touches H_n in
// codimension one.
inline std::optional<Arrangement> normalize_adjacent_to_last(const Arrangement& arr) {
    if (arr.n() == 0) return std::nullopt;
    size_t last = arr.n() - 1;
    for (const auto& ch : enumerate_chambers(arr)) {
        std::vector<LinCon> cons;
        for (size_t i = 0; i < arr.n(); ++i)
            cons.push_back(sign_constraint(arr.functionals[i], i == last ? 0 : ch.sign[i]));
        if (strict_feasible(cons, arr.d)) return normalize_delta(arr, ch);
    }
    return std::nullopt;
}

// Preconditions: simple, and the last hyperplane meets the open region
// cut out by the negative half-spaces of the others, i.e. the face
// {omega_n = 0, omega_i < 0 for i < n} is realizable.  That face is the
// all-minus chamber of A'' (the Delta component of the restriction), and
// it also forces Delta(A) to be nonempty.
inline BSequence build_b_sequence(const Arrangement& arr) {
    if (arr.n() == 0)
        throw error(errc::precondition_failed, "deletion-restriction needs n >= 1");
    if (!is_simple(arr))
        throw error(errc::not_simple, "the B sequence is defined for simple arrangements");
    size_t last = arr.n() - 1;
    {
        std::vector<LinCon> cons;
        cons.push_back(sign_constraint(arr.functionals[last], 0));
        for (size_t i = 0; i < last; ++i) cons.push_back(sign_constraint(arr.functionals[i], -1));
        if (!strict_feasible(cons, arr.d))
            throw error(errc::precondition_failed,
                        "H_n does not meet the open all-minus region of the other hyperplanes");
    }

    BSequence seq;
    seq.arr = arr;
    seq.restriction = restrict_last(arr);
    seq.chambers = enumerate_chambers(arr);
    seq.chambers_del = enumerate_chambers(delete_last(arr));
    seq.chambers_res = enumerate_chambers(seq.restriction.arr);
    seq.b = build_b_data(arr, seq.chambers);
    seq.b_del = build_b_data(delete_last(arr), seq.chambers_del);
    seq.b_res = build_b_data(seq.restriction.arr, seq.chambers_res);

    auto lookup = detail::sign_lookup(seq.chambers);
    auto lookup_del = detail::sign_lookup(seq.chambers_del);
    auto lookup_res = detail::sign_lookup(seq.chambers_res);

    {
        SignVector all_minus(seq.restriction.arr.n(), -1);
        auto it = lookup_res.find(all_minus);
        if (it == lookup_res.end())
            throw error(errc::precondition_failed,
                        "Delta cap H_n is not a chamber of the restriction");
        seq.delta_res_chamber = it->second;
    }

    // a: restriction of chamber coordinates along the merge map
    // (an A-chamber lies in the A'-chamber given by its sign prefix)
    {
        ZMat rows;
        for (size_t j = 0; j < seq.b_del.lattice.rank(); ++j) {
            ChamberElem mu = seq.b_del.basis_elem(j);
            ChamberElem out(seq.chambers.size());
            for (const auto& ch : seq.chambers) {
                SignVector prefix(ch.sign.begin(), ch.sign.end() - 1);
                out.v[ch.index] = mu.v[lookup_del.at(prefix)];
            }
            rows.push_back(out.flatten());
        }
        seq.a.assign(seq.b.lattice.rank(), ZVec(seq.b_del.lattice.rank(), Int(0)));
        for (size_t j = 0; j < rows.size(); ++j) {
            auto z = seq.b.solver.solve(rows[j]);
            if (!z)
                throw error(errc::internal_error, "a(B(A')) does not land in B(A)");
            for (size_t i = 0; i < z->size(); ++i) seq.a[i][j] = (*z)[i];
        }
    }

    // lift an A''-chamber to the two neighboring A-chambers across H_n
    auto lift = [&](size_t res_index, int side) {
        SignVector sv(arr.n(), 0);
        sv[last] = side;
        const SignVector& rs = seq.chambers_res[res_index].sign;
        for (size_t i = 0; i < last; ++i) {
            auto it = seq.restriction.index_map.find(i);
            if (it != seq.restriction.index_map.end())
                sv[i] = rs[it->second.first] * it->second.second;
            else
                sv[i] = sign_of(arr.functionals[i].eval(seq.restriction.chart.origin));
        }
        auto it = lookup.find(sv);
        if (it == lookup.end())
            throw error(errc::internal_error, "missing neighbor chamber across H_n");
        return it->second;
    };

    // b: per-chamber divided difference (mu_C - mu_D)/x, pinned to the
    // integer value at the Delta component and extended by parity
    {
        ZMat rows;
        for (size_t j = 0; j < seq.b.lattice.rank(); ++j) {
            ChamberElem mu = seq.b.basis_elem(j);
            std::vector<Int> diff(seq.chambers_res.size());
            for (size_t m = 0; m < seq.chambers_res.size(); ++m) {
                size_t cp = lift(m, +1), cm = lift(m, -1);
                if (mu.v[cp][0] != mu.v[cm][0])
                    throw error(errc::internal_error,
                                "difference across H_n is not a multiple of x");
                diff[m] = mu.v[cp][1] - mu.v[cm][1];
            }
            const Int& k0 = diff[seq.delta_res_chamber];
            ChamberElem out(seq.chambers_res.size());
            for (size_t m = 0; m < seq.chambers_res.size(); ++m) {
                Int delta = diff[m] - k0;
                if (delta % 2 != 0)
                    throw error(errc::parity_failure,
                                "divided difference violates the mod-2 pinning at chamber " +
                                    std::to_string(m));
                out.v[m] = {k0, delta / 2};
            }
            rows.push_back(out.flatten());
        }
        seq.bmap.assign(seq.b_res.lattice.rank(), ZVec(seq.b.lattice.rank(), Int(0)));
        for (size_t j = 0; j < rows.size(); ++j) {
            auto z = seq.b_res.solver.solve(rows[j]);
            if (!z)
                throw error(errc::internal_error, "b(B(A)) does not land in B(A'')");
            for (size_t i = 0; i < z->size(); ++i) seq.bmap[i][j] = (*z)[i];
        }
    }

    // c: the x-coefficient at the Delta component
    seq.c.assign(seq.b_res.lattice.rank(), Int(0));
    for (size_t j = 0; j < seq.b_res.lattice.rank(); ++j)
        seq.c[j] = seq.b_res.lattice.basis[j][2 * seq.delta_res_chamber + 1];

    return seq;
}

inline Report certify_exactness_b(const Arrangement& arr) {
    Report rep("check-delres-b");
    auto seq = build_b_sequence(arr);
    size_t rank = seq.b.lattice.rank(), rank_del = seq.b_del.lattice.rank(),
           rank_res = seq.b_res.lattice.rank();
    rep.fact("rank_b", rank);
    rep.fact("rank_b_deleted", rank_del);
    rep.fact("rank_b_restricted", rank_res);

    rep.check("a_injective", integer_kernel(seq.a, rank_del).empty());

    ZMat comp = matmul(seq.bmap, seq.a, rank_del);
    bool zero = true;
    for (const auto& row : comp) zero = zero && is_zero(row);
    rep.check("b_a_zero", zero);

    auto ker_b = hnf(integer_kernel(seq.bmap, rank), rank);
    auto im_a = column_lattice(seq.a, rank_del);
    rep.check("ker_b_equals_im_a", lattice_equal(ker_b, im_a),
              "ranks " + std::to_string(ker_b.rank()) + " vs " + std::to_string(im_a.rank()));

    auto ker_c = hnf(integer_kernel(ZMat{seq.c}, rank_res), rank_res);
    auto im_b = column_lattice(seq.bmap, rank);
    rep.check("ker_c_equals_im_b", lattice_equal(ker_c, im_b),
              "ranks " + std::to_string(ker_c.rank()) + " vs " + std::to_string(im_b.rank()));

    Int g = 0;
    for (const auto& x : seq.c) g = gcd_int(g, x);
    rep.check("c_surjective", g == 1);

    rep.check("rank_additivity", rank_del + rank_res == rank + 1);
    return rep;
}

}  // namespace arrk
