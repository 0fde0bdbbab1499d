// The lattice B(A) inside the chamber ring, cut out by alternating-sum
// conditions at faces of positive codimension, for simple arrangements.
// In Z[x]/x(2-x) the ideal <x^k> is { m 2^{k-1} x }, so a face of codim k
// imposes: alternating a-sum = 0, alternating b-sum = 0 mod 2^{k-1}.
#pragma once

#include "arrk/kring.hpp"
#include "arrk/lattice.hpp"
#include "arrk/report.hpp"

namespace arrk {

struct FaceCondition {
    SignVector face_sign;
    size_t codim = 0;
    std::vector<std::pair<size_t, int>> epsilon;  // (chamber index, +-1)
};

// epsilon_F(C) = product of chamber signs over the face's zero set;
// neighbors across one hyperplane automatically get opposite signs
inline std::vector<FaceCondition> face_conditions(const std::vector<Chamber>& chambers,
                                                  const std::vector<Face>& faces) {
    std::vector<FaceCondition> out;
    for (const auto& f : faces) {
        if (f.codim == 0) continue;
        FaceCondition fc;
        fc.face_sign = f.sign;
        fc.codim = f.codim;
        for (size_t ci : f.cofaces) {
            int eps = 1;
            for (size_t i = 0; i < f.sign.size(); ++i)
                if (f.sign[i] == 0) eps *= chambers[ci].sign[i];
            fc.epsilon.emplace_back(ci, eps);
        }
        out.push_back(std::move(fc));
    }
    return out;
}

inline std::vector<FaceCondition> face_conditions(const Arrangement& arr) {
    auto chambers = enumerate_chambers(arr);
    return face_conditions(chambers, enumerate_faces(arr, chambers));
}

// nullopt when every condition holds; otherwise the index of the first
// violated condition
inline std::optional<size_t> violated_condition(const std::vector<FaceCondition>& conditions,
                                                const ChamberElem& v) {
    for (size_t k = 0; k < conditions.size(); ++k) {
        const auto& fc = conditions[k];
        Int asum = 0, bsum = 0;
        for (const auto& [ci, eps] : fc.epsilon) {
            asum += eps * v.v[ci][0];
            bsum += eps * v.v[ci][1];
        }
        if (asum != 0) return k;
        if (fc.codim >= 2 && bsum % pow2(unsigned(fc.codim - 1)) != 0) return k;
    }
    return std::nullopt;
}

inline bool membership(const std::vector<FaceCondition>& conditions, const ChamberElem& v) {
    return !violated_condition(conditions, v).has_value();
}

// Solve the equality-and-congruence system over Z: one auxiliary unknown
// per congruence, kernel by HNF, then projection onto the chamber block.
inline IntegerLattice b_lattice(const std::vector<FaceCondition>& conditions,
                                size_t chamber_count) {
    size_t base = 2 * chamber_count;
    size_t aux = 0;
    for (const auto& fc : conditions)
        if (fc.codim >= 2) ++aux;
    ZMat rows;
    size_t next_aux = 0;
    for (const auto& fc : conditions) {
        ZVec arow(base + aux, Int(0));
        for (const auto& [ci, eps] : fc.epsilon) arow[2 * ci] = eps;
        rows.push_back(std::move(arow));
        if (fc.codim >= 2) {
            ZVec brow(base + aux, Int(0));
            for (const auto& [ci, eps] : fc.epsilon) brow[2 * ci + 1] = eps;
            brow[base + next_aux] = -pow2(unsigned(fc.codim - 1));
            rows.push_back(std::move(brow));
            ++next_aux;
        }
    }
    if (rows.empty()) {
        // no conditions: all of Z^{2R}
        ZMat id(base, ZVec(base, Int(0)));
        for (size_t i = 0; i < base; ++i) id[i][i] = 1;
        return hnf(id, base);
    }
    ZMat kernel = integer_kernel(rows, base + aux);
    ZMat projected;
    for (const auto& k : kernel) projected.push_back(ZVec(k.begin(), k.begin() + base));
    return hnf(projected, base);
}

inline IntegerLattice b_lattice(const Arrangement& arr) {
    auto chambers = enumerate_chambers(arr);
    auto faces = enumerate_faces(arr, chambers);
    return b_lattice(face_conditions(chambers, faces), chambers.size());
}

// Everything certify_pb and the B-side sequences need, computed once.
struct BData {
    std::vector<Face> faces;
    std::vector<FaceCondition> conditions;
    IntegerLattice lattice;
    RowSolver solver;  // solves over the lattice basis rows

    std::optional<ZVec> coords(const ChamberElem& v) const { return solver.solve(v.flatten()); }
    ChamberElem basis_elem(size_t j) const { return ChamberElem::unflatten(lattice.basis[j]); }
};

inline BData build_b_data(const Arrangement& arr, const std::vector<Chamber>& chambers) {
    BData b;
    b.faces = enumerate_faces(arr, chambers);
    b.conditions = face_conditions(chambers, b.faces);
    b.lattice = b_lattice(b.conditions, chambers.size());
    b.solver = RowSolver(b.lattice.basis, 2 * chambers.size());
    return b;
}

namespace detail {

inline void pb_checks(const KRing& ring, Report& rep) {
    auto b = build_b_data(ring.arr(), ring.chambers());
    rep.fact("chambers", ring.chamber_count());
    rep.fact("faces", b.faces.size());
    rep.fact("b_rank", b.lattice.rank());
    rep.fact("image_rank", ring.image_rank());

    size_t lands_fail = 0;
    std::string witness;
    for (size_t j = 0; j < ring.basis_size(); ++j) {
        auto bad = violated_condition(b.conditions, ring.basis_images()[j]);
        if (!bad) continue;
        ++lands_fail;
        if (witness.empty()) witness = ring.basis()[j].name();
    }
    rep.check("image_in_b", lands_fail == 0,
              lands_fail ? "violated at " + witness
                         : "all basis images satisfy every face condition");

    rep.check("lattice_equality", lattice_equal(ring.image_lattice(), b.lattice),
              "image of h vs B(A) in canonical form");

    size_t closure_fail = 0;
    for (size_t i = 0; i < b.lattice.rank(); ++i)
        for (size_t j = i; j < b.lattice.rank(); ++j)
            if (!membership(b.conditions, b.basis_elem(i) * b.basis_elem(j))) ++closure_fail;
    rep.check("multiplicative_closure", closure_fail == 0,
              closure_fail ? std::to_string(closure_fail) + " products escape B(A)"
                           : "products of lattice basis vectors stay in B(A)");
}

}  // namespace detail

// Certificate that h lands in B(A) and is onto it, and that B(A) is
// closed under the chamber-ring product.  Retries once on the
// normalized coorientation if anything fails.
inline Report certify_pb(const Arrangement& arr) {
    if (!is_simple(arr))
        throw error(errc::not_simple, "B(A) is defined for simple arrangements only");
    Report rep("check-ba");
    KRing ring(arr);
    detail::pb_checks(ring, rep);
    if (!rep.ok() && !ring.chambers().empty()) {
        Report retry("normalized");
        KRing nring(normalize_delta(arr, ring.chambers()[0]));
        detail::pb_checks(nring, retry);
        rep.merge(retry);
    }
    return rep;
}

}  // namespace arrk
