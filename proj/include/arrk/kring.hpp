// The ring P(A): ideal generators, nbc additive basis, the chamber-ring
// embedding h, exact ring arithmetic through that embedding, and
// per-instance certificates for its structure theorems.
//
// Ring arithmetic deliberately runs inside the chamber ring (one copy of
// Z[x]/x(2-x) per chamber): multiplication there is componentwise, and
// re-expression over the nbc basis is an integer solve against the
// basis-image lattice.
#pragma once

#include <array>

#include "arrk/arrangement.hpp"
#include "arrk/freepoly.hpp"
#include "arrk/lattice.hpp"
#include "arrk/ormatroid.hpp"
#include "arrk/report.hpp"

namespace arrk {

// an integer pair (a, b) per chamber, meaning a + b*x in Z[x]/x(2-x)
struct ChamberElem {
    std::vector<std::array<Int, 2>> v;

    explicit ChamberElem(size_t chambers = 0) : v(chambers, {Int(0), Int(0)}) {}

    size_t size() const { return v.size(); }

    bool is_zero() const {
        for (const auto& p : v)
            if (p[0] != 0 || p[1] != 0) return false;
        return true;
    }

    ChamberElem operator+(const ChamberElem& o) const {
        ChamberElem r(v.size());
        for (size_t c = 0; c < v.size(); ++c)
            r.v[c] = {v[c][0] + o.v[c][0], v[c][1] + o.v[c][1]};
        return r;
    }
    ChamberElem operator-(const ChamberElem& o) const {
        ChamberElem r(v.size());
        for (size_t c = 0; c < v.size(); ++c)
            r.v[c] = {v[c][0] - o.v[c][0], v[c][1] - o.v[c][1]};
        return r;
    }
    // (a+bx)(c+dx) = ac + (ad+bc+2bd)x, forced by x^2 = 2x
    ChamberElem operator*(const ChamberElem& o) const {
        ChamberElem r(v.size());
        for (size_t c = 0; c < v.size(); ++c) {
            const Int &a = v[c][0], &b = v[c][1], &cc = o.v[c][0], &d = o.v[c][1];
            r.v[c] = {a * cc, a * d + b * cc + 2 * b * d};
        }
        return r;
    }
    ChamberElem scaled(const Int& k) const {
        ChamberElem r(v.size());
        for (size_t c = 0; c < v.size(); ++c) r.v[c] = {v[c][0] * k, v[c][1] * k};
        return r;
    }

    bool operator==(const ChamberElem& o) const { return v == o.v; }

    ZVec flatten() const {
        ZVec f(2 * v.size());
        for (size_t c = 0; c < v.size(); ++c) {
            f[2 * c] = v[c][0];
            f[2 * c + 1] = v[c][1];
        }
        return f;
    }
    static ChamberElem unflatten(const ZVec& f) {
        ChamberElem e(f.size() / 2);
        for (size_t c = 0; c < e.v.size(); ++c) e.v[c] = {f[2 * c], f[2 * c + 1]};
        return e;
    }

    std::string to_string() const {
        std::string s;
        for (size_t c = 0; c < v.size(); ++c) {
            if (c) s += " ";
            s += "(" + v[c][0].get_str() + "," + v[c][1].get_str() + ")";
        }
        return s;
    }
};

// position 0 is the monomial 1 (= e of the empty set), position 1 is x,
// positions 2.. are e_A over nonempty nbc-sets in (size, lex) order
struct BasisMonomial {
    bool is_x = false;
    std::vector<size_t> eset;  // meaningful when !is_x

    std::string name() const {
        if (is_x) return "x";
        if (eset.empty()) return "1";
        std::string s = "e{";
        for (size_t k = 0; k < eset.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(eset[k] + 1);
        }
        return s + "}";
    }
};

using RingElement = ZVec;  // integer coordinates over the nbc basis

inline std::string ring_element_string(const std::vector<BasisMonomial>& basis,
                                       const RingElement& u) {
    std::string s;
    for (size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0) continue;
        if (!s.empty()) s += (u[j] > 0) ? " + " : " - ";
        else if (u[j] < 0) s += "-";
        Int a = abs(u[j]);
        std::string mono = basis[j].name();
        if (a != 1 || mono == "1") {
            s += a.get_str();
            if (mono != "1") s += "*";
        }
        if (mono != "1") s += mono;
    }
    return s.empty() ? "0" : s;
}

class KRing {
public:
    explicit KRing(Arrangement arr)
        : arr_(std::move(arr)), chambers_(enumerate_chambers(arr_)), nbc_(nbc_sets(arr_)) {
        basis_.push_back(BasisMonomial{false, {}});
        basis_.push_back(BasisMonomial{true, {}});
        for (const auto& a : nbc_)
            if (!a.empty()) basis_.push_back(BasisMonomial{false, a});
        images_.reserve(basis_.size());
        ZMat rows;
        for (const auto& m : basis_) {
            images_.push_back(h_monomial(m));
            rows.push_back(images_.back().flatten());
        }
        solver_ = RowSolver(std::move(rows), 2 * chambers_.size());
    }

    const Arrangement& arr() const { return arr_; }
    const std::vector<Chamber>& chambers() const { return chambers_; }
    const std::vector<std::vector<size_t>>& nbc() const { return nbc_; }
    const std::vector<BasisMonomial>& basis() const { return basis_; }
    const std::vector<ChamberElem>& basis_images() const { return images_; }
    size_t chamber_count() const { return chambers_.size(); }
    size_t basis_size() const { return basis_.size(); }  // R+1 once freeness holds
    size_t image_rank() const { return solver_.rank(); }
    IntegerLattice image_lattice() const { return solver_.lattice(2 * chambers_.size()); }

    // h on a basis monomial: 1 -> (1,0) everywhere, x -> (0,1) everywhere,
    // e_A -> (0, 2^{|A|-1}) exactly on the chambers positive on all of A
    ChamberElem h_monomial(const BasisMonomial& m) const {
        ChamberElem e(chambers_.size());
        if (m.is_x) {
            for (auto& p : e.v) p[1] = 1;
            return e;
        }
        if (m.eset.empty()) {
            for (auto& p : e.v) p[0] = 1;
            return e;
        }
        Int coef = pow2(static_cast<unsigned>(m.eset.size() - 1));
        for (size_t c = 0; c < chambers_.size(); ++c) {
            bool all_plus = true;
            for (size_t i : m.eset)
                if (chambers_[c].sign[i] <= 0) { all_plus = false; break; }
            if (all_plus) e.v[c][1] = coef;
        }
        return e;
    }

    // substitution e_i -> h(e_i), x -> h(x); x^k collapses to 2^{k-1} x
    ChamberElem eval_poly(const FreePoly& p) const {
        ChamberElem e(chambers_.size());
        for (const auto& [mono, coef] : p.terms()) {
            uint64_t xdeg = mono[arr_.n()];
            uint64_t edeg = 0;
            for (size_t i = 0; i < arr_.n(); ++i) edeg += mono[i];
            for (size_t c = 0; c < chambers_.size(); ++c) {
                bool supported = true;
                for (size_t i = 0; i < arr_.n() && supported; ++i)
                    if (mono[i] > 0 && chambers_[c].sign[i] <= 0) supported = false;
                if (!supported) continue;
                uint64_t deg = xdeg + edeg;
                if (deg == 0)
                    e.v[c][0] += coef;
                else
                    e.v[c][1] += coef * pow2(static_cast<unsigned>(deg - 1));
            }
        }
        return e;
    }

    ChamberElem h_of(const RingElement& u) const {
        ChamberElem e(chambers_.size());
        for (size_t j = 0; j < u.size(); ++j) {
            if (u[j] == 0) continue;
            for (size_t c = 0; c < e.size(); ++c) {
                e.v[c][0] += u[j] * images_[j].v[c][0];
                e.v[c][1] += u[j] * images_[j].v[c][1];
            }
        }
        return e;
    }

    std::optional<RingElement> try_to_basis(const ChamberElem& v) const {
        return solver_.solve(v.flatten());
    }

    RingElement to_basis(const ChamberElem& v) const {
        auto z = try_to_basis(v);
        if (!z)
            throw error(errc::not_in_image,
                        "chamber-ring element has no integer expression over the nbc basis");
        return *z;
    }

    RingElement multiply(const RingElement& u, const RingElement& w) const {
        return to_basis(h_of(u) * h_of(w));
    }

    RingElement unit() const {
        RingElement u(basis_.size(), Int(0));
        u[0] = 1;
        return u;
    }

    std::vector<std::vector<RingElement>> structure_constants() const {
        size_t m = basis_.size();
        std::vector<std::vector<RingElement>> table(m, std::vector<RingElement>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i; j < m; ++j) {
                table[i][j] = to_basis(images_[i] * images_[j]);
                if (j != i) table[j][i] = table[i][j];
            }
        return table;
    }

private:
    Arrangement arr_;
    std::vector<Chamber> chambers_;
    std::vector<std::vector<size_t>> nbc_;
    std::vector<BasisMonomial> basis_;
    std::vector<ChamberElem> images_;
    RowSolver solver_;
};

struct IdealGenerator {
    int family = 0;                    // 1..5
    std::vector<size_t> plus, minus;   // family 2/3 use plus = {i}
    FreePoly poly;
};

inline std::vector<IdealGenerator> ideal_generators(const Arrangement& arr,
                                                    const std::vector<SignPair>& pairs) {
    size_t n = arr.n();
    auto e = [&](size_t i) { return FreePoly::variable_e(n, i); };
    auto x = FreePoly::variable_x(n);
    auto two = FreePoly::constant(n, 2);

    std::vector<IdealGenerator> gens;
    gens.push_back({1, {}, {}, x * (two - x)});
    for (size_t i = 0; i < n; ++i) gens.push_back({2, {i}, {}, e(i) * (two - e(i))});
    for (size_t i = 0; i < n; ++i) gens.push_back({3, {i}, {}, e(i) * (e(i) - x)});
    for (const auto& p : pairs) {
        FreePoly f = FreePoly::constant(n, 1);
        for (size_t i : p.plus) f = f * e(i);
        for (size_t j : p.minus) f = f * (e(j) - x);
        gens.push_back({4, p.plus, p.minus, std::move(f)});
    }
    for (const auto& p : pairs) {
        if (!p.family5_eligible) continue;
        FreePoly lhs = FreePoly::constant(n, 1), rhs = FreePoly::constant(n, 1);
        for (size_t i : p.plus) lhs = lhs * e(i);
        for (size_t j : p.minus) lhs = lhs * (e(j) - x);
        for (size_t i : p.plus) rhs = rhs * (e(i) - x);
        for (size_t j : p.minus) rhs = rhs * e(j);
        gens.push_back({5, p.plus, p.minus, (lhs - rhs).divide_by_x()});
    }
    return gens;
}

inline std::vector<IdealGenerator> ideal_generators(const Arrangement& arr) {
    return ideal_generators(arr, minimal_infeasible_pairs(arr));
}

inline std::string index_set_string(const std::vector<size_t>& s) {
    std::string out = "{";
    for (size_t k = 0; k < s.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(s[k] + 1);
    }
    return out + "}";
}

namespace detail {

inline void theorem_pl_checks(const KRing& ring, Report& rep) {
    auto pairs = minimal_infeasible_pairs(ring.arr(), ring.chambers());
    auto gens = ideal_generators(ring.arr(), pairs);

    rep.fact("n", ring.arr().n());
    rep.fact("d", ring.arr().d);
    rep.fact("chambers", ring.chamber_count());
    rep.fact("basis_size", ring.basis_size());
    rep.fact("image_rank", ring.image_rank());
    rep.fact("generators", gens.size());

    size_t kernel_fail = 0;
    std::string witness;
    for (const auto& g : gens) {
        if (ring.eval_poly(g.poly).is_zero()) continue;
        ++kernel_fail;
        if (witness.empty())
            witness = "family " + std::to_string(g.family) + " at " +
                      index_set_string(g.plus) + "/" + index_set_string(g.minus);
    }
    rep.check("kernel_containment", kernel_fail == 0,
              kernel_fail ? witness : std::to_string(gens.size()) + " generators vanish");

    bool rank_ok = ring.image_rank() == ring.basis_size() &&
                   ring.basis_size() == ring.chamber_count() + 1;
    rep.check("injectivity_rank", rank_ok,
              "lattice rank " + std::to_string(ring.image_rank()) + ", R+1 = " +
                  std::to_string(ring.chamber_count() + 1));

    size_t closure_fail = 0;
    std::string cw;
    for (size_t i = 0; i < ring.basis_size(); ++i)
        for (size_t j = i; j < ring.basis_size(); ++j)
            if (!ring.try_to_basis(ring.basis_images()[i] * ring.basis_images()[j])) {
                ++closure_fail;
                if (cw.empty())
                    cw = ring.basis()[i].name() + " * " + ring.basis()[j].name();
            }
    rep.check("closure_integrality", closure_fail == 0,
              closure_fail ? cw : "all basis products re-express integrally");
}

}  // namespace detail

// Certificate for the presentation theorem on this instance: the ideal
// generators vanish in the chamber ring, the basis images span a lattice
// of full rank R+1, and basis products stay inside that lattice.  On
// failure the same checks rerun after normalize_delta (base = chamber 0)
// and both outcomes are reported.
inline Report certify_theorem_pl(const Arrangement& arr) {
    Report rep("check-pl");
    KRing ring(arr);
    detail::theorem_pl_checks(ring, rep);
    if (!rep.ok() && !ring.chambers().empty()) {
        Report retry("normalized");
        KRing nring(normalize_delta(arr, ring.chambers()[0]));
        detail::theorem_pl_checks(nring, retry);
        rep.merge(retry);
    }
    return rep;
}

// chamber c of src corresponds to the dst chamber with sign i flipped
inline std::vector<size_t> chamber_permutation(const KRing& src, const KRing& dst, size_t i) {
    std::map<SignVector, size_t> lookup;
    for (const auto& ch : dst.chambers()) lookup[ch.sign] = ch.index;
    std::vector<size_t> perm(src.chamber_count());
    for (const auto& ch : src.chambers()) {
        SignVector sv = ch.sign;
        sv[i] = -sv[i];
        auto it = lookup.find(sv);
        if (it == lookup.end())
            throw error(errc::internal_error, "reorientation does not permute chambers");
        perm[ch.index] = it->second;
    }
    return perm;
}

inline ChamberElem transport(const ChamberElem& e, const std::vector<size_t>& perm) {
    ChamberElem out(e.size());
    for (size_t c = 0; c < e.size(); ++c) out.v[perm[c]] = e.v[c];
    return out;
}

// The isomorphism P(A) -> P(A^i) of the coorientation remark
// (e_i -> x - e_i): transport the chamber image through the sign-flip
// bijection and re-express over the reoriented basis.
inline RingElement reorient_iso(const KRing& src, const KRing& dst, size_t i,
                                const RingElement& u) {
    auto perm = chamber_permutation(src, dst, i);
    return dst.to_basis(transport(src.h_of(u), perm));
}

// Chamber-level certificate for the decone pullback identity: for every
// chamber and every i >= 1, h_C(eta_0 + eta_i - eta_0*eta_i) is x when
// omega_0 and omega_i disagree in sign on C, and 0 otherwise.
inline Report certify_decone_identity(const Arrangement& arr) {
    Report rep("check-decone");
    for (const auto& f : arr.functionals)
        if (f.c != 0)
            throw error(errc::precondition_failed,
                        "decone identity requires a central arrangement");
    KRing ring(arr);
    rep.fact("n", arr.n());
    rep.fact("chambers", ring.chamber_count());
    size_t fail = 0, total = 0;
    std::string witness;
    for (const auto& ch : ring.chambers()) {
        for (size_t i = 1; i < arr.n(); ++i) {
            // values of h_C(eta_0), h_C(eta_i) are x or 0 by the sign
            std::array<Int, 2> u{Int(0), Int(ch.sign[0] > 0 ? 1 : 0)};
            std::array<Int, 2> v{Int(0), Int(ch.sign[i] > 0 ? 1 : 0)};
            std::array<Int, 2> prod{Int(0), u[1] * v[1] * 2};
            std::array<Int, 2> val{u[0] + v[0] - prod[0], u[1] + v[1] - prod[1]};
            bool opposite = ch.sign[0] != ch.sign[i];
            std::array<Int, 2> expect{Int(0), Int(opposite ? 1 : 0)};
            ++total;
            if (val != expect) {
                ++fail;
                if (witness.empty())
                    witness = "chamber " + std::to_string(ch.index) + ", i = " +
                              std::to_string(i + 1);
            }
        }
    }
    rep.fact("cases", total);
    rep.check("pullback_identity", fail == 0, fail ? witness : "all chamber cases match");
    return rep;
}

}  // namespace arrk
