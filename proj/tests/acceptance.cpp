// Acceptance suite: one pass/fail line per criterion, exit 0 iff all
// pass.  Every check is exact; the corpus is the built-in examples plus
// deterministic randomized arrangements.
#include <chrono>
#include <cstdio>
#include <memory>

#include "arrk/delres.hpp"
#include "arrk/examples.hpp"
#include "arrk/kring.hpp"
#include "arrk/ratk.hpp"
#include "arrk/subring.hpp"

using namespace arrk;

namespace {

struct Entry {
    std::string name;
    Arrangement arr;
    std::unique_ptr<KRing> ring;
};

std::vector<Entry> build_corpus() {
    std::vector<Entry> entries;
    for (auto& named : examples::corpus()) {
        Entry e;
        e.name = named.name;
        e.arr = named.arr;
        e.ring = std::make_unique<KRing>(named.arr);
        entries.push_back(std::move(e));
    }
    return entries;
}

int failures = 0;

void line(int criterion, const char* what, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

RingElement unit_vec(size_t dim, size_t pos) {
    RingElement u(dim, Int(0));
    u[pos] = 1;
    return u;
}

// ---- criterion 1: the one-point example, exactly -----------------------

void criterion_1() {
    KRing ring(examples::point());
    bool ok = ring.basis_size() == 3 && ring.basis()[0].name() == "1" &&
              ring.basis()[1].name() == "x" && ring.basis()[2].name() == "e{1}";
    RingElement x = unit_vec(3, 1), e = unit_vec(3, 2);
    RingElement twice_x = x, twice_e = e;
    twice_x[1] = 2;
    twice_e[2] = 2;
    ok = ok && ring.multiply(x, x) == twice_x;
    ok = ok && ring.multiply(e, e) == twice_e;
    RingElement x_minus_e{Int(0), Int(1), Int(-1)};
    ok = ok && ring.multiply(e, x_minus_e) == RingElement(3, Int(0));
    const auto& he = ring.basis_images()[2];
    ok = ok && he.v[0] == std::array<Int, 2>{Int(0), Int(0)} &&
         he.v[1] == std::array<Int, 2>{Int(0), Int(1)};
    line(1, "one-point example: basis {1,x,e}, x^2=2x, e^2=2e, e(x-e)=0, h(e)", ok);
}

// ---- criterion 2: rank of the h-image lattice is R+1 -------------------

void criterion_2(const std::vector<Entry>& corpus) {
    bool ok = corpus.size() >= 12;
    std::string detail = std::to_string(corpus.size()) + " arrangements";
    for (const auto& e : corpus) {
        size_t r = e.ring->chamber_count();
        if (e.ring->basis_size() != r + 1 || e.ring->image_rank() != r + 1) {
            ok = false;
            detail = "failed at " + e.name;
            break;
        }
    }
    line(2, "rank law: h-image lattice rank = R+1 across the corpus", ok, detail);
}

// ---- criterion 3: ideal generators vanish in the chamber ring ----------

void criterion_3(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::string detail;
    for (const auto& e : corpus) {
        auto pairs = minimal_infeasible_pairs(e.arr, e.ring->chambers());
        for (const auto& g : ideal_generators(e.arr, pairs))
            if (!e.ring->eval_poly(g.poly).is_zero()) {
                ok = false;
                detail = e.name + ", family " + std::to_string(g.family);
            }
    }
    line(3, "kernel containment: all five relation families vanish under h", ok, detail);
}

// ---- criterion 4: basis products re-express integrally -----------------

void criterion_4(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::string detail;
    for (const auto& e : corpus) {
        for (size_t i = 0; i < e.ring->basis_size() && ok; ++i)
            for (size_t j = i; j < e.ring->basis_size() && ok; ++j)
                if (!e.ring->try_to_basis(e.ring->basis_images()[i] * e.ring->basis_images()[j])) {
                    ok = false;
                    detail = e.name;
                }
    }
    line(4, "closure: every basis product has integer nbc coordinates", ok, detail);
}

// ---- criterion 5: family-5 exact division ------------------------------

void criterion_5(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::string detail;
    for (const auto& e : corpus) {
        size_t n = e.arr.n();
        for (const auto& p : minimal_infeasible_pairs(e.arr, e.ring->chambers())) {
            if (!p.family5_eligible) continue;
            FreePoly lhs = FreePoly::constant(n, 1), rhs = FreePoly::constant(n, 1);
            for (size_t i : p.plus) lhs = lhs * FreePoly::variable_e(n, i);
            for (size_t j : p.minus)
                lhs = lhs * (FreePoly::variable_e(n, j) - FreePoly::variable_x(n));
            for (size_t i : p.plus)
                rhs = rhs * (FreePoly::variable_e(n, i) - FreePoly::variable_x(n));
            for (size_t j : p.minus) rhs = rhs * FreePoly::variable_e(n, j);
            FreePoly diff = lhs - rhs;
            for (const auto& [mono, coef] : diff.terms())
                if (mono[n] == 0) {
                    ok = false;
                    detail = e.name + ": monomial without x";
                }
        }
    }
    {
        auto arr = examples::concurrent_3_lines();
        FreePoly expected = -(FreePoly::variable_e(3, 0) * FreePoly::variable_e(3, 1)) +
                            FreePoly::variable_e(3, 0) * FreePoly::variable_e(3, 2) +
                            FreePoly::variable_e(3, 1) * FreePoly::variable_e(3, 2) -
                            FreePoly::variable_x(3) * FreePoly::variable_e(3, 2);
        size_t fam5 = 0;
        for (const auto& g : ideal_generators(arr))
            if (g.family == 5) {
                ++fam5;
                if (!(g.poly == expected || g.poly == -expected)) {
                    ok = false;
                    detail = "concurrent-3-lines quotient mismatch";
                }
            }
        if (fam5 != 1) {
            ok = false;
            detail = "expected exactly one family-5 generator";
        }
    }
    line(5, "family 5: pre-division polynomials divisible by x; frozen quotient", ok, detail);
}

// ---- criterion 6: subring certification on simple members --------------

void criterion_6(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::string detail;
    size_t ran = 0;
    for (const auto& e : corpus) {
        if (!is_simple(e.arr)) continue;
        ++ran;
        auto rep = certify_pb(e.arr);
        if (!rep.ok()) {
            ok = false;
            detail = e.name;
        }
    }
    line(6, "subring: image-in-B, lattice equality, multiplicative closure", ok,
         std::to_string(ran) + " simple members");
}

// ---- criterion 7: deletion-restriction exactness ------------------------

void criterion_7(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::string detail;
    size_t bruns = 0;
    for (const auto& e : corpus) {
        if (!certify_exactness_p(e.arr).ok()) {
            ok = false;
            detail = e.name + " (P)";
        }
        if (!is_simple(e.arr)) continue;
        auto norm = normalize_adjacent_to_last(e.arr);
        if (!norm) continue;
        ++bruns;
        if (!certify_exactness_b(*norm).ok()) {
            ok = false;
            detail = e.name + " (B)";
        }
    }
    line(7, "deletion-restriction: P exact on corpus, B exact after normalization", ok,
         detail.empty() ? std::to_string(bruns) + " B-side runs" : detail);
}

// ---- criterion 8: decone identity on central members --------------------

void criterion_8(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::string detail;
    size_t ran = 0;
    for (const auto& e : corpus) {
        bool central = true;
        for (const auto& f : e.arr.functionals)
            if (f.c != 0) central = false;
        if (!central) continue;
        ++ran;
        if (!certify_decone_identity(e.arr).ok()) {
            ok = false;
            detail = e.name;
        }
    }
    line(8, "decone pullback identity on central members", ok,
         detail.empty() ? std::to_string(ran) + " central members" : detail);
}

// ---- criterion 9: reorientation isomorphism ------------------------------

void criterion_9(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::string detail;
    for (const auto& e : corpus) {
        const KRing& src = *e.ring;
        for (size_t i = 0; i < e.arr.n() && ok; ++i) {
            KRing dst(reorient(e.arr, i));
            auto perm = chamber_permutation(src, dst, i);
            std::vector<size_t> inv(perm.size());
            for (size_t c = 0; c < perm.size(); ++c) inv[perm[c]] = c;

            // lattice bijection: transported basis images span exactly the
            // target basis-image lattice
            ZMat transported;
            for (size_t j = 0; j < src.basis_size(); ++j)
                transported.push_back(transport(src.basis_images()[j], perm).flatten());
            if (!lattice_equal(hnf(transported, 2 * dst.chamber_count()), dst.image_lattice())) {
                ok = false;
                detail = e.name + ": lattice mismatch at i=" + std::to_string(i + 1);
                break;
            }

            // change of basis integral both ways, composing to the identity
            size_t m = src.basis_size();
            ZMat fwd(m, ZVec(m)), bwd(m, ZVec(m));
            for (size_t j = 0; j < m; ++j) {
                auto f = dst.try_to_basis(transport(src.basis_images()[j], perm));
                auto b = src.try_to_basis(transport(dst.basis_images()[j], inv));
                if (!f || !b) {
                    ok = false;
                    detail = e.name + ": non-integral change of basis";
                    break;
                }
                for (size_t r = 0; r < m; ++r) {
                    fwd[r][j] = (*f)[r];
                    bwd[r][j] = (*b)[r];
                }
            }
            if (!ok) break;
            ZMat id = matmul(fwd, bwd, m);
            for (size_t r = 0; r < m && ok; ++r)
                for (size_t c = 0; c < m && ok; ++c)
                    if (id[r][c] != (r == c ? 1 : 0)) {
                        ok = false;
                        detail = e.name + ": basis maps do not invert";
                    }
            if (!ok) break;

            // structure constants correspond: exhaustively on small rings,
            // on generator pairs plus a fixed sample otherwise
            auto phi = [&](const RingElement& u) { return matvec(fwd, u); };
            auto check_pair = [&](size_t a, size_t b) {
                auto lhs = phi(src.multiply(unit_vec(m, a), unit_vec(m, b)));
                auto rhs = dst.multiply(phi(unit_vec(m, a)), phi(unit_vec(m, b)));
                return lhs == rhs;
            };
            std::vector<std::pair<size_t, size_t>> pairs;
            if (m <= 16) {
                for (size_t a = 0; a < m; ++a)
                    for (size_t b = a; b < m; ++b) pairs.emplace_back(a, b);
            } else {
                std::vector<size_t> gens{0, 1};
                for (size_t j = 2; j < m; ++j)
                    if (src.basis()[j].eset.size() == 1) gens.push_back(j);
                for (size_t a : gens)
                    for (size_t b : gens) pairs.emplace_back(a, b);
                unsigned long long state = 7;
                for (int t = 0; t < 120; ++t) {
                    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                    size_t a = (state >> 33) % m;
                    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                    size_t b = (state >> 33) % m;
                    pairs.emplace_back(a, b);
                }
            }
            for (const auto& [a, b] : pairs)
                if (!check_pair(a, b)) {
                    ok = false;
                    detail = e.name + ": structure constants differ at i=" + std::to_string(i + 1);
                    break;
                }
        }
        if (!ok) break;
    }
    line(9, "reorientation: e_i -> x-e_i maps the lattice bijectively, tables correspond", ok,
         detail);
}

// ---- criterion 10: rational dimension counts ----------------------------

void criterion_10(const std::vector<Entry>& corpus) {
    auto g3 = k_dimensions(examples::generic_3_lines());
    auto pt = k_dimensions(examples::point());
    bool ok = g3.dim_k == 11 && g3.dim_line_q == 8 && g3.gap == 3 && pt.dim_k == 3 &&
              pt.dim_line_q == 3 && pt.gap == 0;
    std::string detail;
    for (const auto& e : corpus) {
        auto p = betti(e.arr);
        if (p.total() != p.chamber_count) {
            ok = false;
            detail = e.name;
        }
    }
    line(10, "dimensions: dims(generic-3-lines)=(11,8,3), dims(point)=(3,3,0), sum b = R", ok,
         detail);
}

// ---- criterion 11: cross-oracle chamber count ----------------------------

void criterion_11(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::string detail;
    for (const auto& e : corpus) {
        size_t chambers = enumerate_chambers(e.arr).size();  // feasibility path
        size_t nbc = nbc_sets(e.arr).size();                 // matroid path
        if (chambers != nbc) {
            ok = false;
            detail = e.name + ": " + std::to_string(chambers) + " vs " + std::to_string(nbc);
        }
    }
    line(11, "cross-oracle: nbc-set count equals chamber count", ok, detail);
}

}  // namespace

int main() {
    auto started = std::chrono::steady_clock::now();
    auto corpus = build_corpus();
    criterion_1();
    criterion_2(corpus);
    criterion_3(corpus);
    criterion_4(corpus);
    criterion_5(corpus);
    criterion_6(corpus);
    criterion_7(corpus);
    criterion_8(corpus);
    criterion_9(corpus);
    criterion_10(corpus);
    criterion_11(corpus);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::printf("%d of 11 criteria passed (%lld ms)\n", 11 - failures,
                static_cast<long long>(elapsed));
    return failures == 0 ? 0 : 1;
}
