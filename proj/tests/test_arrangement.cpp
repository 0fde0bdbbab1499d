#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arrk/arrangement.hpp"
#include "arrk/examples.hpp"

using namespace arrk;

namespace {

// brute-force chamber oracle: try every full sign vector
std::set<SignVector> chambers_by_enumeration(const Arrangement& arr) {
    std::set<SignVector> out;
    size_t n = arr.n();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        SignVector sv(n);
        for (size_t i = 0; i < n; ++i) sv[i] = (mask >> i) & 1 ? +1 : -1;
        if (realize_sign(arr, sv)) out.insert(sv);
    }
    return out;
}

int sign_at(const Arrangement& arr, size_t i, const QVec& p) {
    return sign_of(arr.functionals[i].eval(p));
}

}  // namespace

TEST_CASE("empty arrangement has one chamber") {
    Arrangement arr;
    arr.d = 2;
    auto ch = enumerate_chambers(arr);
    REQUIRE(ch.size() == 1);
    CHECK(ch[0].sign.empty());
}

TEST_CASE("one point in R has chambers (-), (+)") {
    auto arr = examples::point();
    auto ch = enumerate_chambers(arr);
    REQUIRE(ch.size() == 2);
    CHECK(ch[0].sign == SignVector{-1});
    CHECK(ch[1].sign == SignVector{+1});
    CHECK(arr.functionals[0].eval(ch[0].witness) < 0);
    CHECK(arr.functionals[0].eval(ch[1].witness) > 0);
}

TEST_CASE("3 generic lines: 7 chambers, cross-checked by brute force") {
    auto arr = examples::generic_3_lines();
    auto ch = enumerate_chambers(arr);
    CHECK(ch.size() == 7);
    auto oracle = chambers_by_enumeration(arr);
    REQUIRE(oracle.size() == 7);
    for (const auto& c : ch) {
        CHECK(oracle.count(c.sign) == 1);
        for (size_t i = 0; i < arr.n(); ++i) CHECK(sign_at(arr, i, c.witness) == c.sign[i]);
    }
}

TEST_CASE("chamber witnesses match signs on the whole corpus") {
    for (const auto& named : examples::corpus()) {
        auto ch = enumerate_chambers(named.arr);
        auto oracle = chambers_by_enumeration(named.arr);
        CHECK(ch.size() == oracle.size());
        for (const auto& c : ch)
            for (size_t i = 0; i < named.arr.n(); ++i)
                CHECK(sign_at(named.arr, i, c.witness) == c.sign[i]);
    }
}

TEST_CASE("is_simple") {
    CHECK(is_simple(examples::point()));
    CHECK(is_simple(examples::two_points()));
    CHECK(is_simple(examples::generic_3_lines()));
    CHECK(is_simple(examples::boolean_arrangement(3)));
    CHECK_FALSE(is_simple(examples::concurrent_3_lines()));
}

TEST_CASE("faces of one point in R") {
    auto arr = examples::point();
    auto faces = enumerate_faces(arr);
    REQUIRE(faces.size() == 3);
    // canonical order: (-1) < (0) < (+1)
    CHECK(faces[0].sign == SignVector{-1});
    CHECK(faces[1].sign == SignVector{0});
    CHECK(faces[2].sign == SignVector{+1});
    CHECK(faces[1].codim == 1);
    CHECK(faces[1].cofaces == std::vector<size_t>{0, 1});
}

TEST_CASE("faces of the empty arrangement") {
    Arrangement arr;
    arr.d = 1;
    auto faces = enumerate_faces(arr);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].codim == 0);
    CHECK(faces[0].cofaces == std::vector<size_t>{0});
}

TEST_CASE("faces of two points on a line") {
    auto arr = examples::two_points();
    auto faces = enumerate_faces(arr);
    REQUIRE(faces.size() == 5);
    size_t chambers = 0, points = 0;
    for (const auto& f : faces) {
        if (f.codim == 0) ++chambers;
        if (f.codim == 1) {
            ++points;
            CHECK(f.cofaces.size() == 2);
        }
    }
    CHECK(chambers == 3);
    CHECK(points == 2);
}

TEST_CASE("face enumeration requires simplicity") {
    CHECK_THROWS_AS(enumerate_faces(examples::concurrent_3_lines()), error);
}

TEST_CASE("coface sets are sub-hypercubes for simple arrangements") {
    for (const auto& named : examples::corpus()) {
        if (!is_simple(named.arr)) continue;
        auto ch = enumerate_chambers(named.arr);
        auto faces = enumerate_faces(named.arr, ch);
        for (const auto& f : faces) {
            CHECK(f.cofaces.size() == (size_t(1) << f.codim));
            std::set<SignVector> members;
            for (size_t ci : f.cofaces) members.insert(ch[ci].sign);
            for (size_t ci : f.cofaces)
                for (size_t i = 0; i < f.sign.size(); ++i) {
                    if (f.sign[i] != 0) continue;
                    SignVector flipped = ch[ci].sign;
                    flipped[i] = -flipped[i];
                    CHECK(members.count(flipped) == 1);
                }
        }
    }
}

TEST_CASE("reorient is an involution and flips chamber signs") {
    auto arr = examples::generic_3_lines();
    auto twice = reorient(reorient(arr, 1), 1);
    for (size_t i = 0; i < arr.n(); ++i) {
        CHECK(twice.functionals[i].a == arr.functionals[i].a);
        CHECK(twice.functionals[i].c == arr.functionals[i].c);
    }
    auto ch = enumerate_chambers(arr);
    auto rch = enumerate_chambers(reorient(arr, 1));
    std::set<SignVector> flipped;
    for (const auto& c : ch) {
        SignVector sv = c.sign;
        sv[1] = -sv[1];
        flipped.insert(sv);
    }
    std::set<SignVector> got;
    for (const auto& c : rch) got.insert(c.sign);
    CHECK(flipped == got);
}

TEST_CASE("normalize_delta makes the base chamber all-minus") {
    auto arr = examples::generic_3_lines();
    auto ch = enumerate_chambers(arr);
    // the bounded triangle is the chamber with sign (+,+,-) for x, y, x+y-1
    for (const auto& base : ch) {
        auto norm = normalize_delta(arr, base);
        for (size_t i = 0; i < arr.n(); ++i)
            CHECK(norm.functionals[i].eval(base.witness) < 0);
    }
}

TEST_CASE("delete and restrict on the small examples") {
    // one point: both deletion and restriction are empty arrangements
    auto pt = examples::point();
    CHECK(delete_last(pt).n() == 0);
    auto rpt = restrict_last(pt);
    CHECK(rpt.arr.n() == 0);
    CHECK(rpt.arr.d == 0);

    // two points on a line: H_1 misses H_2, restriction is empty
    auto two = examples::two_points();
    auto r2 = restrict_last(two);
    CHECK(r2.arr.n() == 0);
    CHECK(r2.index_map.empty());

    // 3 generic lines: restriction is two points on a line
    auto g3 = examples::generic_3_lines();
    auto r3 = restrict_last(g3);
    CHECK(r3.arr.n() == 2);
    CHECK(r3.arr.d == 1);
    CHECK(enumerate_chambers(r3.arr).size() == 3);
    CHECK(r3.index_map.at(0).first == 0);
    CHECK(r3.index_map.at(1).first == 1);
}

TEST_CASE("restriction collapses coincident pullbacks with orientation record") {
    // concurrent lines y, x, x+y: both survivors restrict to the same point
    auto arr = examples::concurrent_3_lines();
    auto r = restrict_last(arr);
    CHECK(r.arr.n() == 1);
    REQUIRE(r.index_map.count(0));
    REQUIRE(r.index_map.count(1));
    CHECK(r.index_map.at(0) == std::make_pair(size_t(0), +1));
    CHECK(r.index_map.at(1) == std::make_pair(size_t(0), -1));
}

TEST_CASE("restriction chamber count does not depend on the chart") {
    auto arr = examples::generic_3_lines();
    auto count_with = [&](HyperplaneChart ch) {
        return enumerate_chambers(restrict_last(arr, ch).arr).size();
    };
    auto ch = chart_of_last(arr);
    size_t base = count_with(ch);
    // a different origin on H_3 and a rescaled direction
    HyperplaneChart other;
    other.origin = QVec{Rat(2), Rat(-1)};
    other.basis = QMat{QVec{Rat(3)}, QVec{Rat(-3)}};
    CHECK(count_with(other) == base);
}

TEST_CASE("restriction to a hyperplane whose first normal coordinate vanishes") {
    // last hyperplane y = 2; chart pivot falls on the second coordinate
    Arrangement arr;
    arr.d = 2;
    arr.functionals = {examples::form({1, 0}, 0), examples::form({1, -1}, 0),
                       examples::form({0, 1}, -2)};
    auto r = restrict_last(arr);
    REQUIRE(r.arr.n() == 2);
    CHECK(r.arr.d == 1);
    // on y = 2 the survivors cut the points x = 0 and x = 2
    CHECK(enumerate_chambers(r.arr).size() == 3);
    for (const auto& [i, entry] : r.index_map) CHECK(entry.second == +1);
}

TEST_CASE("validate flags repeated hyperplanes") {
    Arrangement arr;
    arr.d = 1;
    arr.functionals = {AffineForm{QVec{Rat(1)}, Rat(0)}, AffineForm{QVec{Rat(-2)}, Rat(0)}};
    auto warnings = validate(arr);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("opposite") != std::string::npos);
    CHECK(validate(examples::generic_3_lines()).empty());
}
