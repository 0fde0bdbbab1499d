// Built-in example arrangements and the deterministic test corpus.
#pragma once

#include <optional>
#include <string>

#include "arrk/arrangement.hpp"

namespace arrk::examples {

inline AffineForm form(std::initializer_list<long> a, long c) {
    QVec v;
    for (long x : a) v.emplace_back(x);
    return AffineForm{std::move(v), Rat(c)};
}

// one point in R: omega = t
inline Arrangement point() {
    Arrangement arr;
    arr.d = 1;
    arr.functionals = {form({1}, 0)};
    return arr;
}

// t and t-1
inline Arrangement two_points() {
    Arrangement arr;
    arr.d = 1;
    arr.functionals = {form({1}, 0), form({1}, -1)};
    return arr;
}

// x, y, x+y-1: three lines bounding a triangle
inline Arrangement generic_3_lines() {
    Arrangement arr;
    arr.d = 2;
    arr.functionals = {form({1, 0}, 0), form({0, 1}, 0), form({1, 1}, -1)};
    return arr;
}

// y, x, x+y through the origin (one circuit, in this input order)
inline Arrangement concurrent_3_lines() {
    Arrangement arr;
    arr.d = 2;
    arr.functionals = {form({0, 1}, 0), form({1, 0}, 0), form({1, 1}, 0)};
    return arr;
}

// coordinate hyperplanes x_1, ..., x_k
inline Arrangement boolean_arrangement(size_t k) {
    Arrangement arr;
    arr.d = k;
    for (size_t i = 0; i < k; ++i) {
        AffineForm f;
        f.a.assign(k, Rat(0));
        f.a[i] = 1;
        f.c = 0;
        arr.functionals.push_back(std::move(f));
    }
    return arr;
}

// x_1, ..., x_d, x_1+...+x_d: central, one circuit on the full index set
inline Arrangement generic_central(size_t d) {
    Arrangement arr = boolean_arrangement(d);
    AffineForm sum;
    sum.a.assign(d, Rat(1));
    sum.c = 0;
    arr.functionals.push_back(std::move(sum));
    return arr;
}

namespace detail {

class Lcg {
public:
    explicit Lcg(unsigned long long seed) : state_(seed) {}
    long small() {  // value in [-3, 3]
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state_ >> 33) % 7) - 3;
    }

private:
    unsigned long long state_;
};

inline bool proportional(const AffineForm& f, const AffineForm& g, size_t d) {
    size_t piv = 0;
    while (piv < d && f.a[piv] == 0) ++piv;
    if (piv == d || g.a[piv] == 0) return false;
    Rat lambda = g.a[piv] / f.a[piv];
    if (g.c != lambda * f.c) return false;
    for (size_t k = 0; k < d; ++k)
        if (g.a[k] != lambda * f.a[k]) return false;
    return true;
}

inline Arrangement random_arrangement(size_t n, size_t d, unsigned long long seed) {
    Lcg rng(seed);
    Arrangement arr;
    arr.d = d;
    while (arr.functionals.size() < n) {
        AffineForm f;
        f.a.assign(d, Rat(0));
        bool nonzero = false;
        for (size_t k = 0; k < d; ++k) {
            f.a[k] = rng.small();
            if (f.a[k] != 0) nonzero = true;
        }
        f.c = rng.small();
        if (!nonzero) continue;
        bool dup = false;
        for (const auto& g : arr.functionals)
            if (proportional(g, f, d)) { dup = true; break; }
        if (!dup) arr.functionals.push_back(std::move(f));
    }
    return arr;
}

}  // namespace detail

struct NamedArrangement {
    std::string name;
    Arrangement arr;
};

// The acceptance corpus: every built-in example plus deterministic
// randomized arrangements (fixed seeds, small integer coefficients).
inline std::vector<NamedArrangement> corpus() {
    std::vector<NamedArrangement> c;
    c.push_back({"point", point()});
    c.push_back({"two-points", two_points()});
    c.push_back({"generic-3-lines", generic_3_lines()});
    c.push_back({"concurrent-3-lines", concurrent_3_lines()});
    c.push_back({"boolean-2", boolean_arrangement(2)});
    c.push_back({"boolean-3", boolean_arrangement(3)});
    c.push_back({"generic-2-plus-1-central", generic_central(2)});
    c.push_back({"generic-3-plus-1-central", generic_central(3)});
    c.push_back({"random-1", detail::random_arrangement(3, 1, 11)});
    c.push_back({"random-2", detail::random_arrangement(4, 2, 22)});
    c.push_back({"random-3", detail::random_arrangement(5, 2, 33)});
    c.push_back({"random-4", detail::random_arrangement(6, 2, 44)});
    c.push_back({"random-5", detail::random_arrangement(5, 3, 55)});
    c.push_back({"random-6", detail::random_arrangement(7, 3, 66)});
    c.push_back({"random-7", detail::random_arrangement(8, 3, 77)});
    return c;
}

// Named lookup used by the CLI; boolean-<k> and
// generic-<d>-plus-1-central are parametrized families.
inline std::optional<Arrangement> by_name(const std::string& name) {
    if (name == "point") return point();
    if (name == "two-points") return two_points();
    if (name == "generic-3-lines") return generic_3_lines();
    if (name == "concurrent-3-lines") return concurrent_3_lines();
    auto tail_number = [](const std::string& s, const std::string& prefix,
                          const std::string& suffix) -> std::optional<size_t> {
        if (s.size() <= prefix.size() + suffix.size()) return std::nullopt;
        if (s.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
        if (s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0) return std::nullopt;
        std::string mid = s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
        if (mid.empty()) return std::nullopt;
        size_t v = 0;
        for (char ch : mid) {
            if (ch < '0' || ch > '9') return std::nullopt;
            v = v * 10 + size_t(ch - '0');
        }
        return v;
    };
    if (auto k = tail_number(name, "boolean-", ""); k && *k >= 1 && *k <= 8)
        return boolean_arrangement(*k);
    if (auto d = tail_number(name, "generic-", "-plus-1-central"); d && *d >= 2 && *d <= 6)
        return generic_central(*d);
    return std::nullopt;
}

}  // namespace arrk::examples
