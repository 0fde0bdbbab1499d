// Z[e_1..e_n, x] with canonical (degree, then lex) term order.
// Exponent vectors have length n+1; the last slot is the x-exponent.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "arrk/rat.hpp"

namespace arrk {

using Expo = std::vector<uint32_t>;

struct DegLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        uint64_t da = 0, db = 0;
        for (auto x : a) da += x;
        for (auto x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

class FreePoly {
public:
    FreePoly() = default;
    explicit FreePoly(size_t nvars) : nvars_(nvars) {}

    size_t nvars() const { return nvars_; }
    const std::map<Expo, Int, DegLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static FreePoly constant(size_t nvars, const Int& c) {
        FreePoly p(nvars);
        p.add_term(Expo(nvars + 1, 0), c);
        return p;
    }
    static FreePoly variable_e(size_t nvars, size_t i) {
        FreePoly p(nvars);
        Expo m(nvars + 1, 0);
        m[i] = 1;
        p.add_term(m, 1);
        return p;
    }
    static FreePoly variable_x(size_t nvars) {
        FreePoly p(nvars);
        Expo m(nvars + 1, 0);
        m[nvars] = 1;
        p.add_term(m, 1);
        return p;
    }

    void add_term(const Expo& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FreePoly operator+(const FreePoly& o) const {
        FreePoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    FreePoly operator-(const FreePoly& o) const {
        FreePoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    FreePoly operator*(const FreePoly& o) const {
        FreePoly r(nvars_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                Expo m = m1;
                for (size_t k = 0; k < m.size(); ++k) m[k] += m2[k];
                r.add_term(m, c1 * c2);
            }
        return r;
    }
    FreePoly operator-() const {
        FreePoly r(nvars_);
        for (const auto& [m, c] : terms_) r.add_term(m, -c);
        return r;
    }

    bool operator==(const FreePoly& o) const { return terms_ == o.terms_; }

    // exact division by x; requires every monomial to carry a factor of x
    FreePoly divide_by_x() const {
        FreePoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[nvars_] == 0)
                throw error(errc::division_failure,
                            "monomial without a factor of x: " + monomial_string(m));
            Expo q = m;
            --q[nvars_];
            r.add_term(q, c);
        }
        return r;
    }

    std::string monomial_string(const Expo& m) const {
        std::string s;
        for (size_t i = 0; i < nvars_; ++i)
            for (uint32_t k = 0; k < m[i]; ++k) s += "e" + std::to_string(i + 1) + "*";
        for (uint32_t k = 0; k < m[nvars_]; ++k) s += "x*";
        if (s.empty()) return "1";
        s.pop_back();
        return s;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        // highest term first reads better
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string mono = monomial_string(m);
            if (!s.empty()) s += (c > 0) ? " + " : " - ";
            else if (c < 0) s += "-";
            Int a = abs(c);
            if (a != 1 || mono == "1") {
                s += a.get_str();
                if (mono != "1") s += "*";
            }
            if (mono != "1") s += mono;
        }
        return s;
    }

private:
    size_t nvars_ = 0;
    std::map<Expo, Int, DegLexLess> terms_;
};

}  // namespace arrk
