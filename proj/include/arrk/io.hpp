// The arrangement file format: a "d n" header, then n lines of d+1
// rationals "a_1 ... a_d c".  '#' starts a comment, blank lines are
// ignored, parse errors carry line and token positions.
#pragma once

#include <sstream>
#include <string>

#include "arrk/arrangement.hpp"

namespace arrk {

namespace detail {

inline error parse_fail(size_t line, size_t tok, const std::string& msg) {
    return error(errc::parse_error,
                 "line " + std::to_string(line) + ", token " + std::to_string(tok) + ": " + msg);
}

inline Rat parse_rational(const std::string& s, size_t line, size_t tok) {
    size_t slash = s.find('/');
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) return false;
        for (size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    if (!digits(num)) throw parse_fail(line, tok, "malformed rational '" + s + "'");
    if (slash != std::string::npos) {
        std::string den = s.substr(slash + 1);
        if (!digits(den) || den[0] == '-' || den[0] == '+')
            throw parse_fail(line, tok, "malformed rational '" + s + "'");
        if (Int(den) == 0) throw parse_fail(line, tok, "zero denominator in '" + s + "'");
    }
    Rat q(s);
    q.canonicalize();
    return q;
}

}  // namespace detail

inline Arrangement parse_arrangement(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    std::vector<std::pair<size_t, std::vector<std::string>>> rows;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) rows.emplace_back(lineno, std::move(toks));
    }
    if (rows.empty()) throw detail::parse_fail(lineno, 0, "missing 'd n' header");

    const auto& [hline, header] = rows.front();
    if (header.size() != 2)
        throw detail::parse_fail(hline, header.size(), "header must be exactly 'd n'");
    Rat dq = detail::parse_rational(header[0], hline, 1);
    Rat nq = detail::parse_rational(header[1], hline, 2);
    if (dq.get_den() != 1 || nq.get_den() != 1 || dq < 0 || nq < 0)
        throw detail::parse_fail(hline, 1, "header entries must be nonnegative integers");
    size_t d = dq.get_num().get_ui();
    size_t n = nq.get_num().get_ui();

    if (rows.size() - 1 != n)
        throw detail::parse_fail(rows.back().first, 0,
                                 "expected " + std::to_string(n) + " data lines, found " +
                                     std::to_string(rows.size() - 1));
    Arrangement arr;
    arr.d = d;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& [lno, toks] = rows[r];
        if (toks.size() != d + 1)
            throw detail::parse_fail(lno, toks.size(),
                                     "expected " + std::to_string(d + 1) + " rationals");
        AffineForm f;
        f.a.resize(d);
        for (size_t k = 0; k < d; ++k) f.a[k] = detail::parse_rational(toks[k], lno, k + 1);
        f.c = detail::parse_rational(toks[d], lno, d + 1);
        if (is_zero(f.a))
            throw detail::parse_fail(lno, 1, "zero normal vector (not a hyperplane)");
        arr.functionals.push_back(std::move(f));
    }
    return arr;
}

inline std::string render_arrangement(const Arrangement& arr) {
    std::string s = std::to_string(arr.d) + " " + std::to_string(arr.n()) + "\n";
    for (const auto& f : arr.functionals) {
        for (size_t k = 0; k < arr.d; ++k) s += f.a[k].get_str() + " ";
        s += f.c.get_str() + "\n";
    }
    return s;
}

}  // namespace arrk
