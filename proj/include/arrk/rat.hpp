// Exact scalar types and small helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace arrk {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;

enum class errc {
    parse_error,
    not_simple,
    not_in_image,
    division_failure,
    precondition_failed,
    restriction_mismatch,
    parity_failure,
    internal_error,
};

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::not_simple: return "NotSimple";
        case errc::not_in_image: return "NotInImage";
        case errc::division_failure: return "DivisionFailure";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::restriction_mismatch: return "RestrictionMismatch";
        case errc::parity_failure: return "ParityFailure";
        case errc::internal_error: return "InternalError";
    }
    return "Error";
}

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

// floor quotient, the reduction step HNF relies on
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow2(unsigned k) { return Int(1) << k; }

inline bool is_zero(const ZVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Clears denominators and divides out the content; empty and zero vectors
// pass through. The sign is preserved (scaling factor is positive).
inline ZVec primitive_integer_vector(const QVec& v) {
    Int l = 1;
    for (const auto& q : v) l = lcm_int(l, Int(q.get_den()));
    ZVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = Int(v[i].get_num()) * (l / Int(v[i].get_den()));
        g = gcd_int(g, w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string vec_to_string(const QVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].get_str();
    }
    return s;
}

inline std::string vec_to_string(const ZVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].get_str();
    }
    return s;
}

}  // namespace arrk
