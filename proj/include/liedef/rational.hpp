#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace liedef {

/// Exact rational number. Always canonical: lowest terms, denominator > 0.
/// GMP keeps arithmetic results canonical as long as the inputs are, so the
/// only place canonicalization is needed is string input.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p", or "p/q". Rejects zero denominators before GMP would
/// divide by them during canonicalization.
inline Rational rat_parse(const std::string& text) {
    Rational q;
    try {
        q = Rational(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

using RatVec = std::vector<Rational>;

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec vec_scale(const Rational& s, const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline void vec_add_scaled(RatVec& acc, const Rational& s, const RatVec& a) {
    for (size_t i = 0; i < a.size(); ++i) acc[i] += s * a[i];
}

inline bool vec_is_zero(const RatVec& a) {
    for (const auto& x : a)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace liedef
