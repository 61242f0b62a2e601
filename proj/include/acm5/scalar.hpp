#pragma once

// Exact rational scalars for every tensor in the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace acm5 {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd(num, den) = 1, den > 0).
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
inline Scalar parse_scalar(std::string_view text)
{
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    s = s.substr(first, last - first + 1);

    auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (num.front() == '+')
        num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when the denominator is 1. Never a decimal.
inline std::string format_scalar(const Scalar& q)
{
    Scalar c = q; // values built from (num, den) pairs may not be canonical yet
    c.canonicalize();
    return c.get_str(10);
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

} // namespace acm5
