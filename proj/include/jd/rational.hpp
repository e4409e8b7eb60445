// Exact rational scalar type and canonical "p/q" string form.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jd {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    enum Kind { structural, usage, resource, internal };
    Kind kind;
    explicit Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Canonical form: integer as "p", otherwise "p/q" with q > 0 and gcd(p,q) = 1
// (cpp_rational maintains that normal form internally).
inline std::string rat_str(const Rat& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_parse(std::string_view s)
{
    auto bad = [&] { throw Error(Error::usage, "bad rational: '" + std::string(s) + "'"); };
    if (s.empty())
        bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rat(Int(std::string(s)));
        Int p{std::string(s.substr(0, slash))};
        Int q{std::string(s.substr(slash + 1))};
        if (q == 0)
            bad();
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(0); // unreachable
}

inline Rat binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i)
        r *= Rat(n - i, i + 1);
    return r;
}

inline Int factorial(long n)
{
    Int r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Rat pow_int(const Rat& base, long e)
{
    Rat r = 1, b = base;
    long n = e < 0 ? -e : e;
    for (; n; n >>= 1) {
        if (n & 1)
            r *= b;
        b *= b;
    }
    if (e < 0) {
        if (r == 0)
            throw Error(Error::usage, "zero to negative power");
        r = 1 / r;
    }
    return r;
}

} // namespace jd
