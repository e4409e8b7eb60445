// Truncated one-variable power series with exact rational coefficients,
// and the modified Bernoulli numbers b_{2n} they are used for.
#pragma once

#include <vector>

#include "jd/rational.hpp"

namespace jd {

// Coefficients c[0..order] of a series truncated after x^order.
struct Series {
    int order = 0;
    std::vector<Rat> c;

    Series() : c(1, Rat(0)) {}
    explicit Series(int ord, Rat c0 = 0) : order(ord), c(ord + 1, Rat(0)) { c[0] = c0; }

    Rat coeff(int k) const { return (k >= 0 && k <= order) ? c[k] : Rat(0); }

    static Series monomial(int ord, int k, const Rat& a)
    {
        Series s(ord);
        if (k <= ord)
            s.c[k] = a;
        return s;
    }

    bool operator==(const Series& o) const = default;
};

inline Series operator+(const Series& a, const Series& b)
{
    Series r(std::min(a.order, b.order));
    for (int k = 0; k <= r.order; ++k)
        r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline Series operator-(const Series& a, const Series& b)
{
    Series r(std::min(a.order, b.order));
    for (int k = 0; k <= r.order; ++k)
        r.c[k] = a.c[k] - b.c[k];
    return r;
}

inline Series operator*(const Rat& s, const Series& a)
{
    Series r = a;
    for (auto& x : r.c)
        x *= s;
    return r;
}

inline Series operator*(const Series& a, const Series& b)
{
    Series r(std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) {
        if (a.c[i] == 0)
            continue;
        for (int j = 0; i + j <= r.order; ++j)
            if (b.c[j] != 0)
                r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

// a / b, requiring b to be a unit (nonzero constant term).
inline Series operator/(const Series& a, const Series& b)
{
    if (b.c[0] == 0)
        throw Error(Error::usage, "series division by non-unit");
    Series r(std::min(a.order, b.order));
    for (int k = 0; k <= r.order; ++k) {
        Rat acc = a.coeff(k);
        for (int j = 0; j < k; ++j)
            acc -= r.c[j] * b.coeff(k - j);
        r.c[k] = acc / b.c[0];
    }
    return r;
}

// log of a series with constant term 1, via log(1+u) = sum (-1)^{k+1} u^k / k.
inline Series series_log(const Series& a)
{
    if (a.c[0] != 1)
        throw Error(Error::usage, "series_log needs constant term 1");
    Series u = a;
    u.c[0] = 0;
    Series r(a.order), p(a.order, 1);
    for (int k = 1; k <= a.order; ++k) {
        p = p * u;
        Rat sign = (k % 2) ? 1 : -1;
        r = r + (sign / Rat(k)) * p;
    }
    return r;
}

// exp of a series with constant term 0.
inline Series series_exp(const Series& a)
{
    if (a.c[0] != 0)
        throw Error(Error::usage, "series_exp needs constant term 0");
    Series r(a.order, 1), p(a.order, 1);
    for (int k = 1; k <= a.order; ++k) {
        p = p * a;
        r = r + (Rat(1) / Rat(factorial(k))) * p;
    }
    return r;
}

// sinh(a x / 2) / (a x / 2) = sum_k (a x)^{2k} / (4^k (2k+1)!), truncated.
inline Series sinh_ratio(int order, const Rat& a)
{
    Series s(order);
    Rat a2 = a * a;
    Rat term = 1;
    for (int k = 0; 2 * k <= order; ++k) {
        if (k > 0)
            term *= a2 / Rat(4 * (2 * k) * (2 * k + 1));
        s.c[2 * k] = term;
    }
    return s;
}

// Modified Bernoulli numbers: sum b_{2n} x^{2n} = (1/2) log(sinh(x/2)/(x/2)).
// Returns b[k] indexed by k with b[2n] set, odd entries zero.
inline std::vector<Rat> modified_bernoulli(int max_order)
{
    if (max_order < 2)
        throw Error(Error::usage, "modified_bernoulli needs max_order >= 2");
    Series s = sinh_ratio(max_order, 1);
    Series l = Rat(1, 2) * series_log(s);
    return l.c;
}

// Classical Bernoulli numbers B_0..B_n by the defining recurrence
// sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1. Used as the independent
// cross-check route: b_{2n} = B_{2n} / (4 n (2n)!).
inline std::vector<Rat> bernoulli_numbers(int n)
{
    std::vector<Rat> B(n + 1, Rat(0));
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rat acc = 0;
        for (int k = 0; k < m; ++k)
            acc += binomial(m + 1, k) * B[k];
        B[m] = -acc / binomial(m + 1, m);
    }
    return B;
}

inline Rat modified_bernoulli_via_recurrence(int two_n)
{
    auto B = bernoulli_numbers(two_n);
    return B[two_n] / (Rat(2 * two_n) * Rat(factorial(two_n)));
}

} // namespace jd
