// Graded elements over quotient coordinates and truncated series calculus
// for an arbitrary graded product.
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "jd/rational.hpp"

namespace jd {

// Truncated element of the diagram algebra: one exact coordinate vector per
// degree 0..max_degree over that degree's quotient basis.
struct GradedElement {
    bool framed = true;
    int max_degree = 0;
    std::vector<std::vector<Rat>> parts; // parts[k] over basis of degree k

    GradedElement() = default;
    GradedElement(bool fr, int maxdeg) : framed(fr), max_degree(maxdeg), parts(maxdeg + 1) {}

    const std::vector<Rat>& part(int k) const
    {
        static const std::vector<Rat> empty;
        return (k >= 0 && k <= max_degree) ? parts[k] : empty;
    }

    bool is_zero() const
    {
        for (auto& p : parts)
            for (auto& c : p)
                if (c != 0)
                    return false;
        return true;
    }

    Rat scalar_part() const { return parts.empty() || parts[0].empty() ? Rat(0) : parts[0][0]; }

    GradedElement truncated(int maxdeg) const
    {
        GradedElement r(framed, std::min(maxdeg, max_degree));
        for (int k = 0; k <= r.max_degree; ++k)
            r.parts[k] = parts[k];
        return r;
    }

    bool operator==(const GradedElement& o) const
    {
        if (framed != o.framed || max_degree != o.max_degree)
            return false;
        for (int k = 0; k <= max_degree; ++k) {
            const auto &a = parts[k], &b = o.parts[k];
            size_t n = std::max(a.size(), b.size());
            for (size_t i = 0; i < n; ++i) {
                Rat x = i < a.size() ? a[i] : Rat(0);
                Rat y = i < b.size() ? b[i] : Rat(0);
                if (x != y)
                    return false;
            }
        }
        return true;
    }
};

inline GradedElement operator+(const GradedElement& a, const GradedElement& b)
{
    if (a.framed != b.framed)
        throw Error(Error::usage, "framed/unframed mismatch");
    GradedElement r(a.framed, std::min(a.max_degree, b.max_degree));
    for (int k = 0; k <= r.max_degree; ++k) {
        const auto &x = a.parts[k], &y = b.parts[k];
        r.parts[k].assign(std::max(x.size(), y.size()), Rat(0));
        for (size_t i = 0; i < x.size(); ++i)
            r.parts[k][i] = x[i];
        for (size_t i = 0; i < y.size(); ++i)
            r.parts[k][i] += y[i];
    }
    return r;
}

inline GradedElement operator*(const Rat& s, const GradedElement& a)
{
    GradedElement r = a;
    for (auto& p : r.parts)
        for (auto& c : p)
            c *= s;
    return r;
}

inline GradedElement operator-(const GradedElement& a, const GradedElement& b)
{
    return a + Rat(-1) * b;
}

// Coproduct image: one exact matrix per bidegree (i,j), entry (r,c) the
// coefficient on basis_i[r] (x) basis_j[c].
struct TensorElement {
    bool framed = true;
    int max_degree = 0;
    std::map<std::pair<int, int>, std::vector<std::vector<Rat>>> blocks;

    static void add_to(std::vector<std::vector<Rat>>& m, size_t r, size_t c, const Rat& v)
    {
        if (m.size() <= r)
            m.resize(r + 1);
        if (m[r].size() <= c)
            m[r].resize(c + 1, Rat(0));
        m[r][c] += v;
    }

    Rat entry(int i, int j, size_t r, size_t c) const
    {
        auto it = blocks.find({i, j});
        if (it == blocks.end())
            return 0;
        if (r >= it->second.size() || c >= it->second[r].size())
            return 0;
        return it->second[r][c];
    }

    bool equals(const TensorElement& o) const
    {
        if (framed != o.framed || max_degree != o.max_degree)
            return false;
        auto cover = [&](const TensorElement& a, const TensorElement& b) {
            for (auto& [bi, m] : a.blocks)
                for (size_t r = 0; r < m.size(); ++r)
                    for (size_t c = 0; c < m[r].size(); ++c)
                        if (m[r][c] != b.entry(bi.first, bi.second, r, c))
                            return false;
            return true;
        };
        return cover(*this, o) && cover(o, *this);
    }
};

using ProductFn = std::function<GradedElement(const GradedElement&, const GradedElement&)>;

// exp under the given product; needs vanishing degree-0 part.
inline GradedElement exp_with(const GradedElement& a, const ProductFn& mul, const GradedElement& unit)
{
    if (a.scalar_part() != 0)
        throw Error(Error::usage, "exp needs zero degree-0 part");
    GradedElement r = unit.truncated(a.max_degree);
    GradedElement pw = r;
    for (int k = 1; k <= a.max_degree; ++k) {
        pw = mul(pw, a);
        r = r + Rat(1, factorial(k)) * pw;
    }
    return r;
}

// log under the given product; needs degree-0 part equal to 1.
inline GradedElement log_with(const GradedElement& a, const ProductFn& mul, const GradedElement& unit)
{
    if (a.scalar_part() != 1)
        throw Error(Error::usage, "log needs degree-0 part 1");
    GradedElement y = a - unit.truncated(a.max_degree);
    GradedElement r(a.framed, a.max_degree);
    GradedElement pw = unit.truncated(a.max_degree);
    for (int k = 1; k <= a.max_degree; ++k) {
        pw = mul(pw, y);
        Rat sign = (k % 2) ? 1 : -1;
        r = r + (sign / Rat(k)) * pw;
    }
    return r;
}

// multiplicative inverse under the given product; needs degree-0 part 1.
inline GradedElement inverse_with(const GradedElement& a, const ProductFn& mul, const GradedElement& unit)
{
    if (a.scalar_part() != 1)
        throw Error(Error::usage, "inverse needs degree-0 part 1");
    GradedElement y = unit.truncated(a.max_degree) - a;
    GradedElement r = unit.truncated(a.max_degree);
    GradedElement pw = r;
    for (int k = 1; k <= a.max_degree; ++k) {
        pw = mul(pw, y);
        r = r + pw;
    }
    return r;
}

} // namespace jd
