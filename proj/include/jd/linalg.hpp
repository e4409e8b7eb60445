// Exact sparse Gauss-Jordan over Q and a small dense solver.
#pragma once

#include <map>
#include <vector>

#include "jd/rational.hpp"

namespace jd {

// Sparse row: sorted (column, coefficient) with nonzero coefficients.
using SparseRow = std::vector<std::pair<int, Rat>>;

inline SparseRow row_axpy(const SparseRow& a, const Rat& s, const SparseRow& b)
{
    // a + s*b
    SparseRow r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first))
            r.push_back(a[i++]);
        else if (i >= a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            Rat v = a[i].second + s * b[j].second;
            if (v != 0)
                r.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return r;
}

// Incremental echelon form; the pivot of each row is its largest column, so
// the free (basis) columns end up lexicographically minimal. Rows are only
// reduced at their leading column on insert; full expansion over the free
// columns happens in expand() with memoized back-substitution.
struct Echelon {
    std::map<int, SparseRow> pivot_rows; // pivot column -> monic row
    mutable std::map<int, std::map<int, Rat>> expand_memo;

    // Insert a relation; returns true if it increased the rank.
    bool add_row(SparseRow row)
    {
        while (!row.empty()) {
            auto p = pivot_rows.find(row.back().first);
            if (p == pivot_rows.end())
                break;
            row = row_axpy(row, -row.back().second, p->second);
        }
        if (row.empty())
            return false;
        Rat lead = row.back().second;
        if (lead != 1)
            for (auto& [c, v] : row)
                v /= lead;
        int pc = row.back().first;
        pivot_rows.emplace(pc, std::move(row));
        expand_memo.clear();
        return true;
    }

    bool is_pivot(int col) const { return pivot_rows.count(col) > 0; }
    int rank() const { return (int)pivot_rows.size(); }

    // Expansion of a column over the free columns.
    const std::map<int, Rat>& expand(int col) const
    {
        auto it = expand_memo.find(col);
        if (it != expand_memo.end())
            return it->second;
        std::map<int, Rat> out;
        auto p = pivot_rows.find(col);
        if (p == pivot_rows.end()) {
            out[col] = 1;
        } else {
            // col = -sum_{c < col} coeff_c * c, each c expanded recursively
            const SparseRow& row = p->second;
            for (size_t i = 0; i + 1 < row.size(); ++i) {
                for (auto& [fc, fv] : expand(row[i].first)) {
                    Rat v = out[fc] - row[i].second * fv;
                    if (v == 0)
                        out.erase(fc);
                    else
                        out[fc] = v;
                }
            }
        }
        return expand_memo.emplace(col, std::move(out)).first->second;
    }
};

// Dense square solve A x = b over Q (A given row-major). Throws on singular.
inline std::vector<Rat> dense_solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b)
{
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw Error(Error::internal, "singular matrix in dense_solve");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        Rat d = A[col][col];
        for (size_t j = col; j < n; ++j)
            A[col][j] /= d;
        b[col] /= d;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0)
                continue;
            Rat f = A[r][col];
            for (size_t j = col; j < n; ++j)
                A[r][j] -= f * A[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

// Inverse of a dense square matrix over Q.
inline std::vector<std::vector<Rat>> dense_inverse(const std::vector<std::vector<Rat>>& M)
{
    size_t n = M.size();
    std::vector<std::vector<Rat>> A = M, I(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        I[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw Error(Error::internal, "singular matrix in dense_inverse");
        std::swap(A[piv], A[col]);
        std::swap(I[piv], I[col]);
        Rat d = A[col][col];
        for (size_t j = 0; j < n; ++j) {
            A[col][j] /= d;
            I[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0)
                continue;
            Rat f = A[r][col];
            for (size_t j = 0; j < n; ++j) {
                A[r][j] -= f * A[col][j];
                I[r][j] -= f * I[col][j];
            }
        }
    }
    return I;
}

inline std::vector<Rat> mat_vec(const std::vector<std::vector<Rat>>& M, const std::vector<Rat>& x)
{
    std::vector<Rat> y(M.size(), Rat(0));
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (M[i][j] != 0 && x[j] != 0)
                y[i] += M[i][j] * x[j];
    return y;
}

} // namespace jd
