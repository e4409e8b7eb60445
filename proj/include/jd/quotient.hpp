// STU reduction of round diagrams to chord-diagram combinations, relation
// generation (induced four-term relations plus the isolated-chord relation in
// the unframed case), and per-degree quotient bases by exact elimination.
#pragma once

#include <set>
#include <unordered_map>

#include "jd/diagram.hpp"
#include "jd/enumerate.hpp"
#include "jd/linalg.hpp"

namespace jd {

// degree-homogeneous combination of canonical chord diagrams
struct LinearCombination {
    int degree = 0;
    std::map<std::string, Rat> terms; // canonical chord key -> coefficient

    void add(const std::string& key, const Rat& v)
    {
        if (v == 0)
            return;
        auto [it, fresh] = terms.emplace(key, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0)
                terms.erase(it);
        }
    }
};

inline LinearCombination operator*(const Rat& s, const LinearCombination& a)
{
    LinearCombination r;
    r.degree = a.degree;
    if (s != 0)
        for (auto& [k, v] : a.terms)
            r.terms.emplace(k, s * v);
    return r;
}

inline LinearCombination operator+(const LinearCombination& a, const LinearCombination& b)
{
    LinearCombination r = a;
    for (auto& [k, v] : b.terms)
        r.add(k, v);
    return r;
}

inline LinearCombination operator-(const LinearCombination& a, const LinearCombination& b)
{
    return a + Rat(-1) * b;
}

namespace detail {

// One STU step at leg `leg` (whose mate must be an internal vertex slot):
// returns the two resolutions T (coefficient +1) and U (coefficient -1).
// With the vertex triple rotated to (stem, x, y), T attaches y to the first
// new leg and x to the second; U swaps them.
inline std::pair<RoundDiagram, RoundDiagram> stu_resolve(const RoundDiagram& d, int leg)
{
    int stem = d.mate[leg];
    if (d.is_leg(stem))
        throw Error(Error::internal, "stu_resolve at a chord leg");
    int v = d.vertex_of(stem), s = d.slot_of(stem);
    int x = d.slot(v, (s + 1) % 3), y = d.slot(v, (s + 2) % 3);

    // rebuild with legs shifted by one after `leg`, vertex v dropped
    auto build = [&](int first_target, int second_target) {
        RoundDiagram r;
        r.legs = d.legs + 1;
        r.vertices = d.vertices - 1;
        r.mate.assign(r.half_edges(), -1);
        auto remap = [&](int h) -> int {
            if (d.is_leg(h))
                return h <= leg ? h : h + 1;
            int w = d.vertex_of(h);
            if (w == v)
                return -1;
            return r.legs + 3 * (w < v ? w : w - 1) + d.slot_of(h);
        };
        int l1 = leg, l2 = leg + 1;
        // first_target / second_target are the far half-edges of the two
        // edges previously entering v at x and y (or the other new leg when
        // those formed a self-loop pair at v).
        auto target = [&](int t, int self_new) { return t == x || t == y ? self_new : remap(t); };
        int t1 = target(first_target, l2), t2 = target(second_target, l1);
        r.mate[l1] = t1;
        r.mate[t1] = l1;
        r.mate[l2] = t2;
        r.mate[t2] = l2;
        for (int h = 0; h < d.half_edges(); ++h) {
            int nh = remap(h);
            if (nh < 0 || r.mate[nh] >= 0)
                continue;
            int nm = remap(d.mate[h]);
            r.mate[nh] = nm;
            r.mate[nm] = nh;
        }
        return r;
    };
    RoundDiagram T = build(d.mate[y], d.mate[x]);
    RoundDiagram U = build(d.mate[x], d.mate[y]);
    return {T, U};
}

inline int first_resolvable_leg(const RoundDiagram& d)
{
    for (int l = 0; l < d.legs; ++l)
        if (!d.is_leg(d.mate[l]))
            return l;
    return -1;
}

} // namespace detail

// Memoized STU reduction to canonical chord coordinates.
class StuReducer {
  public:
    LinearCombination reduce(const RoundDiagram& d)
    {
        validate(d);
        Canon c = canonical_round(d);
        LinearCombination out;
        out.degree = d.degree();
        if (c.zero)
            return out;
        if (d.vertices == 0) {
            out.add(c.key, c.sign);
            return out;
        }
        auto it = memo_.find(c.key);
        if (it == memo_.end()) {
            RoundDiagram rep = decode_round(c.key);
            int leg = detail::first_resolvable_leg(rep);
            if (leg < 0)
                throw Error(Error::internal, "no resolvable leg on a diagram with internal vertices");
            auto [T, U] = detail::stu_resolve(rep, leg);
            LinearCombination r = reduce(T) - reduce(U);
            it = memo_.emplace(c.key, std::move(r)).first;
        }
        return Rat(c.sign) * it->second;
    }

  private:
    std::unordered_map<std::string, LinearCombination> memo_;
};

// Degree-n round diagrams with exactly one internal vertex (a tripod plus
// n-2 chords), up to canonical form. Sources of the induced 4T relations.
inline std::vector<std::string> tripod_classes(int n)
{
    std::set<std::string> classes;
    if (n < 2)
        return {};
    int L = 2 * n - 1;
    RoundDiagram d;
    d.legs = L;
    d.vertices = 1;
    // choose the legs i<j<k attached to the tripod, both cyclic orders
    std::vector<int> rest;
    std::function<void()> pair_rest = [&]() {
        int a = -1;
        for (int h : rest)
            if (d.mate[h] < 0) {
                a = h;
                break;
            }
        if (a < 0) {
            classes.insert(canonical_round(d).key);
            return;
        }
        for (int b : rest) {
            if (b <= a || d.mate[b] >= 0)
                continue;
            d.mate[a] = b;
            d.mate[b] = a;
            pair_rest();
            d.mate[a] = -1;
            d.mate[b] = -1;
        }
    };
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j)
            for (int k = j + 1; k < L; ++k)
                for (int order = 0; order < 2; ++order) {
                    d.mate.assign(L + 3, -1);
                    int t0 = L, t1 = L + 1, t2 = L + 2;
                    int a = i, b = order ? k : j, c = order ? j : k;
                    d.mate[a] = t0;
                    d.mate[t0] = a;
                    d.mate[b] = t1;
                    d.mate[t1] = b;
                    d.mate[c] = t2;
                    d.mate[t2] = c;
                    rest.clear();
                    for (int h = 0; h < L; ++h)
                        if (h != i && h != j && h != k)
                            rest.push_back(h);
                    pair_rest();
                }
    return {classes.begin(), classes.end()};
}

// Relations among canonical chord diagrams of degree n: pairwise differences
// of the three STU resolutions of every one-vertex diagram, plus (unframed)
// every chord diagram with an isolated chord.
inline std::vector<LinearCombination> relation_set(int n, bool framed, StuReducer& red)
{
    std::vector<LinearCombination> rels;
    if (n < 0)
        throw Error(Error::usage, "negative degree");
    for (const auto& key : tripod_classes(n)) {
        RoundDiagram d = decode_round(key);
        std::vector<LinearCombination> res;
        for (int l = 0; l < d.legs; ++l) {
            if (d.is_leg(d.mate[l]))
                continue;
            auto [T, U] = detail::stu_resolve(d, l);
            res.push_back(red.reduce(T) - red.reduce(U));
        }
        for (size_t i = 0; i + 1 < res.size(); ++i) {
            LinearCombination r = res[i] - res[i + 1];
            if (!r.terms.empty())
                rels.push_back(std::move(r));
        }
    }
    if (!framed) {
        for (const auto& key : enumerate_chord_classes(n)) {
            if (has_isolated_chord(decode_round(key))) {
                LinearCombination r;
                r.degree = n;
                r.add(key, 1);
                rels.push_back(std::move(r));
            }
        }
    }
    return rels;
}

// Echelon data over the canonical chord diagrams of one degree.
struct QuotientBasis {
    int degree = 0;
    bool framed = true;
    std::vector<std::string> classes;      // all canonical chord keys, ascending
    std::map<std::string, int> class_index;
    std::vector<int> basis;                // column indices of free classes
    std::vector<std::string> basis_labels; // canonical keys of free classes
    // expansion of every class over basis positions
    std::vector<std::vector<std::pair<int, Rat>>> expansions;

    int dim() const { return (int)basis.size(); }

    std::vector<Rat> coordinates(const LinearCombination& x) const
    {
        if (x.degree != degree && !x.terms.empty())
            throw Error(Error::usage, "degree mismatch in coordinates");
        std::vector<Rat> out(basis.size(), Rat(0));
        for (auto& [key, coeff] : x.terms) {
            auto it = class_index.find(key);
            if (it == class_index.end())
                throw Error(Error::internal, "unknown chord class in coordinates");
            for (auto& [pos, v] : expansions[it->second])
                out[pos] += coeff * v;
        }
        return out;
    }
};

inline QuotientBasis build_quotient_basis(int n, bool framed, StuReducer& red)
{
    QuotientBasis qb;
    qb.degree = n;
    qb.framed = framed;
    qb.classes = enumerate_chord_classes(n);
    for (size_t i = 0; i < qb.classes.size(); ++i)
        qb.class_index[qb.classes[i]] = (int)i;

    Echelon ech;
    for (auto& rel : relation_set(n, framed, red)) {
        SparseRow row;
        for (auto& [key, v] : rel.terms)
            row.emplace_back(qb.class_index.at(key), v);
        ech.add_row(std::move(row));
    }
    std::map<int, int> basis_pos;
    for (size_t c = 0; c < qb.classes.size(); ++c)
        if (!ech.is_pivot((int)c)) {
            basis_pos[(int)c] = (int)qb.basis.size();
            qb.basis.push_back((int)c);
            qb.basis_labels.push_back(qb.classes[c]);
        }
    qb.expansions.resize(qb.classes.size());
    for (size_t c = 0; c < qb.classes.size(); ++c)
        for (auto& [fc, v] : ech.expand((int)c))
            qb.expansions[c].emplace_back(basis_pos.at(fc), v);
    return qb;
}

} // namespace jd
