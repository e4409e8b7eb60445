// Enumeration of canonical diagram classes: chord diagrams per degree,
// connected unitrivalent graphs (symmetrized-diagram components) per degree,
// and the pinned constructions (wheels, struts, tripod, chord words).
#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "jd/diagram.hpp"

namespace jd {

// --- pinned constructions ---------------------------------------------------

inline RoundDiagram theta_diagram()
{
    RoundDiagram d;
    d.legs = 2;
    d.mate = {1, 0};
    return d;
}

// Concatenation of chord words: "AABB..." etc.
inline RoundDiagram chord_power(int k)
{
    std::string s;
    for (int i = 0; i < k; ++i) {
        s.push_back((char)('A' + i));
        s.push_back((char)('A' + i));
    }
    return chord_from_pairs(s);
}

// Single trivalent vertex joined to legs 0,1,2, triple in loop order.
inline RoundDiagram tripod_diagram()
{
    RoundDiagram d;
    d.legs = 3;
    d.vertices = 1;
    d.mate.assign(6, -1);
    for (int i = 0; i < 3; ++i) {
        d.mate[i] = 3 + i;
        d.mate[3 + i] = i;
    }
    return d;
}

// Round wheel with k legs: rim vertex r_i carries spoke to leg i, rim edges
// r_i -> r_{i+1}. Vertex orientation (spoke, next, prev); this convention,
// together with the triangle convention in vogel.hpp, is what the change of
// basis tables pin down.
inline RoundDiagram wheel_round(int k)
{
    if (k < 2)
        throw Error(Error::usage, "wheel needs >= 2 legs");
    RoundDiagram d;
    d.legs = k;
    d.vertices = k;
    d.mate.assign(4 * k, -1);
    auto link = [&](int a, int b) {
        d.mate[a] = b;
        d.mate[b] = a;
    };
    for (int i = 0; i < k; ++i) {
        link(i, d.slot(i, 0));
        link(d.slot(i, 1), d.slot((i + 1) % k, 2));
    }
    return d;
}

inline SymDiagram strut_diagram()
{
    SymDiagram d;
    d.legs = 2;
    d.mate = {1, 0};
    return d;
}

// Symmetrized wheel with k legs, same orientation convention as wheel_round.
inline SymDiagram wheel_sym(int k)
{
    RoundDiagram r = wheel_round(k);
    SymDiagram d;
    d.legs = r.legs;
    d.vertices = r.vertices;
    d.mate = r.mate;
    return d;
}

// --- chord diagram enumeration ----------------------------------------------

// All canonical classes of n-chord diagrams, keys sorted ascending.
inline std::vector<std::string> enumerate_chord_classes(int n)
{
    if (n < 0)
        throw Error(Error::usage, "negative degree");
    std::set<std::string> classes;
    RoundDiagram d;
    d.legs = 2 * n;
    d.mate.assign(2 * n, -1);
    std::function<void()> rec = [&]() {
        int a = -1;
        for (int i = 0; i < 2 * n; ++i)
            if (d.mate[i] < 0) {
                a = i;
                break;
            }
        if (a < 0) {
            classes.insert(canonical_round(d).key);
            return;
        }
        for (int b = a + 1; b < 2 * n; ++b) {
            if (d.mate[b] >= 0)
                continue;
            d.mate[a] = b;
            d.mate[b] = a;
            rec();
            d.mate[a] = -1;
            d.mate[b] = -1;
        }
    };
    rec();
    return std::vector<std::string>(classes.begin(), classes.end());
}

// --- connected unitrivalent graph generation ---------------------------------
//
// Closed trivalent graphs are generated from the two 2-vertex graphs (theta,
// dumbbell) by bridging pairs of edges; graphs with legs are generated by
// splitting an edge and hanging a leg off the new vertex. Zero diagrams
// (equal to minus themselves) are kept as intermediates and only dropped at
// the surface: they can still be ancestors of nonzero graphs.

namespace detail {

struct SymEdge {
    int a, b; // half-edge ids
};

inline std::vector<SymEdge> sym_edges(const SymDiagram& d)
{
    std::vector<SymEdge> out;
    for (int h = 0; h < d.half_edges(); ++h)
        if (d.mate[h] > h)
            out.push_back({h, d.mate[h]});
    return out;
}

// Split edge (a,b) with a fresh trivalent vertex carrying a fresh leg.
// New vertex triple: (to-a, leg, to-b).
inline SymDiagram split_edge_with_leg(const SymDiagram& d, int a, int b)
{
    SymDiagram r;
    r.legs = d.legs + 1;
    r.vertices = d.vertices + 1;
    r.mate.assign(r.half_edges(), -1);
    auto remap = [&](int h) { return h < d.legs ? h : h + 1; };
    for (int h = 0; h < d.half_edges(); ++h)
        r.mate[remap(h)] = remap(d.mate[h]);
    int v = r.vertices - 1;
    int s0 = r.slot(v, 0), s1 = r.slot(v, 1), s2 = r.slot(v, 2);
    int newleg = d.legs;
    auto link = [&](int x, int y) {
        r.mate[x] = y;
        r.mate[y] = x;
    };
    link(remap(a), s0);
    link(newleg, s1);
    link(remap(b), s2);
    return r;
}

// Bridge edges (a1,b1) and (a2,b2) (possibly the same edge) with two fresh
// trivalent vertices joined by a new edge.
inline SymDiagram bridge_edges(const SymDiagram& d, int a1, int b1, int a2, int b2)
{
    SymDiagram r;
    r.legs = d.legs;
    r.vertices = d.vertices + 2;
    r.mate.assign(r.half_edges(), -1);
    for (int h = 0; h < d.half_edges(); ++h)
        r.mate[h] = d.mate[h];
    int u = d.vertices, v = d.vertices + 1;
    auto link = [&](int x, int y) {
        r.mate[x] = y;
        r.mate[y] = x;
    };
    if (a1 == a2 && b1 == b2) {
        // same edge: subdivide twice, a1 - u - v - b1, bridge u-v doubled
        link(a1, r.slot(u, 0));
        link(r.slot(u, 1), r.slot(v, 2));
        link(r.slot(u, 2), r.slot(v, 1));
        link(r.slot(v, 0), b1);
    } else {
        link(a1, r.slot(u, 0));
        link(r.slot(u, 1), b1);
        link(a2, r.slot(v, 0));
        link(r.slot(v, 1), b2);
        link(r.slot(u, 2), r.slot(v, 2));
    }
    return r;
}

} // namespace detail

// Connected trivalent graphs without legs, degree = vertices/2, as canonical
// keys (including self-negative classes; generation intermediates).
inline const std::vector<std::string>& closed_trivalent_classes(int degree)
{
    static std::map<int, std::vector<std::string>> memo;
    auto it = memo.find(degree);
    if (it != memo.end())
        return it->second;
    std::set<std::string> classes;
    if (degree == 1) {
        SymDiagram theta;
        theta.vertices = 2;
        theta.mate = {3, 4, 5, 0, 1, 2};
        classes.insert(canonical_sym_component(theta).key);
        SymDiagram dumbbell; // loops at each vertex (slots 0,1), bridge via slot 2
        dumbbell.vertices = 2;
        dumbbell.mate = {1, 0, 5, 4, 3, 2};
        classes.insert(canonical_sym_component(dumbbell).key);
    } else if (degree >= 2) {
        for (const auto& key : closed_trivalent_classes(degree - 1)) {
            SymDiagram d = decode_sym_component(key);
            auto edges = detail::sym_edges(d);
            for (size_t i = 0; i < edges.size(); ++i)
                for (size_t j = i; j < edges.size(); ++j) {
                    // both pairings of the two edges' half-edge ends
                    auto add = [&](int a1, int b1, int a2, int b2) {
                        SymDiagram g = detail::bridge_edges(d, a1, b1, a2, b2);
                        classes.insert(canonical_sym_component(g).key);
                    };
                    if (i == j)
                        add(edges[i].a, edges[i].b, edges[i].a, edges[i].b);
                    else {
                        add(edges[i].a, edges[i].b, edges[j].a, edges[j].b);
                        add(edges[i].a, edges[i].b, edges[j].b, edges[j].a);
                        add(edges[i].b, edges[i].a, edges[j].a, edges[j].b);
                        add(edges[i].b, edges[i].a, edges[j].b, edges[j].a);
                    }
                }
        }
    }
    return memo.emplace(degree, std::vector<std::string>(classes.begin(), classes.end())).first->second;
}

// Connected unitrivalent graphs of the given degree with exactly `legs` legs
// (canonical keys, self-negative classes included).
inline const std::vector<std::string>& connected_unitrivalent_classes(int degree, int legs)
{
    static std::map<std::pair<int, int>, std::vector<std::string>> memo;
    auto k = std::make_pair(degree, legs);
    auto it = memo.find(k);
    if (it != memo.end())
        return it->second;
    std::set<std::string> classes;
    if (degree >= 1 && legs == 0) {
        for (auto& key : closed_trivalent_classes(degree))
            classes.insert(key);
    } else if (degree == 1 && legs == 2) {
        classes.insert(canonical_sym_component(strut_diagram()).key);
    } else if (degree == 1 && legs == 1) {
        SymDiagram tadpole; // loop at one vertex plus a leg
        tadpole.legs = 1;
        tadpole.vertices = 1;
        tadpole.mate = {1, 0, 3, 2};
        classes.insert(canonical_sym_component(tadpole).key);
    } else if (degree >= 2 && legs >= 1 && legs <= degree + 1) {
        for (const auto& key : connected_unitrivalent_classes(degree - 1, legs - 1)) {
            SymDiagram d = decode_sym_component(key);
            for (auto& e : detail::sym_edges(d)) {
                classes.insert(canonical_sym_component(detail::split_edge_with_leg(d, e.a, e.b)).key);
                classes.insert(canonical_sym_component(detail::split_edge_with_leg(d, e.b, e.a)).key);
            }
        }
    }
    return memo.emplace(k, std::vector<std::string>(classes.begin(), classes.end())).first->second;
}

// All canonical classes of symmetrized diagrams (possibly disconnected, each
// component with >= 1 leg) of the given degree with at most max_legs legs.
// Classes that are their own negative are dropped.
inline std::vector<std::string> enumerate_symmetrized(int degree, int max_legs)
{
    if (degree < 1)
        throw Error(Error::usage, "enumerate_symmetrized needs degree >= 1");
    // connected nonzero classes per degree, with leg counts
    struct Part {
        std::string key;
        int degree, legs;
    };
    std::vector<Part> parts;
    for (int d = 1; d <= degree; ++d)
        for (int u = 1; u <= std::min(d + 1, max_legs); ++u)
            for (auto& key : connected_unitrivalent_classes(d, u)) {
                SymDiagram g = decode_sym_component(key);
                if (!canonical_sym_component(g).zero)
                    parts.push_back({key, d, u});
            }
    std::set<std::string> out;
    // multisets of parts with total degree = degree, total legs <= max_legs
    std::function<void(size_t, int, int, std::vector<std::string>&)> rec =
        [&](size_t i, int deg_left, int legs_left, std::vector<std::string>& acc) {
            if (deg_left == 0) {
                SymDiagram whole;
                for (auto& key : acc)
                    whole = sym_union(whole, decode_sym_component(key));
                Canon c = canonical_sym(whole);
                if (!c.zero)
                    out.insert(c.key);
                return;
            }
            if (i >= parts.size())
                return;
            rec(i + 1, deg_left, legs_left, acc);
            if (parts[i].degree <= deg_left && parts[i].legs <= legs_left) {
                acc.push_back(parts[i].key);
                rec(i, deg_left - parts[i].degree, legs_left - parts[i].legs, acc);
                acc.pop_back();
            }
        };
    std::vector<std::string> acc;
    rec(0, degree, max_legs, acc);
    return std::vector<std::string>(out.begin(), out.end());
}

} // namespace jd
