// Vogel-diagram insertion (the triangle element t) on connected diagrams,
// and the pinned diagram constructions built from it.
#pragma once

#include <array>

#include "jd/enumerate.hpp"

namespace jd {

// Unitrivalent graph with exactly three legs labelled 1,2,3 (stored in leg[]).
struct VogelDiagram {
    SymDiagram graph;
    std::array<int, 3> leg{};

    int degree() const { return (graph.vertices - 1) / 2; }
};

// t: the triangle, one leg per vertex. Vertex orientation (leg, next, prev)
// around the cycle a -> b -> c, the same convention as the wheels.
inline VogelDiagram triangle_t()
{
    VogelDiagram v;
    v.graph.legs = 3;
    v.graph.vertices = 3;
    v.graph.mate.assign(12, -1);
    auto link = [&](int a, int b) {
        v.graph.mate[a] = b;
        v.graph.mate[b] = a;
    };
    for (int i = 0; i < 3; ++i) {
        link(i, v.graph.slot(i, 0));
        link(v.graph.slot(i, 1), v.graph.slot((i + 1) % 3, 2));
    }
    v.leg = {0, 1, 2};
    return v;
}

namespace detail {

// Splice the Vogel graph in place of internal vertex `vtx` of a diagram given
// by (legs, vertices, mate); legs 1,2,3 of v are matched to the vertex slots
// in cyclic correspondence. Returns the new mate array and vertex count.
template <typename D>
D insert_vogel_impl(const VogelDiagram& v, const D& d, int vtx)
{
    if (vtx < 0 || vtx >= d.vertices)
        throw Error(Error::usage, "insert: no such internal vertex");
    D r;
    r.legs = d.legs;
    r.vertices = d.vertices - 1 + v.graph.vertices;
    r.mate.assign(r.legs + 3 * r.vertices, -1);
    // host half-edges keep their ids except vtx's slots vanish and vertices
    // above vtx shift down; vogel vertices append at the end.
    auto host = [&](int h) -> int {
        if (h < d.legs)
            return h;
        int w = (h - d.legs) / 3, s = (h - d.legs) % 3;
        if (w == vtx)
            return -1;
        return r.legs + 3 * (w < vtx ? w : w - 1) + s;
    };
    int base = d.vertices - 1; // first vogel vertex index in r
    auto vog = [&](int h) -> int {
        // vogel trivalent slots only (legs of v are consumed)
        int w = (h - v.graph.legs) / 3, s = (h - v.graph.legs) % 3;
        return r.legs + 3 * (base + w) + s;
    };
    auto link = [&](int a, int b) {
        r.mate[a] = b;
        r.mate[b] = a;
    };
    // vogel-internal edges
    for (int h = v.graph.legs; h < v.graph.half_edges(); ++h) {
        int m = v.graph.mate[h];
        if (m < v.graph.legs)
            continue; // handled below via splice
        if (m > h)
            link(vog(h), vog(m));
    }
    // splice: edge arriving at host slot(vtx, i) now ends at the vogel slot
    // that leg i+1 of v was attached to.
    std::array<int, 3> port{};
    for (int i = 0; i < 3; ++i)
        port[i] = vog(v.graph.mate[v.leg[i]]);
    std::array<int, 3> far{};
    for (int i = 0; i < 3; ++i)
        far[i] = d.mate[d.legs + 3 * vtx + i];
    for (int i = 0; i < 3; ++i) {
        int t = far[i];
        if (t >= d.legs && (t - d.legs) / 3 == vtx) {
            // self-loop at vtx: connect the two ports directly (once)
            int j = (t - d.legs) % 3;
            if (i < j)
                link(port[i], port[j]);
        } else {
            link(host(t), port[i]);
        }
    }
    // remaining host edges
    for (int h = 0; h < (int)d.mate.size(); ++h) {
        int nh = host(h);
        if (nh < 0 || r.mate[nh] >= 0)
            continue;
        int nm = host(d.mate[h]);
        link(nh, nm);
    }
    return r;
}

} // namespace detail

inline RoundDiagram insert_vogel(const VogelDiagram& v, const RoundDiagram& d, int vtx)
{
    if (d.vertices == 0)
        throw Error(Error::usage, "insert: chord diagram has no internal vertex");
    RoundDiagram r = detail::insert_vogel_impl(v, d, vtx);
    validate(r);
    return r;
}

inline SymDiagram insert_vogel(const VogelDiagram& v, const SymDiagram& d, int vtx)
{
    if (d.vertices == 0)
        throw Error(Error::usage, "insert: no internal vertex");
    SymDiagram r = detail::insert_vogel_impl(v, d, vtx);
    validate(r, false);
    return r;
}

// --- pinned diagram constructions ------------------------------------------

// connect sum of chord/round diagrams as diagrams: cut each loop before leg 0
// and concatenate.
inline RoundDiagram round_concat(const RoundDiagram& a, const RoundDiagram& b)
{
    RoundDiagram r;
    r.legs = a.legs + b.legs;
    r.vertices = a.vertices + b.vertices;
    r.mate.assign(r.half_edges(), -1);
    auto ra = [&](int h) { return h < a.legs ? h : r.legs + (h - a.legs); };
    auto rb = [&](int h) { return h < b.legs ? a.legs + h : r.legs + 3 * a.vertices + (h - b.legs); };
    for (int h = 0; h < a.half_edges(); ++h)
        r.mate[ra(h)] = ra(a.mate[h]);
    for (int h = 0; h < b.half_edges(); ++h)
        r.mate[rb(h)] = rb(b.mate[h]);
    return r;
}

// t^j applied to the round wheel with k legs; each insertion goes to internal
// vertex 0 of the current diagram (any choice agrees in the quotient).
inline RoundDiagram t_power_wheel(int j, int k)
{
    RoundDiagram d = wheel_round(k);
    for (int i = 0; i < j; ++i)
        d = insert_vogel(triangle_t(), d, 0);
    return d;
}

inline SymDiagram t_power_wheel_sym(int j, int k)
{
    SymDiagram d = wheel_sym(k);
    for (int i = 0; i < j; ++i)
        d = insert_vogel(triangle_t(), d, 0);
    return d;
}

} // namespace jd
