// Round (Wilson-loop) and symmetrized (free-leg) trivalent diagrams with
// cyclically oriented vertices, and their sign-correct canonical forms.
//
// Half-edge numbering: legs are half-edges 0..legs-1; internal vertex j owns
// half-edges legs + 3j + s for slot s in {0,1,2}, the stored slot order being
// the cyclic orientation of the vertex. `mate` is a fixed-point-free
// involution pairing all half-edges.
//
// Equality of generators quotients by: relabelling internal vertices,
// cyclic rotation of each vertex triple (sign +1), reversal of a vertex
// triple (sign -1), plus orientation-preserving rotation of the Wilson loop
// (round) or arbitrary leg interchange (symmetrized). canonical_* searches
// that whole groupoid; a diagram equal to minus itself comes back flagged
// zero.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "jd/rational.hpp"

namespace jd {

struct RoundDiagram {
    int legs = 0;
    int vertices = 0;
    std::vector<int> mate; // size legs + 3*vertices

    int half_edges() const { return legs + 3 * vertices; }
    bool is_leg(int h) const { return h < legs; }
    int vertex_of(int h) const { return (h - legs) / 3; }
    int slot_of(int h) const { return (h - legs) % 3; }
    int slot(int v, int s) const { return legs + 3 * v + s; }
    int degree() const { return (legs + vertices) / 2; }
    bool operator==(const RoundDiagram&) const = default;
};

// Same storage; legs carry no cyclic order and may be permuted freely.
// May be disconnected (every component must keep at least one leg to be a
// valid symmetrized diagram; 0-leg graphs appear only as generation
// intermediates).
struct SymDiagram {
    int legs = 0;
    int vertices = 0;
    std::vector<int> mate;

    int half_edges() const { return legs + 3 * vertices; }
    bool is_leg(int h) const { return h < legs; }
    int vertex_of(int h) const { return (h - legs) / 3; }
    int slot_of(int h) const { return (h - legs) % 3; }
    int slot(int v, int s) const { return legs + 3 * v + s; }
    int degree() const { return (legs + vertices) / 2; }
    bool operator==(const SymDiagram&) const = default;
};

struct Canon {
    std::string key; // minimal encoding; lexicographic order is meaningful
    int sign = 1;    // input = sign * decode(key), unless zero
    bool zero = false;
};

namespace detail {

inline void check_involution(int n, const std::vector<int>& mate, const char* what)
{
    if ((int)mate.size() != n)
        throw Error(Error::structural, std::string(what) + ": mate size mismatch");
    for (int h = 0; h < n; ++h) {
        int m = mate[h];
        if (m < 0 || m >= n || m == h || mate[m] != h)
            throw Error(Error::structural, std::string(what) + ": mate is not a fixed-point-free involution");
    }
}

// Connected components over legs+vertices (vertex slots identified).
inline int component_count(int legs, int vertices, const std::vector<int>& mate,
                           std::vector<int>* comp_out = nullptr)
{
    int n = legs + vertices;
    std::vector<int> comp(n, -1);
    auto node_of = [&](int h) { return h < legs ? h : legs + (h - legs) / 3; };
    int ncomp = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0)
            continue;
        std::vector<int> stack{start};
        comp[start] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::vector<int> hs;
            if (u < legs)
                hs = {u};
            else
                hs = {legs + 3 * (u - legs), legs + 3 * (u - legs) + 1, legs + 3 * (u - legs) + 2};
            for (int h : hs) {
                int v = node_of(mate[h]);
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    if (comp_out)
        *comp_out = comp;
    return ncomp;
}

} // namespace detail

inline void validate(const RoundDiagram& d)
{
    if (d.legs < 0 || d.vertices < 0)
        throw Error(Error::structural, "round diagram: negative counts");
    if ((d.legs + d.vertices) % 2)
        throw Error(Error::structural, "round diagram: odd total vertex count");
    detail::check_involution(d.half_edges(), d.mate, "round diagram");
    if (d.vertices > 0 && d.legs == 0)
        throw Error(Error::structural, "round diagram: internal graph cannot touch the loop");
    // The Wilson loop links all legs into one node, so connectivity of the
    // diagram = connectivity of (merged legs) + vertices.
    if (d.vertices > 0) {
        std::vector<int> m = d.mate;
        // Re-route leg half-edges through a single node: treat all legs as leg 0.
        // Simpler: count components, then check every vertex lies in a component
        // containing at least one leg.
        std::vector<int> comp;
        detail::component_count(d.legs, d.vertices, d.mate, &comp);
        std::vector<char> has_leg(d.legs + d.vertices, 0);
        for (int i = 0; i < d.legs; ++i)
            has_leg[comp[i]] = 1;
        for (int v = 0; v < d.vertices; ++v)
            if (!has_leg[comp[d.legs + v]])
                throw Error(Error::structural, "round diagram: internal component not attached to the loop");
    }
}

inline void validate(const SymDiagram& d, bool require_legs = true)
{
    if ((d.legs + d.vertices) % 2)
        throw Error(Error::structural, "symmetrized diagram: odd total vertex count");
    detail::check_involution(d.half_edges(), d.mate, "symmetrized diagram");
    if (require_legs) {
        std::vector<int> comp;
        int n = detail::component_count(d.legs, d.vertices, d.mate, &comp);
        std::vector<char> has_leg(n, 0);
        for (int i = 0; i < d.legs; ++i)
            has_leg[comp[i]] = 1;
        for (int c = 0; c < n; ++c)
            if (!has_leg[c])
                throw Error(Error::structural, "symmetrized diagram: component without a leg");
    }
}

namespace detail {

// Shared candidate-stream search. A candidate emission is determined by a
// start choice plus, per internal vertex, the orientation branch taken when
// the vertex is first referenced (keep cyclic order: +1, reversed: -1).
// The minimal stream over all candidates is the canonical key; collecting
// both signs for the minimum means the diagram is its own negative.
struct CanonSearch {
    int legs, vertices;
    const std::vector<int>* mate;
    bool round; // round: leg i emitted in rotated order; sym: legs get ids on reference

    std::string best;
    bool have_best = false;
    std::vector<int> best_signs;

    // per-candidate state
    int rot = 0;                 // round only
    std::vector<int> vid, ventry, vflip, vorder; // vertex -> id / entry slot / flip / id -> vertex
    std::vector<int> lid, lorder;                // sym only: leg -> id / id -> leg
    int next_vid = 0, next_lid = 0;
    std::string cur;
    int cur_sign = 1;

    int total() const { return legs + 3 * vertices; }

    void reset_candidate()
    {
        vid.assign(vertices, -1);
        ventry.assign(vertices, 0);
        vflip.assign(vertices, 0);
        vorder.assign(vertices, -1);
        lid.assign(legs, -1);
        lorder.assign(legs, -1);
        next_vid = 0;
        next_lid = 0;
        cur.clear();
        cur_sign = 1;
    }

    // stream code of a referenced half-edge; assigns ids lazily.
    // Returns -1 if the referenced vertex is new (caller must branch first).
    int new_vertex_pending = -1;
    int code_of(int h)
    {
        if (h < legs) {
            if (round)
                return ((h - rot) % legs + legs) % legs;
            if (lid[h] < 0) {
                lid[h] = next_lid;
                lorder[next_lid++] = h;
            }
            return lid[h];
        }
        int v = (h - legs) / 3, s = (h - legs) % 3;
        if (vid[v] < 0) {
            new_vertex_pending = h;
            return -1;
        }
        int e = ventry[v];
        int idx;
        if (!vflip[v])
            idx = ((s - e) % 3 + 3) % 3;
        else
            idx = ((e - s) % 3 + 3) % 3; // order (e, e+2, e+1)
        return legs + 3 * vid[v] + idx;
    }

    void assign_vertex(int h, int flip)
    {
        int v = (h - legs) / 3, s = (h - legs) % 3;
        vid[v] = next_vid;
        vorder[next_vid++] = v;
        ventry[v] = s;
        vflip[v] = flip;
        if (flip)
            cur_sign = -cur_sign;
    }

    // Emit stream position p; return false to prune.
    // cmp: -1 cur < best so far (strictly better), 0 equal prefix.
    bool emit(int value, int& cmp)
    {
        if (cmp == 0 && have_best) {
            char b = best[cur.size()];
            if ((char)value > b)
                return false;
            if ((char)value < b)
                cmp = -1;
        }
        cur.push_back((char)value);
        return true;
    }

    // The half-edge whose mate is emitted at stream position p (after the
    // 2-byte header), under the current labelling. Round: legs in rotated
    // order then assigned vertices; sym: start leg then assigned vertices.
    int source_at(size_t p)
    {
        if (round) {
            if ((int)p < legs)
                return (int)(p + rot) % legs;
            int k = ((int)p - legs) / 3, j = ((int)p - legs) % 3;
            int v = vorder[k];
            int e = ventry[v];
            int s;
            if (!vflip[v])
                s = (e + j) % 3;
            else
                s = (e + (j == 1 ? 2 : (j == 2 ? 1 : 0))) % 3;
            return legs + 3 * v + s;
        }
        if (legs > 0 && p == 0)
            return lorder[0];
        int off = legs > 0 ? 1 : 0;
        int k = ((int)p - off) / 3, j = ((int)p - off) % 3;
        int v = vorder[k];
        int e = ventry[v];
        int s;
        if (!vflip[v])
            s = (e + j) % 3;
        else
            s = (e + (j == 1 ? 2 : (j == 2 ? 1 : 0))) % 3;
        return legs + 3 * v + s;
    }

    size_t stream_len() const { return round ? (size_t)total() : (size_t)(legs ? 1 + 3 * vertices : 3 * vertices); }

    void dfs(size_t p, int cmp)
    {
        if (p == stream_len()) {
            // cmp tracks comparison against a possibly stale best (pruning is
            // still sound since best only ever decreases); settle ties here.
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
                best_signs = {cur_sign};
            } else if (cur == best) {
                bool seen = false;
                for (int s : best_signs)
                    seen |= (s == cur_sign);
                if (!seen)
                    best_signs.push_back(cur_sign);
            }
            return;
        }
        int src = source_at(p);
        int m = (*mate)[src];
        new_vertex_pending = -1;
        // snapshot of all lazily-assigned candidate state
        struct Snap {
            std::vector<int> vid, ventry, vflip, vorder, lid, lorder;
            int next_vid, next_lid, cur_sign;
            size_t cur_len;
        };
        Snap snap{vid, ventry, vflip, vorder, lid, lorder, next_vid, next_lid, cur_sign, cur.size()};
        auto restore = [&] {
            vid = snap.vid;
            ventry = snap.ventry;
            vflip = snap.vflip;
            vorder = snap.vorder;
            lid = snap.lid;
            lorder = snap.lorder;
            next_vid = snap.next_vid;
            next_lid = snap.next_lid;
            cur_sign = snap.cur_sign;
            cur.resize(snap.cur_len);
        };
        int code = code_of(m);
        if (code >= 0) {
            int c2 = cmp;
            if (emit(code, c2))
                dfs(p + 1, c2);
            restore();
        } else {
            int h = new_vertex_pending;
            for (int flip = 0; flip < 2; ++flip) {
                assign_vertex(h, flip);
                int c2 = cmp;
                if (emit(legs + 3 * (next_vid - 1) + 0, c2))
                    dfs(p + 1, c2);
                restore();
            }
        }
    }
};

inline std::string canon_header(int legs, int vertices)
{
    std::string h;
    h.push_back((char)legs);
    h.push_back((char)vertices);
    return h;
}

} // namespace detail

// Canonical form of a round diagram. Chord diagrams (no internal vertices)
// take the fast path: minimum over loop rotations, sign always +1.
inline Canon canonical_round(const RoundDiagram& d)
{
    validate(d);
    int L = d.legs, V = d.vertices;
    if (V == 0) {
        std::string best;
        for (int r = 0; r < std::max(L, 1); ++r) {
            std::string s;
            s.reserve(L);
            for (int i = 0; i < L; ++i)
                s.push_back((char)(((d.mate[(i + r) % L] - r) % L + L) % L));
            if (r == 0 || s < best)
                best = s;
        }
        return Canon{detail::canon_header(L, 0) + best, 1, false};
    }
    detail::CanonSearch cs;
    cs.legs = L;
    cs.vertices = V;
    cs.mate = &d.mate;
    cs.round = true;
    for (int r = 0; r < L; ++r) {
        cs.rot = r;
        cs.reset_candidate();
        cs.dfs(0, cs.have_best ? 0 : -1);
    }
    bool zero = cs.best_signs.size() > 1;
    return Canon{detail::canon_header(L, V) + cs.best, zero ? 1 : cs.best_signs[0], zero};
}

inline RoundDiagram decode_round(const std::string& key)
{
    if (key.size() < 2)
        throw Error(Error::internal, "bad round key");
    RoundDiagram d;
    d.legs = (unsigned char)key[0];
    d.vertices = (unsigned char)key[1];
    int n = d.half_edges();
    if ((int)key.size() != 2 + n)
        throw Error(Error::internal, "bad round key length");
    d.mate.assign(n, -1);
    for (int h = 0; h < n; ++h)
        d.mate[h] = (unsigned char)key[2 + h];
    validate(d);
    return d;
}

// Canonical form of one connected symmetrized component.
inline Canon canonical_sym_component(const SymDiagram& d)
{
    int L = d.legs, V = d.vertices;
    if (V == 0) {
        // connected with no vertices: must be the strut
        if (L != 2)
            throw Error(Error::structural, "vertexless component that is not a strut");
        std::string k = detail::canon_header(2, 0);
        k.push_back((char)1);
        return Canon{k, 1, false};
    }
    detail::CanonSearch cs;
    cs.legs = L;
    cs.vertices = V;
    cs.mate = &d.mate;
    cs.round = false;
    if (L > 0) {
        for (int start = 0; start < L; ++start) {
            cs.reset_candidate();
            cs.lid[start] = 0;
            cs.lorder[0] = start;
            cs.next_lid = 1;
            cs.dfs(0, cs.have_best ? 0 : -1);
        }
    } else {
        for (int v = 0; v < V; ++v)
            for (int s = 0; s < 3; ++s)
                for (int flip = 0; flip < 2; ++flip) {
                    cs.reset_candidate();
                    cs.vid[v] = 0;
                    cs.vorder[0] = v;
                    cs.ventry[v] = s;
                    cs.vflip[v] = flip;
                    cs.next_vid = 1;
                    if (flip)
                        cs.cur_sign = -1;
                    cs.dfs(0, cs.have_best ? 0 : -1);
                }
    }
    bool zero = cs.best_signs.size() > 1;
    return Canon{detail::canon_header(L, V) + cs.best, zero ? 1 : cs.best_signs[0], zero};
}

inline std::vector<SymDiagram> sym_components(const SymDiagram& d)
{
    std::vector<int> comp;
    int n = detail::component_count(d.legs, d.vertices, d.mate, &comp);
    std::vector<SymDiagram> out(n);
    std::vector<std::vector<int>> legmap(n), vmap(n);
    std::vector<int> lback(d.legs), vback(d.vertices);
    for (int i = 0; i < d.legs; ++i) {
        lback[i] = (int)legmap[comp[i]].size();
        legmap[comp[i]].push_back(i);
    }
    for (int v = 0; v < d.vertices; ++v) {
        vback[v] = (int)vmap[comp[d.legs + v]].size();
        vmap[comp[d.legs + v]].push_back(v);
    }
    for (int c = 0; c < n; ++c) {
        out[c].legs = (int)legmap[c].size();
        out[c].vertices = (int)vmap[c].size();
        out[c].mate.assign(out[c].half_edges(), -1);
    }
    auto local = [&](int h) {
        int c = h < d.legs ? comp[h] : comp[d.legs + (h - d.legs) / 3];
        int lh = h < d.legs ? lback[h] : out[c].legs + 3 * vback[(h - d.legs) / 3] + (h - d.legs) % 3;
        return std::pair<int, int>(c, lh);
    };
    for (int h = 0; h < d.half_edges(); ++h) {
        auto [c, lh] = local(h);
        out[c].mate[lh] = local(d.mate[h]).second;
    }
    return out;
}

// Canonical form of a whole symmetrized diagram: canonical components,
// sorted (component interchange carries no sign), joined with a separator.
inline Canon canonical_sym(const SymDiagram& d, bool require_legs = true)
{
    validate(d, require_legs);
    auto comps = sym_components(d);
    std::vector<std::string> keys;
    int sign = 1;
    for (auto& c : comps) {
        Canon cc = canonical_sym_component(c);
        if (cc.zero)
            return Canon{std::string(), 1, true};
        sign *= cc.sign;
        keys.push_back(cc.key);
    }
    std::sort(keys.begin(), keys.end());
    std::string key;
    key.push_back((char)127);
    for (auto& k : keys) {
        key += k;
        key.push_back((char)127);
    }
    return Canon{key, sign, false};
}

inline SymDiagram decode_sym_component(const std::string& key)
{
    SymDiagram d;
    d.legs = (unsigned char)key[0];
    d.vertices = (unsigned char)key[1];
    d.mate.assign(d.half_edges(), -1);
    size_t pos = 2;
    auto link = [&](int a, int b) {
        d.mate[a] = b;
        d.mate[b] = a;
    };
    if (d.legs > 0) {
        link(0, (unsigned char)key[pos++]);
        for (int k = 0; k < d.vertices; ++k)
            for (int j = 0; j < 3; ++j)
                link(d.legs + 3 * k + j, (unsigned char)key[pos++]);
    } else {
        for (int k = 0; k < d.vertices; ++k)
            for (int j = 0; j < 3; ++j)
                link(3 * k + j, (unsigned char)key[pos++]);
    }
    validate(d, false);
    return d;
}

inline SymDiagram decode_sym(const std::string& key)
{
    // key = 127 (comp 127)*
    std::vector<SymDiagram> comps;
    size_t pos = 1;
    while (pos < key.size()) {
        int L = (unsigned char)key[pos];
        int V = (unsigned char)key[pos + 1];
        size_t len = 2 + (L > 0 ? (size_t)(1 + 3 * V) : (size_t)(3 * V));
        comps.push_back(decode_sym_component(key.substr(pos, len)));
        pos += len + 1;
    }
    SymDiagram d;
    for (auto& c : comps) {
        d.legs += c.legs;
        d.vertices += c.vertices;
    }
    d.mate.assign(d.half_edges(), -1);
    int legoff = 0, voff = 0;
    for (auto& c : comps) {
        auto globalh = [&](int h) {
            return h < c.legs ? legoff + h : d.legs + 3 * voff + (h - c.legs);
        };
        for (int h = 0; h < c.half_edges(); ++h)
            d.mate[globalh(h)] = globalh(c.mate[h]);
        legoff += c.legs;
        voff += c.vertices;
    }
    return d;
}

// Disjoint union of symmetrized diagrams (graph level).
inline SymDiagram sym_union(const SymDiagram& a, const SymDiagram& b)
{
    SymDiagram d;
    d.legs = a.legs + b.legs;
    d.vertices = a.vertices + b.vertices;
    d.mate.assign(d.half_edges(), -1);
    auto ga = [&](int h) { return h < a.legs ? h : d.legs + (h - a.legs); };
    auto gb = [&](int h) { return h < b.legs ? a.legs + h : d.legs + 3 * a.vertices + (h - b.legs); };
    for (int h = 0; h < a.half_edges(); ++h)
        d.mate[ga(h)] = ga(a.mate[h]);
    for (int h = 0; h < b.half_edges(); ++h)
        d.mate[gb(h)] = gb(b.mate[h]);
    return d;
}

// Legs re-listed in the reversed cyclic order; internal graph untouched.
inline RoundDiagram reverse_wilson(const RoundDiagram& d)
{
    RoundDiagram r = d;
    auto newh = [&](int h) { return h < d.legs ? d.legs - 1 - h : h; };
    for (int h = 0; h < d.half_edges(); ++h)
        r.mate[newh(h)] = newh(d.mate[h]);
    return r;
}

// --- chord diagram helpers ------------------------------------------------

inline bool is_chord_key(const std::string& key) { return key.size() >= 2 && key[1] == 0; }

// Balanced-pairs text form ("ABAB" = crossed two chords).
inline std::string pairs_string(const std::string& chord_key)
{
    RoundDiagram d = decode_round(chord_key);
    if (d.vertices != 0)
        throw Error(Error::usage, "pairs_string needs a chord diagram");
    std::string out(d.legs, '?');
    char next = 'A';
    for (int i = 0; i < d.legs; ++i) {
        if (out[i] != '?')
            continue;
        out[i] = next;
        out[d.mate[i]] = next;
        ++next;
    }
    return out;
}

inline RoundDiagram chord_from_pairs(const std::string& s)
{
    RoundDiagram d;
    d.legs = (int)s.size();
    d.mate.assign(d.legs, -1);
    for (int i = 0; i < d.legs; ++i) {
        if (d.mate[i] >= 0)
            continue;
        int j = -1;
        for (int k = i + 1; k < d.legs; ++k)
            if (s[k] == s[i]) {
                if (j >= 0)
                    throw Error(Error::usage, "letter appears more than twice: " + s);
                j = k;
            }
        if (j < 0)
            throw Error(Error::usage, "unpaired letter in \"" + s + "\"");
        d.mate[i] = j;
        d.mate[j] = i;
    }
    validate(d);
    return d;
}

// chord {a, mate a} is isolated if no other chord has exactly one endpoint
// strictly between a and mate(a).
inline bool has_isolated_chord(const RoundDiagram& d)
{
    for (int a = 0; a < d.legs; ++a) {
        int b = d.mate[a];
        if (b < a)
            continue;
        bool isolated = true;
        for (int x = a + 1; x < b && isolated; ++x) {
            int y = d.mate[x];
            if (y < a || y > b)
                isolated = false;
        }
        if (isolated)
            return true;
    }
    return false;
}

} // namespace jd
