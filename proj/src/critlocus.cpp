#include "tropmirror/critlocus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace tropmirror {

ModificationSpec ModificationSpec::dirs(std::vector<ExponentVector> d) {
    for (auto& v : d)
        if (!is_primitive(v))
            throw Error(ErrorKind::ValidationError,
                        "deletion direction " + vec_str(v) + " is not primitive");
    return {Kind::Directions, std::move(d)};
}

int ReducedGraph::live_vertex_count() const {
    int c = 0;
    for (const auto& v : vertices) c += v.alive ? 1 : 0;
    return c;
}

int ReducedGraph::live_edge_count() const {
    int c = 0;
    for (const auto& e : edges) c += (e.alive && e.bounded) ? 1 : 0;
    return c;
}

int ReducedGraph::live_ray_count() const {
    int c = 0;
    for (const auto& e : edges) c += (e.alive && !e.bounded) ? 1 : 0;
    return c;
}

int ReducedGraph::valence(int v) const {
    int c = 0;
    for (const auto& e : edges) {
        if (!e.alive) continue;
        if (e.v0 == v) ++c;
        if (e.bounded && e.v1 == v) ++c;
    }
    return c;
}

int ReducedGraph::first_betti() const {
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int eb = 0;
    for (const auto& e : edges) {
        if (!e.alive || !e.bounded) continue;
        ++eb;
        parent[find(e.v0)] = find(e.v1);
    }
    std::set<int> roots;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].alive) roots.insert(find(static_cast<int>(i)));
    return eb - live_vertex_count() + static_cast<int>(roots.size());
}

namespace {

bool direction_matches(const ModificationSpec& spec, const ExponentVector& d) {
    switch (spec.kind) {
        case ModificationSpec::Kind::All: return true;
        case ModificationSpec::Kind::Empty: return false;
        case ModificationSpec::Kind::Directions:
            return std::find(spec.directions.begin(), spec.directions.end(), d) !=
                   spec.directions.end();
    }
    return false;
}

// Indices of live edges incident to v.
std::vector<int> incident(const ReducedGraph& rg, int v) {
    std::vector<int> out;
    for (size_t i = 0; i < rg.edges.size(); ++i) {
        const auto& e = rg.edges[i];
        if (!e.alive) continue;
        if (e.v0 == v || (e.bounded && e.v1 == v)) out.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace

ReducedGraph modify(const TropicalCurveGraph& g, const ModificationSpec& spec) {
    ReducedGraph rg;
    for (const auto& v : g.vertices) rg.vertices.push_back({v.point, true});
    for (const auto& e : g.edges) {
        ReducedGraph::Edge re;
        re.v0 = e.v0;
        re.v1 = e.v1;
        re.ray_dir = e.ray_dir;
        re.bounded = e.bounded;
        re.merged_segments = 1;
        if (!e.bounded && direction_matches(spec, e.ray_dir)) {
            re.alive = false;
            ++rg.deleted_rays;
        }
        rg.edges.push_back(std::move(re));
    }

    // Reduce to a fixed point. Collapsing removes a leaf vertex with its
    // bounded edge; merging joins the two items at a bivalent vertex.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t v = 0; v < rg.vertices.size() && !changed; ++v) {
            if (!rg.vertices[v].alive) continue;
            std::vector<int> inc = incident(rg, static_cast<int>(v));
            if (inc.size() == 1) {
                ReducedGraph::Edge& e = rg.edges[inc[0]];
                if (e.bounded && e.v0 != e.v1) {
                    e.alive = false;
                    rg.vertices[v].alive = false;
                    changed = true;
                }
                // A lone ray keeps its anchor vertex; a self-loop is a cycle.
            } else if (inc.size() == 2) {
                ReducedGraph::Edge& e1 = rg.edges[inc[0]];
                ReducedGraph::Edge& e2 = rg.edges[inc[1]];
                auto other = [&](const ReducedGraph::Edge& e) {
                    return e.v0 == static_cast<int>(v) ? e.v1 : e.v0;
                };
                if (e1.bounded && e2.bounded) {
                    if (e1.v0 == e1.v1 || e2.v0 == e2.v1) continue;  // loop: leave to cycle flagging
                    int a = other(e1), b = other(e2);
                    if (a == static_cast<int>(v) || b == static_cast<int>(v)) continue;
                    if (a == b && rg.valence(a) == 2) continue;  // two-vertex cycle: pure cycle
                    ReducedGraph::Edge merged;
                    merged.v0 = a;
                    merged.v1 = b;
                    merged.bounded = true;
                    merged.merged_segments = e1.merged_segments + e2.merged_segments;
                    e1.alive = e2.alive = false;
                    rg.vertices[v].alive = false;
                    rg.edges.push_back(std::move(merged));
                    changed = true;
                } else if (e1.bounded != e2.bounded) {
                    // ray + edge: extend the ray to start at the far endpoint
                    ReducedGraph::Edge& ray = e1.bounded ? e2 : e1;
                    ReducedGraph::Edge& seg = e1.bounded ? e1 : e2;
                    if (seg.v0 == seg.v1) continue;
                    int a = other(seg);
                    if (a == static_cast<int>(v)) continue;
                    ReducedGraph::Edge merged;
                    merged.v0 = a;
                    merged.v1 = -1;
                    merged.bounded = false;
                    merged.ray_dir = ray.ray_dir;
                    merged.merged_segments = ray.merged_segments + seg.merged_segments;
                    ray.alive = seg.alive = false;
                    rg.vertices[v].alive = false;
                    rg.edges.push_back(std::move(merged));
                    changed = true;
                }
                // two rays at a bivalent vertex: a straight line, flagged below
            }
        }
    }

    // Flag pure cycles (components where every vertex is bivalent with
    // bounded edges) and two-ray line junctions.
    std::vector<char> seen(rg.vertices.size(), 0);
    for (size_t v = 0; v < rg.vertices.size(); ++v) {
        if (!rg.vertices[v].alive || seen[v]) continue;
        // walk the component
        std::vector<int> stack{static_cast<int>(v)}, comp;
        seen[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int ei : incident(rg, x)) {
                const auto& e = rg.edges[ei];
                if (!e.bounded) continue;
                int y = e.v0 == x ? e.v1 : e.v0;
                if (y >= 0 && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        bool cycle = !comp.empty();
        for (int x : comp) {
            if (rg.valence(x) != 2) cycle = false;
            for (int ei : incident(rg, x))
                if (!rg.edges[ei].bounded) cycle = false;
        }
        if (cycle) {
            std::sort(comp.begin(), comp.end());
            rg.pure_cycle_components.push_back(comp);
        }
    }
    for (size_t v = 0; v < rg.vertices.size(); ++v) {
        if (!rg.vertices[v].alive) continue;
        std::vector<int> inc = incident(rg, static_cast<int>(v));
        if (inc.size() == 2 && !rg.edges[inc[0]].bounded && !rg.edges[inc[1]].bounded)
            rg.pure_line_vertices.push_back(static_cast<int>(v));
    }
    return rg;
}

CountCheckReport count_check(const ReducedGraph& rg) {
    CountCheckReport rep;
    rep.pure_cycle = !rg.pure_cycle_components.empty();
    if (rg.live_ray_count() > 0)
        throw Error(ErrorKind::NotClosedTrivalent, "reduced graph still has unbounded edges");

    // Pure cycles are smooth components: excluded from the trivalent count
    // formulas (componentwise handling).
    std::set<int> excluded;
    for (const auto& comp : rg.pure_cycle_components) excluded.insert(comp.begin(), comp.end());

    std::vector<int> verts;
    for (size_t v = 0; v < rg.vertices.size(); ++v)
        if (rg.vertices[v].alive && !excluded.count(static_cast<int>(v)))
            verts.push_back(static_cast<int>(v));
    if (verts.empty()) {
        rep.vertices = rg.live_vertex_count();
        rep.edges = rg.live_edge_count();
        rep.genus = rg.first_betti();
        rep.passed = rep.pure_cycle;
        rep.detail = rep.pure_cycle
                         ? "pure cycle (smooth component); E/V assertion does not apply"
                         : "empty reduced graph";
        if (!rep.pure_cycle) throw Error(ErrorKind::NotClosedTrivalent, rep.detail);
        return rep;
    }
    for (int v : verts)
        if (rg.valence(v) != 3)
            throw Error(ErrorKind::NotClosedTrivalent,
                        "vertex of valence " + std::to_string(rg.valence(v)));
    // Counts and Betti number of the trivalent part.
    std::map<int, int> pos;
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int eb = 0;
    for (const auto& e : rg.edges) {
        if (!e.alive || !e.bounded) continue;
        if (!pos.count(e.v0) || !pos.count(e.v1)) continue;
        ++eb;
        parent[find(pos[e.v0])] = find(pos[e.v1]);
    }
    std::set<int> roots;
    for (size_t i = 0; i < verts.size(); ++i) roots.insert(find(static_cast<int>(i)));
    rep.vertices = static_cast<int>(verts.size());
    rep.edges = eb;
    rep.genus = eb - rep.vertices + static_cast<int>(roots.size());
    rep.passed = rep.edges == 3 * (rep.genus - 1) && 3 * rep.vertices == 2 * rep.edges;
    std::ostringstream os;
    os << "E = " << rep.edges << ", 3(g-1) = " << 3 * (rep.genus - 1) << "; 3V = "
       << 3 * rep.vertices << ", 2E = " << 2 * rep.edges;
    if (rep.pure_cycle) os << "; plus " << rg.pure_cycle_components.size() << " smooth cycle(s)";
    rep.detail = os.str();
    return rep;
}

}  // namespace tropmirror
