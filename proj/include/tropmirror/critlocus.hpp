#pragma once

#include <set>
#include <string>
#include <vector>

#include "tropmirror/tropical.hpp"

namespace tropmirror {

/// Which unbounded edges to delete before reducing: all of them (closed
/// case), none, or those in the listed primitive directions.
struct ModificationSpec {
    enum class Kind { All, Empty, Directions };
    Kind kind = Kind::Empty;
    std::vector<ExponentVector> directions;

    static ModificationSpec all() { return {Kind::All, {}}; }
    static ModificationSpec empty() { return {Kind::Empty, {}}; }
    static ModificationSpec dirs(std::vector<ExponentVector> d);
};

/// Fixed point of {delete rays per spec; collapse leaf edges; merge at
/// bivalent vertices}. Edges carry the number of original Pi_0 segments
/// merged into them. Components that reduce to a closed cycle of bivalent
/// vertices are reported as smooth (pure cycles) instead of being merged
/// further; a straight line through a two-ray vertex is flagged the same way.
struct ReducedGraph {
    struct Vertex {
        QVec point;
        bool alive = true;
    };
    struct Edge {
        int v0 = -1;
        int v1 = -1;             // -1 for a ray
        ExponentVector ray_dir;
        bool bounded = true;
        long long merged_segments = 1;
        bool alive = true;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> pure_cycle_components;  // vertex index lists
    std::vector<int> pure_line_vertices;                  // two-ray junction vertices
    int deleted_rays = 0;

    int live_vertex_count() const;
    int live_edge_count() const;   // bounded only
    int live_ray_count() const;
    int valence(int v) const;
    int first_betti() const;
};

ReducedGraph modify(const TropicalCurveGraph& g, const ModificationSpec& spec);

/// E = 3(g-1) and 3V = 2E for a closed trivalent reduced graph.
struct CountCheckReport {
    int vertices = 0;
    int edges = 0;
    int genus = 0;
    bool pure_cycle = false;
    bool passed = false;
    std::string detail;
};
CountCheckReport count_check(const ReducedGraph& rg);

}  // namespace tropmirror
