#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqcx/complex.hpp"

namespace sqcx {

// Undirected multigraph with positive weights; self-loops allowed.
template <class W>
struct WeightedGraph {
    struct E {
        int u, v;
        W w;
    };
    int nodes = 0;
    std::vector<E> edges;

    int add_edge(int u, int v, W w)
    {
        edges.push_back({u, v, w});
        return static_cast<int>(edges.size()) - 1;
    }
};

template <class W>
struct GirthResult {
    std::optional<W> length;  // nullopt means +infinity
    std::vector<int> circuit; // edge indices of one shortest circuit, in order
};

// Shortest circuit: min over edges e = (u, v, w) of w + dist(u, v) in the
// graph without e.  Self-loops are circuits of their own weight.
GirthResult<Angle> weighted_girth(const WeightedGraph<Angle>& g);
GirthResult<double> weighted_girth(const WeightedGraph<double>& g);

struct LinkNode {
    int edge = 0;
    bool at_head = false;  // which end of the edge sits at the vertex
};

struct LinkEdge {
    int u = 0, v = 0;
    Angle weight;
    int cell = 0;
    int corner = 0;
};

// Link of a vertex: one node per edge-end at the vertex, one edge per cell
// corner.  Degenerate cells contribute nothing.
struct LinkGraph {
    int vertex = 0;
    std::vector<LinkNode> nodes;
    std::vector<LinkEdge> edges;

    WeightedGraph<Angle> graph() const;
    WeightedGraph<double> graph_float() const;
    std::string node_label(const PE2Complex& x, int i) const;
};

LinkGraph vertex_link(const PE2Complex& x, int v);

// Replace each valence-2 node by a single edge carrying the summed weight.
// Meant for display and combinatorial fingerprints, not for checking.
WeightedGraph<Angle> suppress_valence_two(const WeightedGraph<Angle>& g);

struct NpcOptions {
    bool float_mode = false;
    double tolerance = 1e-9;
    int jobs = 1;
};

struct VertexNpc {
    int vertex = 0;
    bool pass = true;
    bool borderline = false;
    std::optional<Angle> girth;         // exact mode; nullopt = +infinity
    std::optional<double> girth_float;  // float mode; nullopt = +infinity
    std::vector<int> circuit;           // link edge indices when failing
    std::string circuit_text;
};

struct NpcReport {
    bool pass = true;
    bool borderline = false;
    bool float_mode = false;
    std::vector<VertexNpc> vertices;
    int failing() const;
};

// Gromov link condition: every link has girth >= 2 pi.
NpcReport check_npc(const PE2Complex& x, const NpcOptions& opt = {});

}  // namespace sqcx
