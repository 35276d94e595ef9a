#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sqcx {

struct GbsEdge {
    int u = 0, v = 0;
    std::int64_t lu = 1, lv = 1;  // labels at the u and v ends

    bool is_loop() const { return u == v; }
    bool operator==(const GbsEdge&) const = default;
};

// Graph of infinite cyclic groups; labels are the edge group indices.
struct GbsGraph {
    int vertices = 1;
    std::vector<GbsEdge> edges;

    // Labels nonzero, endpoints in range, graph connected.  Throws
    // InvalidInput or Disconnected.
    void validate() const;
    bool connected() const;
    bool operator==(const GbsGraph&) const = default;
};

// Contract a non-loop edge with a +-1 label.  The vertex at a +-1 end is
// absorbed (the u end when both qualify); its other labels are multiplied
// by (far label) * (near label).  Throws NotCollapsible.
GbsGraph elementary_collapse(const GbsGraph& g, int edge);
bool is_collapsible(const GbsGraph& g, int edge);

// Collapse the lowest-index collapsible edge until none is left.
GbsGraph normal_form(const GbsGraph& g);

int cycle_rank(const GbsGraph& g);

// theta(h_v) for each vertex: primitive, nonzero, with
// theta(u) * lu = theta(v) * lv on every edge.
struct ThetaMap {
    std::vector<std::int64_t> values;
    bool satisfies(const GbsGraph& tree) const;
};

// Propagates from vertex 0 with value 1.  Throws NotATree.
ThetaMap deficiency_one_map(const GbsGraph& tree);

enum class Verdict { InfiniteCyclic, SolubleBS, SQUniversal };
enum class WitnessKind { None, FreeRankTwo, TreeCase, BSQuotient, SelfLoopZp };

const char* verdict_name(Verdict v);
const char* witness_name(WitnessKind w);

struct GbsClassification {
    Verdict verdict = Verdict::InfiniteCyclic;
    WitnessKind witness = WitnessKind::None;
    GbsGraph normal_form;
    int cycle_rank = 0;
    std::int64_t j = 0;             // SolubleBS(j)
    std::int64_t bs_i = 0, bs_j = 0; // BSQuotient(i, j)
    int removed_edge = -1;          // normal-form edge removed to reach a tree
    int chosen_edge = -1;           // SelfLoopZp edge
    std::int64_t p = 0;             // SelfLoopZp prime
    std::optional<ThetaMap> theta;  // on the normal form minus removed_edge
    std::string note;
};

// Throws Disconnected for disconnected input.
GbsClassification classify(const GbsGraph& g);

std::int64_t smallest_prime_factor(std::int64_t n);

// Every connected graph with 1..max_vertices vertices, at most max_edges
// edges and labels in +-{1..max_label}, each edge multiset once.
void for_each_gbs_graph(int max_vertices, int max_edges, int max_label,
                        const std::function<void(const GbsGraph&)>& f);

}  // namespace sqcx
