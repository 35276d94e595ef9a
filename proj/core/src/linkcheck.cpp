#include "sqcx/linkcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <thread>

#include "sqcx/error.hpp"

namespace sqcx {

namespace {

template <class W>
GirthResult<W> girth_impl(const WeightedGraph<W>& g)
{
    GirthResult<W> best;
    const int n = g.nodes;
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge)
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const auto& e = g.edges[i];
        if (e.w <= W(0))
            throw InvalidInput("link weights must be positive");
        adj[e.u].push_back({e.v, i});
        if (e.u != e.v)
            adj[e.v].push_back({e.u, i});
    }

    std::vector<std::optional<W>> dist(n);
    std::vector<int> via(n);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const auto& e = g.edges[i];
        if (e.u == e.v) {
            if (!best.length || e.w < *best.length) {
                best.length = e.w;
                best.circuit = {i};
            }
            continue;
        }
        // Dijkstra from e.u to e.v avoiding edge i
        std::fill(dist.begin(), dist.end(), std::nullopt);
        std::fill(via.begin(), via.end(), -1);
        using Item = std::pair<W, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        dist[e.u] = W(0);
        pq.push({W(0), e.u});
        while (!pq.empty()) {
            auto [d, x] = pq.top();
            pq.pop();
            if (d != *dist[x])
                continue;
            if (x == e.v)
                break;
            if (best.length && d + e.w >= *best.length)
                break;
            for (auto [y, k] : adj[x]) {
                if (k == i)
                    continue;
                W nd = d + g.edges[k].w;
                if (!dist[y] || nd < *dist[y]) {
                    dist[y] = nd;
                    via[y] = k;
                    pq.push({nd, y});
                }
            }
        }
        if (!dist[e.v])
            continue;
        W c = e.w + *dist[e.v];
        if (best.length && !(c < *best.length))
            continue;
        std::vector<int> path;
        for (int x = e.v; x != e.u;) {
            int k = via[x];
            path.push_back(k);
            const auto& ek = g.edges[k];
            x = ek.u == x ? ek.v : ek.u;
        }
        std::reverse(path.begin(), path.end());
        // the Dijkstra loop may have stopped early with a non-final distance
        W sum = e.w;
        for (int k : path)
            sum += g.edges[k].w;
        if (best.length && !(sum < *best.length))
            continue;
        best.length = sum;
        best.circuit = {i};
        best.circuit.insert(best.circuit.end(), path.begin(), path.end());
    }
    return best;
}

}  // namespace

GirthResult<Angle> weighted_girth(const WeightedGraph<Angle>& g) { return girth_impl(g); }
GirthResult<double> weighted_girth(const WeightedGraph<double>& g) { return girth_impl(g); }

WeightedGraph<Angle> LinkGraph::graph() const
{
    WeightedGraph<Angle> g;
    g.nodes = static_cast<int>(nodes.size());
    for (const LinkEdge& e : edges)
        g.add_edge(e.u, e.v, e.weight);
    return g;
}

WeightedGraph<double> LinkGraph::graph_float() const
{
    WeightedGraph<double> g;
    g.nodes = static_cast<int>(nodes.size());
    for (const LinkEdge& e : edges)
        g.add_edge(e.u, e.v, boost::rational_cast<double>(e.weight) * std::numbers::pi);
    return g;
}

std::string LinkGraph::node_label(const PE2Complex& x, int i) const
{
    const LinkNode& nd = nodes.at(i);
    return x.edges.at(nd.edge).label + (nd.at_head ? "+" : "-");
}

LinkGraph vertex_link(const PE2Complex& x, int v)
{
    LinkGraph lg;
    lg.vertex = v;
    std::vector<int> tail_node(x.edges.size(), -1), head_node(x.edges.size(), -1);
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (x.edges[e].tail == v) {
            tail_node[e] = static_cast<int>(lg.nodes.size());
            lg.nodes.push_back({static_cast<int>(e), false});
        }
        if (x.edges[e].head == v) {
            head_node[e] = static_cast<int>(lg.nodes.size());
            lg.nodes.push_back({static_cast<int>(e), true});
        }
    }
    for (std::size_t ci = 0; ci < x.cells.size(); ++ci) {
        const Cell& c = x.cells[ci];
        if (c.shape == CellShape::Degenerate)
            continue;
        const std::size_t k = c.boundary.size();
        for (std::size_t j = 0; j < k; ++j) {
            OEdge in = c.boundary[j], out = c.boundary[(j + 1) % k];
            if (x.head_of(in) != v)
                continue;
            int a = in.sign > 0 ? head_node[in.edge] : tail_node[in.edge];
            int b = out.sign > 0 ? tail_node[out.edge] : head_node[out.edge];
            if (a < 0 || b < 0)
                throw InternalError("cell corner does not sit at its vertex");
            lg.edges.push_back({a, b, c.angles[j], static_cast<int>(ci), static_cast<int>(j)});
        }
    }
    return lg;
}

WeightedGraph<Angle> suppress_valence_two(const WeightedGraph<Angle>& g)
{
    struct E {
        int u, v;
        Angle w;
        bool alive;
    };
    std::vector<E> es;
    for (const auto& e : g.edges)
        es.push_back({e.u, e.v, e.w, true});
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<std::vector<int>> inc(g.nodes);
        for (int i = 0; i < static_cast<int>(es.size()); ++i) {
            if (!es[i].alive)
                continue;
            inc[es[i].u].push_back(i);
            inc[es[i].v].push_back(i);
        }
        for (int x = 0; x < g.nodes; ++x) {
            if (inc[x].size() != 2 || inc[x][0] == inc[x][1])
                continue;
            E& e1 = es[inc[x][0]];
            E& e2 = es[inc[x][1]];
            int a = e1.u == x ? e1.v : e1.u;
            int b = e2.u == x ? e2.v : e2.u;
            e1 = {a, b, e1.w + e2.w, true};
            e2.alive = false;
            changed = true;
            break;
        }
    }
    // renumber surviving nodes
    std::vector<int> deg(g.nodes, 0);
    for (const E& e : es) {
        if (e.alive) {
            ++deg[e.u];
            ++deg[e.v];
        }
    }
    std::vector<int> id(g.nodes, -1);
    WeightedGraph<Angle> out;
    for (int x = 0; x < g.nodes; ++x) {
        // a node left with valence 2 lies on a self-loop; keep it
        bool keep = deg[x] != 2;
        for (const E& e : es)
            keep = keep || (e.alive && e.u == x && e.v == x);
        if (keep)
            id[x] = out.nodes++;
    }
    for (const E& e : es) {
        if (e.alive)
            out.add_edge(id[e.u], id[e.v], e.w);
    }
    return out;
}

int NpcReport::failing() const
{
    int k = 0;
    for (const auto& v : vertices)
        k += !v.pass;
    return k;
}

namespace {

VertexNpc check_vertex(const PE2Complex& x, int v, const NpcOptions& opt)
{
    VertexNpc r;
    r.vertex = v;
    LinkGraph lg = vertex_link(x, v);
    std::vector<int> circuit;
    if (!opt.float_mode) {
        auto gr = weighted_girth(lg.graph());
        r.girth = gr.length;
        r.pass = !gr.length || *gr.length >= Angle(2);
        circuit = gr.circuit;
    } else {
        auto gr = weighted_girth(lg.graph_float());
        r.girth_float = gr.length;
        const double two_pi = 2 * std::numbers::pi;
        r.pass = !gr.length || *gr.length >= two_pi - opt.tolerance;
        r.borderline = gr.length && std::abs(*gr.length - two_pi) <= opt.tolerance;
        circuit = gr.circuit;
    }
    if (!r.pass) {
        r.circuit = circuit;
        for (int k : circuit) {
            const LinkEdge& e = lg.edges[k];
            if (!r.circuit_text.empty())
                r.circuit_text += " ";
            r.circuit_text += lg.node_label(x, e.u) + "~" + lg.node_label(x, e.v) + "(" +
                              x.cells[e.cell].label + ")";
        }
    }
    return r;
}

}  // namespace

NpcReport check_npc(const PE2Complex& x, const NpcOptions& opt)
{
    NpcReport rep;
    rep.float_mode = opt.float_mode;
    const int nv = static_cast<int>(x.vertices.size());
    rep.vertices.resize(nv);
    int jobs = std::max(1, std::min(opt.jobs, nv));
    if (jobs == 1) {
        for (int v = 0; v < nv; ++v)
            rep.vertices[v] = check_vertex(x, v, opt);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                for (int v = t; v < nv; v += jobs)
                    rep.vertices[v] = check_vertex(x, v, opt);
            });
        }
        for (auto& th : pool)
            th.join();
    }
    for (const auto& r : rep.vertices) {
        rep.pass = rep.pass && r.pass;
        rep.borderline = rep.borderline || r.borderline;
    }
    return rep;
}

}  // namespace sqcx
