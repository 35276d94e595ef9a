#include "sqcx/gbs.hpp"

#include <cstdlib>
#include <numeric>

#include <boost/rational.hpp>

#include "sqcx/error.hpp"

namespace sqcx {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw InvalidInput("label overflow while collapsing");
    return r;
}

GbsGraph without_edge(const GbsGraph& g, int e)
{
    GbsGraph t = g;
    t.edges.erase(t.edges.begin() + e);
    return t;
}

// Edges lying on a cycle: loops, and edges whose removal keeps g connected.
std::vector<int> cycle_edges(const GbsGraph& g)
{
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (g.edges[e].is_loop() || without_edge(g, e).connected())
            out.push_back(e);
    }
    return out;
}

}  // namespace

bool GbsGraph::connected() const
{
    if (vertices <= 1)
        return true;
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = vertices;
    for (const GbsEdge& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

void GbsGraph::validate() const
{
    if (vertices < 1)
        throw InvalidInput("a GBS graph needs at least one vertex");
    for (const GbsEdge& e : edges) {
        if (e.u < 0 || e.u >= vertices || e.v < 0 || e.v >= vertices)
            throw InvalidInput("edge endpoint out of range");
        if (e.lu == 0 || e.lv == 0)
            throw InvalidInput("edge labels must be nonzero");
    }
    if (!connected())
        throw Disconnected("GBS graph is not connected");
}

bool is_collapsible(const GbsGraph& g, int edge)
{
    const GbsEdge& e = g.edges.at(edge);
    return !e.is_loop() && (std::llabs(e.lu) == 1 || std::llabs(e.lv) == 1);
}

GbsGraph elementary_collapse(const GbsGraph& g, int edge)
{
    if (edge < 0 || edge >= static_cast<int>(g.edges.size()))
        throw NotCollapsible("no edge " + std::to_string(edge));
    const GbsEdge& e = g.edges[edge];
    if (e.is_loop())
        throw NotCollapsible("edge " + std::to_string(edge) + " is a self-loop");
    int gone, kept;
    std::int64_t factor;
    if (std::llabs(e.lu) == 1) {
        gone = e.u;
        kept = e.v;
        factor = e.lv * e.lu;
    } else if (std::llabs(e.lv) == 1) {
        gone = e.v;
        kept = e.u;
        factor = e.lu * e.lv;
    } else {
        throw NotCollapsible("edge " + std::to_string(edge) + " has no +-1 label");
    }

    GbsGraph out;
    out.vertices = g.vertices - 1;
    auto renum = [&](int x) {
        if (x == gone)
            x = kept;
        return x > gone ? x - 1 : x;
    };
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (i == edge)
            continue;
        GbsEdge f = g.edges[i];
        if (f.u == gone)
            f.lu = checked_mul(f.lu, factor);
        if (f.v == gone)
            f.lv = checked_mul(f.lv, factor);
        f.u = renum(f.u);
        f.v = renum(f.v);
        out.edges.push_back(f);
    }
    return out;
}

GbsGraph normal_form(const GbsGraph& g)
{
    GbsGraph cur = g;
    for (;;) {
        int pick = -1;
        for (int e = 0; e < static_cast<int>(cur.edges.size()); ++e) {
            if (is_collapsible(cur, e)) {
                pick = e;
                break;
            }
        }
        if (pick < 0)
            return cur;
        cur = elementary_collapse(cur, pick);
    }
}

int cycle_rank(const GbsGraph& g)
{
    return static_cast<int>(g.edges.size()) - g.vertices + 1;
}

bool ThetaMap::satisfies(const GbsGraph& tree) const
{
    if (static_cast<int>(values.size()) != tree.vertices)
        return false;
    std::int64_t gcd = 0;
    for (std::int64_t v : values) {
        if (v == 0)
            return false;
        gcd = std::gcd(gcd, v);
    }
    if (gcd != 1)
        return false;
    for (const GbsEdge& e : tree.edges) {
        if (values[e.u] * e.lu != values[e.v] * e.lv)
            return false;
    }
    return true;
}

ThetaMap deficiency_one_map(const GbsGraph& tree)
{
    if (!tree.connected() || cycle_rank(tree) != 0)
        throw NotATree("deficiency one map needs a tree");
    using Q = boost::rational<std::int64_t>;
    std::vector<std::optional<Q>> val(tree.vertices);
    val[0] = Q(1);
    for (bool changed = true; changed;) {
        changed = false;
        for (const GbsEdge& e : tree.edges) {
            if (val[e.u] && !val[e.v]) {
                val[e.v] = *val[e.u] * Q(e.lu) / Q(e.lv);
                changed = true;
            } else if (val[e.v] && !val[e.u]) {
                val[e.u] = *val[e.v] * Q(e.lv) / Q(e.lu);
                changed = true;
            }
        }
    }
    std::int64_t den = 1;
    for (const auto& q : val)
        den = std::lcm(den, q->denominator());
    ThetaMap t;
    std::int64_t g = 0;
    for (const auto& q : val) {
        t.values.push_back(q->numerator() * (den / q->denominator()));
        g = std::gcd(g, t.values.back());
    }
    for (auto& v : t.values)
        v /= g;
    if (!t.satisfies(tree))
        throw InternalError("deficiency one map fails its edge equations");
    return t;
}

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::InfiniteCyclic: return "InfiniteCyclic";
    case Verdict::SolubleBS: return "SolubleBS";
    case Verdict::SQUniversal: return "SQUniversal";
    }
    return "?";
}

const char* witness_name(WitnessKind w)
{
    switch (w) {
    case WitnessKind::None: return "None";
    case WitnessKind::FreeRankTwo: return "FreeRankTwo";
    case WitnessKind::TreeCase: return "TreeCase";
    case WitnessKind::BSQuotient: return "BSQuotient";
    case WitnessKind::SelfLoopZp: return "SelfLoopZp";
    }
    return "?";
}

std::int64_t smallest_prime_factor(std::int64_t n)
{
    n = std::llabs(n);
    if (n < 2)
        throw InvalidInput("no prime factor of " + std::to_string(n));
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0)
            return p;
    }
    return n;
}

GbsClassification classify(const GbsGraph& g)
{
    g.validate();
    GbsClassification c;
    c.normal_form = normal_form(g);
    const GbsGraph& nf = c.normal_form;
    c.cycle_rank = cycle_rank(nf);

    auto bs_quotient = [&](std::int64_t i, std::int64_t j) {
        if (std::llabs(i) < 2 || std::llabs(j) < 2)
            throw InternalError("BS quotient witness with a +-1 entry");
        c.verdict = Verdict::SQUniversal;
        c.witness = WitnessKind::BSQuotient;
        c.bs_i = i;
        c.bs_j = j;
    };

    if (c.cycle_rank >= 2) {
        c.verdict = Verdict::SQUniversal;
        c.witness = WitnessKind::FreeRankTwo;
        c.note = "two independent cycles give a surjection onto a free group of rank 2";
        return c;
    }
    if (c.cycle_rank == 0) {
        if (nf.edges.empty()) {
            c.verdict = Verdict::InfiniteCyclic;
            c.theta = ThetaMap{{1}};
            return c;
        }
        c.verdict = Verdict::SQUniversal;
        c.witness = WitnessKind::TreeCase;
        c.theta = deficiency_one_map(nf);
        c.note = "tree of groups with an edge: virtually F_k x Z with k >= 2, hence large";
        return c;
    }

    const int e = cycle_edges(nf).back();
    const GbsEdge ce = nf.edges[e];
    c.removed_edge = e;

    if (!ce.is_loop()) {
        GbsGraph tree = without_edge(nf, e);
        c.theta = deficiency_one_map(tree);
        bs_quotient(c.theta->values[ce.u] * ce.lu, c.theta->values[ce.v] * ce.lv);
        return c;
    }

    const std::int64_t m = ce.lu, n = ce.lv;
    const bool unit = std::llabs(m) == 1 || std::llabs(n) == 1;
    if (nf.edges.size() == 1) {
        c.theta = ThetaMap{{1}};
        if (unit) {
            c.verdict = Verdict::SolubleBS;
            c.j = m * n;
            c.removed_edge = -1;
            if (c.j == 1)
                c.note = "BS(1,1) is Z^2";
            else if (c.j == -1)
                c.note = "BS(1,-1) is the Klein bottle group";
            return c;
        }
        bs_quotient(m, n);
        return c;
    }

    GbsGraph tree = without_edge(nf, e);
    c.theta = deficiency_one_map(tree);
    const std::int64_t k1 = c.theta->values[ce.u];
    if (!unit || std::llabs(k1) >= 2) {
        bs_quotient(k1 * m, k1 * n);
        return c;
    }

    // Loop with a +-1 label and theta = +-1 at its vertex: quotient onto Z * Z_p.
    const int x = ce.u;
    for (int i = 0; i < static_cast<int>(nf.edges.size()); ++i) {
        const GbsEdge& f = nf.edges[i];
        if (f.is_loop() || (f.u != x && f.v != x))
            continue;
        std::int64_t near = f.u == x ? f.lu : f.lv;
        std::int64_t far = f.u == x ? f.lv : f.lu;
        if (near % far != 0)
            throw InternalError("far label " + std::to_string(far) + " does not divide near label " +
                                std::to_string(near));
        c.verdict = Verdict::SQUniversal;
        c.witness = WitnessKind::SelfLoopZp;
        c.chosen_edge = i;
        c.p = smallest_prime_factor(far);
        return c;
    }
    throw InternalError("self-loop vertex has no incident tree edge");
}

void for_each_gbs_graph(int max_vertices, int max_edges, int max_label,
                        const std::function<void(const GbsGraph&)>& f)
{
    for (int nv = 1; nv <= max_vertices; ++nv) {
        std::vector<GbsEdge> types;
        for (int u = 0; u < nv; ++u) {
            for (int v = u; v < nv; ++v) {
                for (int lu = -max_label; lu <= max_label; ++lu) {
                    for (int lv = -max_label; lv <= max_label; ++lv) {
                        if (lu != 0 && lv != 0)
                            types.push_back({u, v, lu, lv});
                    }
                }
            }
        }
        GbsGraph g;
        g.vertices = nv;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (g.connected())
                f(g);
            if (static_cast<int>(g.edges.size()) == max_edges)
                return;
            for (std::size_t t = from; t < types.size(); ++t) {
                g.edges.push_back(types[t]);
                self(self, t);
                g.edges.pop_back();
            }
        };
        rec(rec, 0);
    }
}

}  // namespace sqcx
