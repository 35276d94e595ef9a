#include <random>

#include <gtest/gtest.h>

#include <sqcx/complexbuilder.hpp>
#include <sqcx/linkcheck.hpp>

#include "oracles.hpp"

using namespace sqcx;

namespace {

const Angle kRight(1, 2);

Cell square(std::vector<OEdge> b)
{
    Cell c;
    c.boundary = std::move(b);
    c.angles.assign(4, kRight);
    return c;
}

WeightedGraph<Angle> cycle(int n, Angle w)
{
    WeightedGraph<Angle> g;
    g.nodes = n;
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n, w);
    return g;
}

// Three squares around one vertex: v, spokes p0..p2, rims q0..q2.
PE2Complex three_squares()
{
    PE2Complex x;
    int v = x.add_vertex("v");
    int p[3], q[3], spoke[3], a[3], b[3];
    for (int i = 0; i < 3; ++i) {
        p[i] = x.add_vertex("p" + std::to_string(i));
        q[i] = x.add_vertex("q" + std::to_string(i));
    }
    for (int i = 0; i < 3; ++i)
        spoke[i] = x.add_edge(v, p[i], "s" + std::to_string(i));
    for (int i = 0; i < 3; ++i) {
        a[i] = x.add_edge(p[i], q[i], "a" + std::to_string(i));
        b[i] = x.add_edge(q[i], p[(i + 1) % 3], "b" + std::to_string(i));
    }
    for (int i = 0; i < 3; ++i)
        x.add_cell(square({{spoke[i], 1}, {a[i], 1}, {b[i], 1}, {spoke[(i + 1) % 3], -1}}));
    return x;
}

}  // namespace

TEST(Girth, Cycles)
{
    EXPECT_EQ(*weighted_girth(cycle(4, kRight)).length, Angle(2));
    EXPECT_EQ(*weighted_girth(cycle(3, kRight)).length, Angle(3, 2));
    EXPECT_EQ(weighted_girth(cycle(4, kRight)).circuit.size(), 4u);
}

TEST(Girth, ParallelAndLoops)
{
    WeightedGraph<Angle> g;
    g.nodes = 2;
    g.add_edge(0, 1, Angle(1));
    g.add_edge(0, 1, kRight);
    EXPECT_EQ(*weighted_girth(g).length, Angle(3, 2));

    g.add_edge(1, 1, Angle(1, 4));
    EXPECT_EQ(*weighted_girth(g).length, Angle(1, 4));
    EXPECT_EQ(weighted_girth(g).circuit, std::vector<int>{2});
}

TEST(Girth, ForestIsInfinite)
{
    WeightedGraph<Angle> g;
    g.nodes = 4;
    g.add_edge(0, 1, kRight);
    g.add_edge(1, 2, kRight);
    g.add_edge(1, 3, kRight);
    EXPECT_FALSE(weighted_girth(g).length.has_value());
    EXPECT_TRUE(weighted_girth(g).circuit.empty());
}

TEST(Girth, AgreesWithCircuitEnumeration)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        int m = static_cast<int>(rng() % 9);
        WeightedGraph<Angle> g;
        oracle::Graph<Angle> o;
        g.nodes = o.n = n;
        for (int k = 0; k < m; ++k) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            Angle w(1 + static_cast<std::int64_t>(rng() % 6), 4);
            g.add_edge(u, v, w);
            o.edges.push_back({u, v, w});
        }
        auto got = weighted_girth(g);
        auto want = oracle::girth(o);
        ASSERT_EQ(got.length.has_value(), want.has_value()) << trial;
        if (!want)
            continue;
        ASSERT_EQ(*got.length, *want) << trial;
        Angle sum(0);
        for (int k : got.circuit)
            sum += g.edges[k].w;
        EXPECT_EQ(sum, *want) << trial;
    }
}

TEST(Girth, FloatAgreesWithExact)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        WeightedGraph<Angle> g;
        WeightedGraph<double> f;
        g.nodes = f.nodes = n;
        for (int k = 0; k < 7; ++k) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            Angle w(1 + static_cast<std::int64_t>(rng() % 4), 4);
            g.add_edge(u, v, w);
            f.add_edge(u, v, boost::rational_cast<double>(w));
        }
        auto a = weighted_girth(g);
        auto b = weighted_girth(f);
        ASSERT_EQ(a.length.has_value(), b.length.has_value());
        if (a.length)
            EXPECT_NEAR(boost::rational_cast<double>(*a.length), *b.length, 1e-12);
    }
}

TEST(Npc, SingleSquarePasses)
{
    PE2Complex x;
    for (int i = 0; i < 4; ++i)
        x.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < 4; ++i)
        x.add_edge(i, (i + 1) % 4, "e");
    x.add_cell(square({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    auto r = check_npc(x);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.failing(), 0);
    for (const auto& v : r.vertices)
        EXPECT_FALSE(v.girth.has_value());
}

TEST(Npc, TorusLinkIsExactlyTwoPi)
{
    PE2Complex x;
    x.add_vertex("v");
    x.add_edge(0, 0, "a");
    x.add_edge(0, 0, "b");
    x.add_cell(square({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
    LinkGraph l = vertex_link(x, 0);
    EXPECT_EQ(l.nodes.size(), 4u);
    EXPECT_EQ(l.edges.size(), 4u);
    auto r = check_npc(x);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(*r.vertices[0].girth, Angle(2));

    NpcOptions opt;
    opt.float_mode = true;
    auto rf = check_npc(x, opt);
    EXPECT_TRUE(rf.pass);
    EXPECT_TRUE(rf.borderline);
    EXPECT_TRUE(rf.float_mode);
}

TEST(Npc, ThreeSquaresAroundVertexFail)
{
    PE2Complex x = three_squares();
    EXPECT_NO_THROW(x.validate());
    auto r = check_npc(x);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.failing(), 1);
    EXPECT_EQ(*r.vertices[0].girth, Angle(3, 2));
    EXPECT_EQ(r.vertices[0].circuit.size(), 3u);
    EXPECT_FALSE(r.vertices[0].circuit_text.empty());

    NpcOptions opt;
    opt.float_mode = true;
    EXPECT_FALSE(check_npc(x, opt).pass);
}

TEST(Npc, JobsDoNotChangeTheReport)
{
    PE2Complex x = build_pe_complex(AutWord::parse("LLRLR.psi3"));
    NpcOptions one, four;
    four.jobs = 4;
    auto a = check_npc(x, one), b = check_npc(x, four);
    ASSERT_EQ(a.vertices.size(), b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        EXPECT_EQ(a.vertices[i].pass, b.vertices[i].pass);
        EXPECT_EQ(a.vertices[i].girth, b.vertices[i].girth);
    }
}

TEST(Suppress, CycleBecomesLoop)
{
    auto s = suppress_valence_two(cycle(4, kRight));
    ASSERT_EQ(s.edges.size(), 1u);
    EXPECT_EQ(s.edges[0].u, s.edges[0].v);
    EXPECT_EQ(s.edges[0].w, Angle(2));
}
