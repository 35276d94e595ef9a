#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include <sqcx/io.hpp>

using namespace sqcx;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    return q + "'";
}

Result run(const std::string& args)
{
    std::string cmd = std::string(SQCX_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& content)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Cli, DecomposeMatrix)
{
    Result r = run("decompose-matrix " + quote("[[2,1],[1,1]]"));
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["aut_word"]["body"], json::parse(R"(["R","L"])"));
    EXPECT_EQ(j["aut_word"]["tail"], "psi1");
    EXPECT_EQ(j["realized_matrix"], json::parse("[[2,1],[1,1]]"));
}

TEST(Cli, FiniteOrderIsInvalid)
{
    EXPECT_EQ(run("decompose-matrix " + quote("[[0,1],[1,0]]")).code, 2);
    EXPECT_EQ(run("decompose-matrix " + quote("[[2,0],[0,1]]")).code, 2);
    EXPECT_EQ(run("check-npc psi1").code, 2);
}

TEST(Cli, CheckNpc)
{
    Result r = run("check-npc LLR.psi2");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["case"], "case3");
    EXPECT_EQ(j["euler_characteristic"], 0);
    EXPECT_EQ(j["h1"]["text"], "Z + Z/6");
    EXPECT_EQ(j["npc"]["pass"], true);

    EXPECT_EQ(run("check-npc --pe --float LLR.psi2").code, 0);
    EXPECT_EQ(run(quote("check-npc") + " " + quote("λλρ·ψ₂") + " --format human").code, 0);
}

TEST(Cli, CylinderIsInternal)
{
    EXPECT_EQ(run("check-npc LL.psi3").code, 3);
    EXPECT_EQ(run("check-npc --pe LL.psi3").code, 0);
}

TEST(Cli, FailingComplexFromFile)
{
    // three unit squares around one vertex: link girth 3pi/2
    PE2Complex x;
    int v = x.add_vertex("v");
    int p[3], q[3], s[3], a[3], b[3];
    for (int i = 0; i < 3; ++i) {
        p[i] = x.add_vertex("p");
        q[i] = x.add_vertex("q");
    }
    for (int i = 0; i < 3; ++i)
        s[i] = x.add_edge(v, p[i], "s");
    for (int i = 0; i < 3; ++i) {
        a[i] = x.add_edge(p[i], q[i], "a");
        b[i] = x.add_edge(q[i], p[(i + 1) % 3], "b");
    }
    for (int i = 0; i < 3; ++i) {
        Cell c;
        c.boundary = {{s[i], 1}, {a[i], 1}, {b[i], 1}, {s[(i + 1) % 3], -1}};
        c.angles.assign(4, Angle(1, 2));
        x.add_cell(c);
    }
    std::string path = temp_file("sqcx_three_squares.json", to_json(x).dump());
    Result r = run("check-npc " + quote(path));
    EXPECT_EQ(r.code, 1);
    json j = json::parse(r.out);
    EXPECT_EQ(j["npc"]["pass"], false);
    EXPECT_EQ(j["npc"]["failing_vertices"], 1);
    EXPECT_EQ(j["npc"]["vertices"][0]["pass"], false);
}

TEST(Cli, ClassifyGbs)
{
    Result r = run("classify-gbs " + quote(R"({"vertices":2,"edges":[{"u":0,"v":1,"lu":2,"lv":3},{"u":0,"v":1,"lu":2,"lv":5}]})"));
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["verdict"], "SQUniversal");
    EXPECT_EQ(j["witness"]["i"], 6);
    EXPECT_EQ(run("classify-gbs " + quote(R"({"vertices":2,"edges":[]})")).code, 2);
    EXPECT_EQ(run("classify-gbs " + quote("{not json")).code, 2);
}

TEST(Cli, AnalyzeEndo)
{
    Result r = run("analyze-endo " + quote(R"({"images":["ab","ba"]})"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["certificate"]["verdict"], "WordHyperbolicIrreducibleLinear");
    EXPECT_EQ(run("analyze-endo " + quote(R"({"images":["aa","bb"]})")).code, 1);
    EXPECT_EQ(run("analyze-endo " + quote(R"({"images":["ab","b"]})")).code, 2);
    EXPECT_EQ(run("analyze-endo " + quote(R"({"images":["a","b","c"]})")).code, 2);
}

TEST(Cli, ExportDot)
{
    Result r = run("export-dot L.psi1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
    EXPECT_EQ(run("export-dot --what link --vertex 99 L.psi1").code, 2);
}

TEST(Cli, Sweeps)
{
    EXPECT_EQ(run("sweep gbs --max-vertices 2 --max-edges 2 --max-label 2").code, 0);
    EXPECT_EQ(run("sweep matrices --count 200").code, 0);
    EXPECT_EQ(run("sweep autwords --maxlen 1").code, 0);
    // length-2 bodies include cylinder words
    EXPECT_EQ(run("sweep autwords --maxlen 2").code, 3);
}

TEST(Cli, UsageErrors)
{
    EXPECT_NE(run("").code, 0);
    EXPECT_NE(run("check-npc L.psi1 --tol 0.1").code, 0);
    EXPECT_NE(run("bogus").code, 0);
}
