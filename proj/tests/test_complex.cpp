#include <gtest/gtest.h>

#include <sqcx/complexbuilder.hpp>
#include <sqcx/error.hpp>
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

std::pair<int, std::vector<std::int64_t>> as_oracle(const H1& h)
{
    std::vector<std::int64_t> t;
    for (const auto& s : h.torsion)
        t.push_back(std::stoll(s));
    return {h.free_rank, t};
}

oracle::M2 M(const Mat2Z& m) { return {m.a, m.b, m.c, m.d}; }

}  // namespace

TEST(Complex, SingleSquare)
{
    PE2Complex x;
    for (int i = 0; i < 4; ++i)
        x.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < 4; ++i)
        x.add_edge(i, (i + 1) % 4, "e" + std::to_string(i));
    x.add_cell(square({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    EXPECT_NO_THROW(x.validate());
    EXPECT_EQ(euler_characteristic(x), 1);
    EXPECT_EQ(homology_h1(x), H1{});
}

TEST(Complex, OneSquareTorus)
{
    PE2Complex x;
    x.add_vertex("v");
    x.add_edge(0, 0, "a");
    x.add_edge(0, 0, "b");
    x.add_cell(square({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
    EXPECT_NO_THROW(x.validate());
    EXPECT_EQ(euler_characteristic(x), 0);
    EXPECT_EQ(homology_h1(x).free_rank, 2);
    EXPECT_TRUE(homology_h1(x).torsion.empty());
    EXPECT_EQ(homology_h1(x).str(), "Z + Z");
}

TEST(Complex, ValidateRejectsOpenBoundary)
{
    PE2Complex x;
    for (int i = 0; i < 4; ++i)
        x.add_vertex("v");
    for (int i = 0; i < 4; ++i)
        x.add_edge(i, (i + 1) % 4, "e");
    x.add_cell(square({{0, 1}, {1, 1}, {3, 1}, {2, 1}}));
    EXPECT_THROW(x.validate(), InternalError);
}

TEST(Complex, ProjectivePlaneTorsion)
{
    // two squares glued to a Moebius band and a disc: a a boundary word
    PE2Complex x;
    x.add_vertex("v");
    x.add_vertex("w");
    x.add_edge(0, 1, "a");
    x.add_edge(1, 0, "b");
    x.add_cell(square({{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
    EXPECT_EQ(homology_h1(x).str(), "Z/2");
}

TEST(CaseTag, Examples)
{
    EXPECT_EQ(classify_case(AutWord::parse("λλλ·ψ₁")), CaseTag::Case1);
    EXPECT_EQ(classify_case(AutWord::parse("ρλρλ·ψ₁")), CaseTag::Case2);
    EXPECT_EQ(classify_case(AutWord::parse("λλρ·ψ₁")), CaseTag::Case3);
    EXPECT_EQ(case_name(CaseTag::Case2), "case2");
}

TEST(SquareComplex, LambdaPsi1)
{
    auto w = AutWord::parse("L.psi1");
    PE2Complex x = build_square_complex(w);
    EXPECT_NO_THROW(x.validate());
    EXPECT_EQ(euler_characteristic(x), 0);
    EXPECT_EQ(as_oracle(homology_h1(x)), oracle::mapping_torus_h1(M(w.matrix())));
    for (const auto& c : x.cells)
        if (c.shape != CellShape::Degenerate)
            EXPECT_EQ(c.shape, CellShape::Square);
}

TEST(SquareComplex, DegenerateCellInCase3)
{
    SquareComplexInfo info;
    PE2Complex x = build_square_complex(AutWord::parse("LLR.psi2"), &info);
    EXPECT_EQ(info.case_tag, CaseTag::Case3);
    EXPECT_EQ(x.count(CellShape::Degenerate), 1u);
    EXPECT_EQ(homology_h1(x).str(), "Z + Z/6");
    EXPECT_TRUE(check_npc(x).pass);
}

TEST(SquareComplex, CylinderIsReported)
{
    EXPECT_THROW(build_square_complex(AutWord::parse("LL.psi3")), DegenerateCylinder);
}

TEST(SquareComplex, TopologyMatchesMappingTorus)
{
    int built = 0;
    for (const AutWord& w : all_aut_words(4)) {
        PE2Complex x;
        try {
            x = build_square_complex(w);
        } catch (const DegenerateCylinder&) {
            continue;
        }
        ++built;
        EXPECT_NO_THROW(x.validate()) << w.ascii();
        EXPECT_EQ(euler_characteristic(x), 0) << w.ascii();
        EXPECT_EQ(as_oracle(homology_h1(x)), oracle::mapping_torus_h1(M(w.matrix()))) << w.ascii();
    }
    EXPECT_GT(built, 80);
}

TEST(PEComplex, Examples)
{
    PE2Complex x = build_pe_complex(AutWord::parse("L.psi1"));
    EXPECT_EQ(x.count(CellShape::Rectangle), 1u);
    EXPECT_EQ(x.count(CellShape::Triangle), 2u);
    EXPECT_EQ(homology_h1(x).str(), "Z + Z");
    x = build_pe_complex(AutWord::parse("LLRR.psi2"));
    EXPECT_EQ(homology_h1(x).str(), "Z + Z/2 + Z/4");
}

TEST(PEComplex, EveryWordUpToLengthSixIsNpcWithMappingTorusTopology)
{
    for (const AutWord& w : all_aut_words(6)) {
        PE2Complex x = build_pe_complex(w);
        EXPECT_NO_THROW(x.validate()) << w.ascii();
        EXPECT_EQ(euler_characteristic(x), 0) << w.ascii();
        EXPECT_EQ(as_oracle(homology_h1(x)), oracle::mapping_torus_h1(M(w.matrix()))) << w.ascii();
        EXPECT_TRUE(check_npc(x).pass) << w.ascii();
    }
}
