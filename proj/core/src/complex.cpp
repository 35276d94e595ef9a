#include "sqcx/complex.hpp"

#include <cmath>

#include "sqcx/error.hpp"

namespace sqcx {

double Length::value() const { return static_cast<double>(coeff) * std::sqrt(static_cast<double>(radicand)); }

std::string Length::str() const
{
    if (radicand == 1 || coeff == 0)
        return std::to_string(coeff);
    std::string c = coeff == 1 ? "" : std::to_string(coeff) + "*";
    return c + "sqrt(" + std::to_string(radicand) + ")";
}

const char* shape_name(CellShape s)
{
    switch (s) {
    case CellShape::Square: return "square";
    case CellShape::Rectangle: return "rectangle";
    case CellShape::Triangle: return "triangle";
    case CellShape::Degenerate: return "degenerate";
    }
    return "?";
}

int PE2Complex::add_vertex(std::string label, int time)
{
    vertices.push_back({std::move(label), time});
    return static_cast<int>(vertices.size()) - 1;
}

int PE2Complex::add_edge(int tail, int head, std::string label, Length len)
{
    edges.push_back({tail, head, std::move(label), len});
    return static_cast<int>(edges.size()) - 1;
}

void PE2Complex::add_cell(Cell c) { cells.push_back(std::move(c)); }

std::size_t PE2Complex::count(CellShape s) const
{
    std::size_t n = 0;
    for (const Cell& c : cells)
        n += c.shape == s;
    return n;
}

namespace {

[[noreturn]] void bad_cell(std::size_t i, const Cell& c, const std::string& why)
{
    throw InternalError("cell " + std::to_string(i) + " (" + c.label + "): " + why);
}

}  // namespace

void PE2Complex::validate() const
{
    const int nv = static_cast<int>(vertices.size());
    for (const Edge& e : edges) {
        if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv)
            throw InternalError("edge " + e.label + " has a bad endpoint");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        const std::size_t k = c.boundary.size();
        if (k < 3 || c.angles.size() != k)
            bad_cell(i, c, "needs at least 3 sides and one angle per corner");
        Angle sum = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const OEdge& x = c.boundary[j];
            if (x.edge < 0 || x.edge >= static_cast<int>(edges.size()))
                bad_cell(i, c, "unknown edge");
            if (head_of(x) != tail_of(c.boundary[(j + 1) % k]))
                bad_cell(i, c, "boundary does not close up");
            if (c.angles[j] < Angle(0) || (c.shape != CellShape::Degenerate && c.angles[j] <= Angle(0)))
                bad_cell(i, c, "non-positive corner angle");
            sum += c.angles[j];
        }
        if (sum != Angle(static_cast<std::int64_t>(k) - 2))
            bad_cell(i, c, "angle sum is not (k-2) pi");

        auto len = [&](std::size_t j) { return edges[c.boundary[j].edge].length; };
        auto all_right = [&] {
            for (const Angle& a : c.angles) {
                if (a != Angle(1, 2))
                    return false;
            }
            return true;
        };
        switch (c.shape) {
        case CellShape::Square:
            if (k != 4 || !all_right())
                bad_cell(i, c, "square needs four right angles");
            for (std::size_t j = 0; j < 4; ++j) {
                if (!(len(j) == Length{1, 1}))
                    bad_cell(i, c, "square side is not of unit length");
            }
            break;
        case CellShape::Rectangle:
            if (k != 4 || !all_right())
                bad_cell(i, c, "rectangle needs four right angles");
            if (!(len(0) == len(2)) || !(len(1) == len(3)))
                bad_cell(i, c, "rectangle opposite sides differ");
            break;
        case CellShape::Triangle: {
            if (k != 3)
                bad_cell(i, c, "triangle needs three sides");
            // right angle at corner r sits between sides r and r+1
            std::size_t r = 3;
            for (std::size_t j = 0; j < 3; ++j) {
                if (c.angles[j] == Angle(1, 2))
                    r = j;
                else if (c.angles[j] != Angle(1, 4))
                    bad_cell(i, c, "triangle is not right isosceles");
            }
            if (r == 3)
                bad_cell(i, c, "triangle has no right angle");
            Length l1 = len(r), l2 = len((r + 1) % 3), h = len((r + 2) % 3);
            if (!(l1 == l2) || !(h == Length{l1.coeff, 2 * l1.radicand}))
                bad_cell(i, c, "triangle side lengths do not match its angles");
            break;
        }
        case CellShape::Degenerate:
            if (k != 4)
                bad_cell(i, c, "degenerate square needs four sides");
            break;
        }
    }
}

std::int64_t euler_characteristic(const PE2Complex& x)
{
    std::int64_t f = 0;
    for (const Cell& c : x.cells)
        f += c.shape != CellShape::Degenerate;
    return static_cast<std::int64_t>(x.vertices.size()) - static_cast<std::int64_t>(x.edges.size()) + f;
}

std::string H1::str() const
{
    std::string s;
    for (int i = 0; i < free_rank; ++i)
        s += (s.empty() ? "" : " + ") + std::string("Z");
    for (const auto& t : torsion)
        s += (s.empty() ? "" : " + ") + std::string("Z/") + t;
    return s.empty() ? "0" : s;
}

}  // namespace sqcx
