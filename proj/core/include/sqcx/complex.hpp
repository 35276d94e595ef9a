#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace sqcx {

// Angles are exact rational multiples of pi.
using Angle = boost::rational<std::int64_t>;

// Edge length coeff * sqrt(radicand); 0 marks a collapsed side.
struct Length {
    std::int64_t coeff = 1;
    std::int64_t radicand = 1;

    double value() const;
    std::string str() const;
    bool operator==(const Length&) const = default;
};

// Oriented edge: edge index plus direction (+1 tail to head, -1 reversed).
struct OEdge {
    int edge = 0;
    int sign = 1;

    OEdge inv() const { return {edge, -sign}; }
    bool operator==(const OEdge&) const = default;
    auto operator<=>(const OEdge&) const = default;
};

enum class CellShape { Square, Rectangle, Triangle, Degenerate };
const char* shape_name(CellShape s);

struct Vertex {
    std::string label;
    int time = -1;  // index i of a time-i vertex, -1 for subdivision vertices
};

struct Edge {
    int tail = 0;
    int head = 0;
    std::string label;
    Length length;
};

// angles[k] is the corner between boundary[k] and boundary[k+1], located
// at the head of boundary[k].
struct Cell {
    std::vector<OEdge> boundary;
    std::vector<Angle> angles;
    CellShape shape = CellShape::Square;
    std::string label;
};

class PE2Complex {
public:
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Cell> cells;

    int add_vertex(std::string label, int time = -1);
    int add_edge(int tail, int head, std::string label, Length len = {});
    void add_cell(Cell c);

    int tail_of(OEdge e) const { return e.sign > 0 ? edges[e.edge].tail : edges[e.edge].head; }
    int head_of(OEdge e) const { return e.sign > 0 ? edges[e.edge].head : edges[e.edge].tail; }

    // Boundary closes up, angle sum is (k-2) pi, lengths match the shape.
    // Throws InternalError describing the first violation.
    void validate() const;

    std::size_t count(CellShape s) const;
};

// V - E + F, degenerate cells not counted.
std::int64_t euler_characteristic(const PE2Complex& x);

struct H1 {
    int free_rank = 0;
    // invariant factors > 1, ascending, as decimal strings
    std::vector<std::string> torsion;

    std::string str() const;
    bool operator==(const H1&) const = default;
};

// Cellular homology with integer coefficients via Smith normal form.
H1 homology_h1(const PE2Complex& x);

}  // namespace sqcx
