#include <sstream>

#include "sqcx/io.hpp"

namespace sqcx {

namespace {

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string complex_to_dot(const PE2Complex& x, const std::string& name)
{
    std::ostringstream os;
    os << "digraph " << quote(name) << " {\n";
    for (std::size_t i = 0; i < x.vertices.size(); ++i)
        os << "  v" << i << " [label=" << quote(x.vertices[i].label) << "];\n";
    for (const Edge& e : x.edges)
        os << "  v" << e.tail << " -> v" << e.head << " [label=" << quote(e.label + " " + e.length.str()) << "];\n";
    for (std::size_t i = 0; i < x.cells.size(); ++i) {
        const Cell& c = x.cells[i];
        std::string b;
        for (const OEdge& o : c.boundary) {
            if (!b.empty())
                b += " ";
            b += x.edges[o.edge].label + (o.sign > 0 ? "" : "^-1");
        }
        os << "  // cell " << c.label << " (" << shape_name(c.shape) << "): " << b << "\n";
    }
    os << "}\n";
    return os.str();
}

std::string link_to_dot(const PE2Complex& x, const LinkGraph& l, const std::string& name)
{
    std::ostringstream os;
    os << "graph " << quote(name) << " {\n";
    for (std::size_t i = 0; i < l.nodes.size(); ++i)
        os << "  n" << i << " [label=" << quote(l.node_label(x, static_cast<int>(i))) << "];\n";
    for (const LinkEdge& e : l.edges)
        os << "  n" << e.u << " -- n" << e.v << " [label=" << quote(angle_str(e.weight)) << "];\n";
    os << "}\n";
    return os.str();
}

std::string gbs_to_dot(const GbsGraph& g, const std::string& name)
{
    std::ostringstream os;
    os << "graph " << quote(name) << " {\n";
    for (int v = 0; v < g.vertices; ++v)
        os << "  x" << v << " [label=\"Z\"];\n";
    for (const GbsEdge& e : g.edges)
        os << "  x" << e.u << " -- x" << e.v << " [taillabel=" << e.lu << ", headlabel=" << e.lv << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace sqcx
