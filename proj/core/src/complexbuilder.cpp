#include "sqcx/complexbuilder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "sqcx/error.hpp"

namespace sqcx {

std::string case_name(CaseTag c) { return "case" + std::to_string(static_cast<int>(c)); }

namespace {

using Path = std::vector<OEdge>;

Path inv(const Path& p)
{
    Path out;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        out.push_back(it->inv());
    return out;
}

Path cat(Path a, const Path& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct Triangle {
    OEdge hyp;
    Path legs;  // hyp is homotopic to legs
};

// The un-glued skeleton shared by both builders: time-i vertices v_i,
// edges t_i: v_i -> v_{i+1}, s_i: v_{i+1} -> v_i and rose loops a_i, b_i
// at v_i.  The rose at time n is the rose at time 0 twisted by the tail.
struct Skeleton {
    int n = 0;
    PE2Complex x;
    std::vector<int> t, s;
    std::vector<int> rose[2];
    Endomorphism tail;
    std::vector<Path> quads;
    std::vector<Triangle> tri1, tri2;

    Skeleton(const AutWord& w, Length rose_len)
    {
        n = static_cast<int>(w.body.size());
        tail = tail_aut(w.tail);
        for (int i = 0; i < n; ++i)
            x.add_vertex("v" + std::to_string(i), i);
        for (int i = 0; i < n; ++i) {
            t.push_back(x.add_edge(i, (i + 1) % n, "t" + std::to_string(i)));
            s.push_back(x.add_edge((i + 1) % n, i, "s" + std::to_string(i)));
        }
        for (int g = 0; g < 2; ++g) {
            for (int i = 0; i < n; ++i)
                rose[g].push_back(x.add_edge(i, i, std::string(1, char('a' + g)) + std::to_string(i), rose_len));
        }
        for (int i = 0; i < n; ++i) {
            // lambda moves a, rho moves b
            int mv = w.body[i] == Eta::Lambda ? 0 : 1;
            int fx = 1 - mv;
            OEdge ti{t[i], 1}, si{s[i], 1};
            quads.push_back({rose_at(mv, i + 1), ti.inv(), rose_at(mv, i).inv(), si.inv()});
            tri1.push_back({rose_at(fx, i), {ti, si}});
            tri2.push_back({rose_at(fx, i + 1), {si, ti}});
        }
    }

    OEdge rose_at(int g, int j) const
    {
        if (j < n)
            return {rose[g][j], 1};
        const Word& img = tail.image(g);
        if (img.size() != 1)
            throw InternalError("tail does not permute generators up to sign");
        return {rose[gen_of(img[0])][0], sign_of(img[0])};
    }

    // Meeting j: the second triangle of block j-1 against the first of block j.
    const Triangle& before(int j) const { return tri2[(j + n - 1) % n]; }
    const Triangle& after(int j) const { return tri1[j]; }
    bool same(int j) const { return before(j).hyp.edge == after(j).hyp.edge; }
};

// Path homotopic to the hypotenuse edge itself, in its positive direction.
Path edge_path(const Triangle& tr) { return tr.hyp.sign > 0 ? tr.legs : inv(tr.legs); }

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

std::size_t signed_index(OEdge e) { return 2 * static_cast<std::size_t>(e.edge) + (e.sign > 0 ? 0 : 1); }

}  // namespace

std::vector<bool> meeting_types(const AutWord& w)
{
    if (w.body.empty())
        throw InvalidInput("automorphism word needs a non-empty body");
    Skeleton sk(w, {});
    std::vector<bool> out;
    for (int j = 0; j < sk.n; ++j)
        out.push_back(sk.same(j));
    return out;
}

CaseTag classify_case(const AutWord& w)
{
    auto m = meeting_types(w);
    std::size_t k = static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
    if (k == m.size())
        return CaseTag::Case1;
    if (k == 0)
        return CaseTag::Case2;
    return CaseTag::Case3;
}

PE2Complex build_pe_complex(const AutWord& w)
{
    if (w.body.empty())
        throw InvalidInput("automorphism word needs a non-empty body");
    Skeleton sk(w, {1, 2});
    PE2Complex x = sk.x;
    const Angle right(1, 2), half_right(1, 4);
    for (int i = 0; i < sk.n; ++i) {
        x.add_cell({sk.quads[i], {right, right, right, right}, CellShape::Rectangle,
                    "R" + std::to_string(i)});
    }
    for (int i = 0; i < sk.n; ++i) {
        for (int k = 0; k < 2; ++k) {
            const Triangle& tr = k == 0 ? sk.tri1[i] : sk.tri2[i];
            Path b = cat({tr.hyp}, inv(tr.legs));
            x.add_cell({b, {half_right, right, half_right}, CellShape::Triangle,
                        "T" + std::to_string(i) + (k == 0 ? "a" : "b")});
        }
    }
    x.validate();
    return x;
}

PE2Complex build_square_complex(const AutWord& w, SquareComplexInfo* info)
{
    if (w.body.empty())
        throw InvalidInput("automorphism word needs a non-empty body");
    Skeleton sk(w, {1, 1});
    const int n = sk.n;
    PE2Complex& x = sk.x;
    const Angle right(1, 2);

    SquareComplexInfo inf;
    inf.case_tag = classify_case(w);

    std::vector<Cell> cells;
    std::map<int, Path> repl;
    std::vector<bool> dead(x.edges.size(), false);
    std::vector<std::pair<Path, Path>> folds;
    UnionFind fold_vertices(x.vertices.size());

    std::vector<int> order;
    for (int j = 1; j < n; ++j)
        order.push_back(j);
    order.push_back(0);

    for (int j : order) {
        const Triangle& tb = sk.before(j);
        const Triangle& ta = sk.after(j);
        Path qb = edge_path(tb), qa = edge_path(ta);
        if (!sk.same(j)) {
            repl[tb.hyp.edge] = qb;
            repl[ta.hyp.edge] = qa;
            inf.collapsed += 2;
            continue;
        }
        if (inf.case_tag == CaseTag::Case1) {
            // the shared hypotenuse becomes the diagonal of one square
            cells.push_back({cat(qb, inv(qa)), {right, right, right, right}, CellShape::Square,
                             "M" + std::to_string(j)});
            dead[ta.hyp.edge] = true;
            ++inf.merged;
            continue;
        }
        // fold the two triangles onto each other
        int mb = x.head_of(qb[0]), ma = x.head_of(qa[0]);
        if (fold_vertices.find(mb) == fold_vertices.find(ma))
            throw DegenerateCylinder("folding meeting " + std::to_string(j) + " of " + w.ascii() +
                                     " closes a cylinder of degenerate squares");
        fold_vertices.unite(mb, ma);
        repl[ta.hyp.edge] = qa;
        folds.emplace_back(qa, qb);
        ++inf.folded;
    }

    // subdivide the rose edges that survive
    for (int g = 0; g < 2; ++g) {
        for (int i = 0; i < n; ++i) {
            int e = sk.rose[g][i];
            if (dead[e] || repl.count(e))
                continue;
            const std::string lab = x.edges[e].label;
            int m = x.add_vertex("m" + lab);
            int h1 = x.add_edge(x.edges[e].tail, m, lab + "/1");
            int h2 = x.add_edge(m, x.edges[e].head, lab + "/2");
            repl[e] = {{h1, 1}, {h2, 1}};
        }
    }
    dead.resize(x.edges.size(), false);
    for (const auto& kv : repl)
        dead[kv.first] = true;

    auto expand = [&](const Path& p) {
        Path out;
        for (const OEdge& o : p) {
            auto it = repl.find(o.edge);
            if (it == repl.end())
                out.push_back(o);
            else
                out = cat(out, o.sign > 0 ? it->second : inv(it->second));
        }
        return out;
    };

    for (int k = 0; k < n; ++k) {
        Path q = expand(sk.quads[k]);
        if (q.size() != 6)
            throw InternalError("block " + std::to_string(k) + " does not expand to a hexagon");
        int me = x.add_edge(x.head_of(q[0]), x.head_of(q[3]), "d" + std::to_string(k));
        cells.push_back({{q[0], {me, 1}, q[4], q[5]}, {right, right, right, right}, CellShape::Square,
                         "Q" + std::to_string(k) + "a"});
        cells.push_back({{q[1], q[2], q[3], {me, -1}}, {right, right, right, right}, CellShape::Square,
                         "Q" + std::to_string(k) + "b"});
    }
    dead.resize(x.edges.size(), false);
    for (std::size_t k = 0; k < folds.size(); ++k) {
        const auto& [qa, qb] = folds[k];
        cells.push_back({cat(qb, inv(qa)), {Angle(1), Angle(0), Angle(1), Angle(0)}, CellShape::Degenerate,
                         "F" + std::to_string(k)});
    }

    // quotient by the fold identifications
    UnionFind edge_uf(2 * x.edges.size());
    for (const auto& [qa, qb] : folds) {
        for (std::size_t k = 0; k < qa.size(); ++k) {
            edge_uf.unite(signed_index(qa[k]), signed_index(qb[k]));
            edge_uf.unite(signed_index(qa[k].inv()), signed_index(qb[k].inv()));
        }
    }
    UnionFind vert_uf(x.vertices.size());
    std::vector<OEdge> rep_of(2 * x.edges.size());
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (dead[e])
            continue;
        for (int sg : {1, -1}) {
            OEdge o{static_cast<int>(e), sg};
            std::size_t r = edge_uf.find(signed_index(o));
            OEdge ro{static_cast<int>(r / 2), r % 2 ? -1 : 1};
            vert_uf.unite(x.tail_of(o), x.tail_of(ro));
            vert_uf.unite(x.head_of(o), x.head_of(ro));
        }
    }

    PE2Complex out;
    std::map<std::size_t, int> vmap;
    for (std::size_t v = 0; v < x.vertices.size(); ++v) {
        std::size_t r = vert_uf.find(v);
        auto it = vmap.find(r);
        if (it == vmap.end()) {
            vmap[r] = out.add_vertex(x.vertices[v].label, x.vertices[v].time);
        } else {
            Vertex& nv = out.vertices[it->second];
            nv.label += "=" + x.vertices[v].label;
            if (nv.time < 0)
                nv.time = x.vertices[v].time;
        }
    }
    std::map<std::size_t, int> emap;
    std::vector<OEdge> image(x.edges.size(), OEdge{-1, 1});
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (dead[e])
            continue;
        std::size_t rp = edge_uf.find(signed_index({static_cast<int>(e), 1}));
        std::size_t rn = edge_uf.find(signed_index({static_cast<int>(e), -1}));
        if (rp == rn)
            throw InternalError("edge " + x.edges[e].label + " identified with its own inverse");
        int tv = vmap.at(vert_uf.find(x.edges[e].tail));
        int hv = vmap.at(vert_uf.find(x.edges[e].head));
        if (auto it = emap.find(rp); it != emap.end()) {
            image[e] = {it->second, 1};
            out.edges[it->second].label += "=" + x.edges[e].label;
        } else if (auto jt = emap.find(rn); jt != emap.end()) {
            image[e] = {jt->second, -1};
            out.edges[jt->second].label += "=" + x.edges[e].label + "^-1";
        } else {
            emap[rp] = out.add_edge(tv, hv, x.edges[e].label, {1, 1});
            image[e] = {emap[rp], 1};
        }
        const Edge& ne = out.edges[image[e].edge];
        bool ok = image[e].sign > 0 ? (ne.tail == tv && ne.head == hv) : (ne.tail == hv && ne.head == tv);
        if (!ok)
            throw InternalError("inconsistent endpoints after identifying " + x.edges[e].label);
    }
    for (Cell& c : cells) {
        for (OEdge& o : c.boundary) {
            OEdge im = image.at(o.edge);
            if (im.edge < 0)
                throw InternalError("cell " + c.label + " uses a removed edge");
            o = {im.edge, im.sign * o.sign};
        }
        out.add_cell(std::move(c));
    }
    out.validate();
    if (info)
        *info = inf;
    return out;
}

}  // namespace sqcx
