#include "sqcx/io.hpp"

#include "sqcx/error.hpp"

namespace sqcx {

namespace {

template <class T>
T get_field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

const char* lr_name(LR x) { return x == LR::L ? "L" : "R"; }

Eta eta_from_string(const std::string& s)
{
    if (s == "L" || s == "l" || s == "lambda" || s == "\xCE\xBB")
        return Eta::Lambda;
    if (s == "R" || s == "r" || s == "rho" || s == "\xCF\x81")
        return Eta::Rho;
    throw ParseError("unknown body letter '" + s + "'");
}

CellShape shape_from_string(const std::string& s)
{
    for (CellShape c : {CellShape::Square, CellShape::Rectangle, CellShape::Triangle, CellShape::Degenerate}) {
        if (s == shape_name(c))
            return c;
    }
    throw ParseError("unknown cell shape '" + s + "'");
}

}  // namespace

std::string angle_str(const Angle& a)
{
    if (a == Angle(0))
        return "0";
    std::string num = a.numerator() == 1 ? "" : std::to_string(a.numerator());
    if (a.denominator() == 1)
        return num + "pi";
    return num + "pi/" + std::to_string(a.denominator());
}

json to_json(const Angle& a) { return {{"num", a.numerator()}, {"den", a.denominator()}}; }

Angle angle_from_json(const json& j)
{
    auto den = get_field<std::int64_t>(j, "den");
    if (den <= 0)
        throw ParseError("angle denominator must be positive");
    return Angle(get_field<std::int64_t>(j, "num"), den);
}

json to_json(const Word& w) { return w.str(); }

json to_json(const Endomorphism& e)
{
    json imgs = json::array();
    for (const Word& w : e.images())
        imgs.push_back(w.str());
    return {{"rank", e.rank()}, {"images", imgs}};
}

Endomorphism endomorphism_from_json(const json& j)
{
    auto images = get_field<std::vector<std::string>>(j, "images");
    int rank = j.contains("rank") ? get_field<int>(j, "rank") : static_cast<int>(images.size());
    return Endomorphism::parse(images, rank);
}

json to_json(const Mat2Z& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

Mat2Z mat_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2)
        throw ParseError("matrix must be [[a,b],[c,d]]");
    try {
        Mat2Z m{j[0][0].get<std::int64_t>(), j[0][1].get<std::int64_t>(), j[1][0].get<std::int64_t>(),
                j[1][1].get<std::int64_t>()};
        require_gl2(m);
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix entries must be integers: ") + e.what());
    }
}

json to_json(const MatrixDecomposition& d)
{
    json lr = json::array();
    for (LR x : d.lr_word)
        lr.push_back(lr_name(x));
    json moves = json::array();
    for (const auto& m : d.moves)
        moves.push_back(m.name());
    return {
        {"matrix", to_json(d.input)},
        {"epsilon", d.epsilon},
        {"delta", d.delta},
        {"conjugator", to_json(d.conjugator)},
        {"moves", moves},
        {"normalized", to_json(d.normalized)},
        {"lr_word", lr},
        {"terminal", terminal_name(d.terminal)},
        {"verification", {{"lhs", to_json(d.lhs())}, {"rhs", to_json(d.rhs())}, {"holds", d.verify()}}},
    };
}

json to_json(const AutWord& w)
{
    json body = json::array();
    for (Eta e : w.body)
        body.push_back(e == Eta::Lambda ? "L" : "R");
    return {{"body", body}, {"tail", tail_name(w.tail)}, {"text", w.str()}, {"ascii", w.ascii()}};
}

AutWord autword_from_json(const json& j)
{
    AutWord w;
    for (const auto& s : get_field<std::vector<std::string>>(j, "body"))
        w.body.push_back(eta_from_string(s));
    std::string tail = j.contains("tail") ? get_field<std::string>(j, "tail") : "psi1";
    AutWord t = AutWord::parse("L." + tail);
    w.tail = t.tail;
    if (w.body.empty())
        return AutWord::parse(tail);  // reports the empty-body error
    return w;
}

json to_json(const PE2Complex& x)
{
    json vs = json::array(), es = json::array(), cs = json::array();
    for (std::size_t i = 0; i < x.vertices.size(); ++i) {
        json v = {{"id", i}, {"label", x.vertices[i].label}};
        v["time"] = x.vertices[i].time >= 0 ? json(x.vertices[i].time) : json(nullptr);
        vs.push_back(v);
    }
    for (std::size_t i = 0; i < x.edges.size(); ++i) {
        const Edge& e = x.edges[i];
        es.push_back({{"id", i},
                      {"tail", e.tail},
                      {"head", e.head},
                      {"label", e.label},
                      {"length", {{"coeff", e.length.coeff}, {"radicand", e.length.radicand}}}});
    }
    for (std::size_t i = 0; i < x.cells.size(); ++i) {
        const Cell& c = x.cells[i];
        json b = json::array(), a = json::array();
        for (const OEdge& o : c.boundary)
            b.push_back({{"edge", o.edge}, {"sign", o.sign}});
        for (const Angle& t : c.angles)
            a.push_back(to_json(t));
        cs.push_back({{"id", i}, {"label", c.label}, {"shape", shape_name(c.shape)}, {"boundary", b}, {"angles", a}});
    }
    return {{"vertices", vs}, {"edges", es}, {"cells", cs}};
}

PE2Complex complex_from_json(const json& j)
{
    PE2Complex x;
    for (const json& v : get_field<json>(j, "vertices")) {
        int t = v.contains("time") && !v["time"].is_null() ? get_field<int>(v, "time") : -1;
        x.add_vertex(v.contains("label") ? get_field<std::string>(v, "label") : "", t);
    }
    for (const json& e : get_field<json>(j, "edges")) {
        Length len;
        if (e.contains("length"))
            len = {get_field<std::int64_t>(e["length"], "coeff"), get_field<std::int64_t>(e["length"], "radicand")};
        x.add_edge(get_field<int>(e, "tail"), get_field<int>(e, "head"),
                   e.contains("label") ? get_field<std::string>(e, "label") : "", len);
    }
    for (const json& c : get_field<json>(j, "cells")) {
        Cell cell;
        cell.shape = shape_from_string(get_field<std::string>(c, "shape"));
        if (c.contains("label"))
            cell.label = get_field<std::string>(c, "label");
        for (const json& o : get_field<json>(c, "boundary"))
            cell.boundary.push_back({get_field<int>(o, "edge"), get_field<int>(o, "sign")});
        for (const json& a : get_field<json>(c, "angles"))
            cell.angles.push_back(angle_from_json(a));
        x.add_cell(std::move(cell));
    }
    try {
        x.validate();
    } catch (const InternalError& e) {
        throw InvalidInput(std::string("invalid complex: ") + e.what());
    }
    return x;
}

json to_json(const NpcReport& r, const PE2Complex& x)
{
    json vs = json::array();
    for (const VertexNpc& v : r.vertices) {
        json o = {{"vertex", v.vertex}, {"label", x.vertices.at(v.vertex).label}, {"pass", v.pass}};
        if (r.float_mode) {
            o["girth"] = v.girth_float ? json(*v.girth_float) : json("inf");
            o["borderline"] = v.borderline;
        } else {
            o["girth"] = v.girth ? to_json(*v.girth) : json("inf");
        }
        if (!v.pass)
            o["circuit"] = v.circuit_text;
        vs.push_back(o);
    }
    return {{"pass", r.pass},
            {"mode", r.float_mode ? "float" : "exact"},
            {"borderline", r.borderline},
            {"failing_vertices", r.failing()},
            {"vertices", vs}};
}

json to_json(const GbsGraph& g)
{
    json es = json::array();
    for (const GbsEdge& e : g.edges)
        es.push_back({{"u", e.u}, {"v", e.v}, {"lu", e.lu}, {"lv", e.lv}});
    return {{"vertices", g.vertices}, {"edges", es}};
}

GbsGraph gbs_from_json(const json& j)
{
    GbsGraph g;
    g.vertices = get_field<int>(j, "vertices");
    for (const json& e : get_field<json>(j, "edges"))
        g.edges.push_back({get_field<int>(e, "u"), get_field<int>(e, "v"), get_field<std::int64_t>(e, "lu"),
                           get_field<std::int64_t>(e, "lv")});
    g.validate();
    return g;
}

json to_json(const ThetaMap& t) { return t.values; }

json to_json(const GbsClassification& c)
{
    json o = {{"verdict", verdict_name(c.verdict)}, {"cycle_rank", c.cycle_rank}, {"normal_form", to_json(c.normal_form)}};
    if (c.verdict == Verdict::SolubleBS)
        o["j"] = c.j;
    if (c.witness != WitnessKind::None) {
        json w = {{"kind", witness_name(c.witness)}};
        if (c.witness == WitnessKind::BSQuotient) {
            w["i"] = c.bs_i;
            w["j"] = c.bs_j;
        }
        if (c.witness == WitnessKind::SelfLoopZp) {
            w["p"] = c.p;
            w["edge"] = c.chosen_edge;
        }
        if (c.removed_edge >= 0)
            w["removed_edge"] = c.removed_edge;
        if (c.theta)
            w["theta"] = to_json(*c.theta);
        o["witness"] = w;
    }
    if (!c.note.empty())
        o["note"] = c.note;
    return o;
}

json to_json(const PeriodicWitness& w) { return {{"w", w.w.str()}, {"i", w.i}, {"j", w.j}}; }

json to_json(const AnalysisReport& r)
{
    return {{"is_immersion", r.is_immersion},
            {"image_lengths", r.image_lengths},
            {"uniform_length", r.uniform_length ? json(*r.uniform_length) : json(nullptr)},
            {"balanced_letter_counts", r.balanced_letter_counts},
            {"is_surjective", r.is_surjective},
            {"injectivity", r.injectivity},
            {"periodic_witness", r.periodic_witness ? to_json(*r.periodic_witness) : json(nullptr)},
            {"search", {{"maxlen", r.search_maxlen}, {"maxpow", r.search_maxpow}}}};
}

json to_json(const Certificate& c)
{
    json o = {{"verdict", cert_verdict_name(c.verdict)}};
    if (c.verdict == CertVerdict::NotApplicable)
        o["reasons"] = c.reasons;
    if (c.witness)
        o["witness"] = to_json(*c.witness);
    json steps = json::array();
    for (const auto& s : c.steps)
        steps.push_back({{"id", s.id}, {"status", s.status}, {"statement", s.statement}});
    o["steps"] = steps;
    o["notes"] = c.notes;
    o["report"] = to_json(c.report);
    return o;
}

}  // namespace sqcx
