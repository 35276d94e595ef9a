#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include <sqcx/error.hpp>
#include <sqcx/io.hpp>

#include "cli.hpp"

namespace sqcx::cli {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// "-" reads stdin, an existing path reads the file, anything else is inline.
std::string read_input(const std::string& arg)
{
    if (arg == "-")
        return trim(std::string(std::istreambuf_iterator<char>(std::cin), {}));
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return trim(ss.str());
    }
    return trim(arg);
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

struct Subject {
    std::optional<AutWord> word;
    std::optional<MatrixDecomposition> decomposition;
    std::optional<PE2Complex> complex;
};

// AutWord text or JSON, a matrix, or (if allowed) a complex JSON.
Subject load_subject(const std::string& arg, bool allow_complex)
{
    std::string text = read_input(arg);
    Subject s;
    if (!text.empty() && text[0] == '[') {
        Mat2Z m = mat_from_json(parse_json(text));
        if (is_finite_order(m))
            throw FiniteOrder("matrix " + m.str() +
                              " has finite order: its mapping torus is finitely covered by Gamma x S^1 "
                              "(the finite-order construction), not by these square complexes");
        s.decomposition = decompose(m);
        s.word = to_aut_word(*s.decomposition);
    } else if (!text.empty() && text[0] == '{') {
        json j = parse_json(text);
        if (j.contains("cells")) {
            if (!allow_complex)
                throw InvalidInput("this command expects an automorphism word or a matrix");
            s.complex = complex_from_json(j);
        } else {
            s.word = autword_from_json(j);
        }
    } else {
        s.word = AutWord::parse(text);
    }
    return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string mat_rows(const Mat2Z& m) { return m.str(); }

json cell_counts(const PE2Complex& x)
{
    return {{"square", x.count(CellShape::Square)},
            {"rectangle", x.count(CellShape::Rectangle)},
            {"triangle", x.count(CellShape::Triangle)},
            {"degenerate", x.count(CellShape::Degenerate)}};
}

json h1_json(const H1& h) { return {{"free_rank", h.free_rank}, {"torsion", h.torsion}, {"text", h.str()}}; }

PE2Complex build(const AutWord& w, bool pe, SquareComplexInfo* info)
{
    return pe ? build_pe_complex(w) : build_square_complex(w, info);
}

// ---- decompose-matrix

int cmd_decompose(const std::string& input, const std::string& format)
{
    std::string text = read_input(input);
    Mat2Z m = mat_from_json(parse_json(text));
    MatrixDecomposition d = decompose(m);
    AutWord w = to_aut_word(d);
    if (format == "human") {
        std::cout << "matrix      " << mat_rows(m) << "\n"
                  << "epsilon     " << d.epsilon << "\n"
                  << "delta       " << d.delta << "\n"
                  << "conjugator  " << mat_rows(d.conjugator) << "\n"
                  << "normalized  " << mat_rows(d.normalized) << "\n";
        std::string lr;
        for (LR x : d.lr_word)
            lr += lr_char(x);
        std::cout << "lr_word     " << lr << "\n"
                  << "terminal    " << terminal_name(d.terminal) << "\n"
                  << "aut_word    " << w.str() << "\n"
                  << "identity    " << (d.verify() ? "holds" : "FAILS") << "\n";
        return d.verify() ? kOk : kInternal;
    }
    json j = to_json(d);
    j["tail"] = tail_name(w.tail);
    j["aut_word"] = to_json(w);
    j["realized_matrix"] = to_json(w.matrix());
    emit(j);
    return d.verify() ? kOk : kInternal;
}

// ---- build-complex

int cmd_build(const std::string& input, bool pe, const std::string& format)
{
    Subject s = load_subject(input, false);
    SquareComplexInfo info;
    PE2Complex x = build(*s.word, pe, &info);
    if (format == "dot") {
        std::cout << complex_to_dot(x, s.word->ascii());
        return kOk;
    }
    if (format == "human") {
        std::cout << "aut_word  " << s.word->str() << "\n"
                  << "kind      " << (pe ? "pe" : "square") << "\n"
                  << "case      " << case_name(classify_case(*s.word)) << "\n"
                  << "vertices  " << x.vertices.size() << "\n"
                  << "edges     " << x.edges.size() << "\n"
                  << "cells     " << cell_counts(x).dump() << "\n";
        return kOk;
    }
    json j = {{"aut_word", to_json(*s.word)},
              {"kind", pe ? "pe" : "square"},
              {"case", case_name(classify_case(*s.word))}};
    if (!pe)
        j["construction"] = {{"merged", info.merged}, {"collapsed", info.collapsed}, {"folded", info.folded}};
    j["complex"] = to_json(x);
    emit(j);
    return kOk;
}

// ---- check-npc

int cmd_check(const std::string& input, bool pe, const NpcOptions& opt, const std::string& format)
{
    Subject s = load_subject(input, true);
    PE2Complex x = s.complex ? *s.complex : build(*s.word, pe, nullptr);
    NpcReport r = check_npc(x, opt);
    H1 h = homology_h1(x);
    std::int64_t chi = euler_characteristic(x);
    if (format == "human") {
        if (s.word)
            std::cout << "aut_word  " << s.word->str() << "\n"
                      << "case      " << case_name(classify_case(*s.word)) << "\n";
        std::cout << "cells     " << cell_counts(x).dump() << "\n"
                  << "chi       " << chi << "\n"
                  << "H1        " << h.str() << "\n";
        for (const VertexNpc& v : r.vertices) {
            std::string g;
            if (opt.float_mode)
                g = v.girth_float ? std::to_string(*v.girth_float) : "inf";
            else
                g = v.girth ? angle_str(*v.girth) : "inf";
            std::cout << "vertex " << x.vertices[v.vertex].label << "  girth " << g << "  "
                      << (v.pass ? "ok" : "FAIL " + v.circuit_text) << "\n";
        }
        std::cout << "npc       " << (r.pass ? "pass" : "fail") << "\n";
        return r.pass ? kOk : kFail;
    }
    json j;
    if (s.word) {
        j["aut_word"] = to_json(*s.word);
        j["case"] = case_name(classify_case(*s.word));
    }
    j["kind"] = s.complex ? "input" : pe ? "pe" : "square";
    j["cells"] = cell_counts(x);
    j["vertex_count"] = x.vertices.size();
    j["edge_count"] = x.edges.size();
    j["euler_characteristic"] = chi;
    j["h1"] = h1_json(h);
    j["npc"] = to_json(r, x);
    emit(j);
    return r.pass ? kOk : kFail;
}

// ---- classify-gbs

int cmd_gbs(const std::string& input, const std::string& format)
{
    GbsGraph g = gbs_from_json(parse_json(read_input(input)));
    GbsClassification c = classify(g);
    if (format == "dot") {
        std::cout << gbs_to_dot(c.normal_form, "normal_form");
        return kOk;
    }
    if (format == "human") {
        std::cout << "verdict      " << verdict_name(c.verdict);
        if (c.verdict == Verdict::SolubleBS)
            std::cout << "(" << c.j << ")";
        std::cout << "\n";
        if (c.witness != WitnessKind::None) {
            std::cout << "witness      " << witness_name(c.witness);
            if (c.witness == WitnessKind::BSQuotient)
                std::cout << "(" << c.bs_i << ", " << c.bs_j << ")";
            if (c.witness == WitnessKind::SelfLoopZp)
                std::cout << " p=" << c.p;
            std::cout << "\n";
        }
        std::cout << "cycle_rank   " << c.cycle_rank << "\n";
        if (!c.note.empty())
            std::cout << "note         " << c.note << "\n";
        return kOk;
    }
    json j = to_json(c);
    j["input"] = to_json(g);
    emit(j);
    return kOk;
}

// ---- analyze-endo

int cmd_endo(const std::string& input, int maxlen, int maxpow, int jobs, const std::string& format)
{
    Endomorphism theta = endomorphism_from_json(parse_json(read_input(input)));
    Certificate c = sap_certificate(theta, maxlen, maxpow, jobs);
    int code = c.verdict == CertVerdict::WordHyperbolicIrreducibleLinear ? kOk
               : c.verdict == CertVerdict::PeriodicFound                  ? kFail
                                                                          : kInvalid;
    if (format == "human") {
        std::cout << "endomorphism  " << theta.str() << "\n"
                  << "verdict       " << cert_verdict_name(c.verdict) << "\n";
        for (const auto& r : c.reasons)
            std::cout << "reason        " << r << "\n";
        if (c.witness)
            std::cout << "witness       w=" << c.witness->w.str() << " i=" << c.witness->i
                      << " j=" << c.witness->j << "\n";
        for (const auto& st : c.steps)
            std::cout << "[" << st.status << "] " << st.id << ": " << st.statement << "\n";
        return code;
    }
    emit({{"endomorphism", to_json(theta)}, {"certificate", to_json(c)}});
    return code;
}

// ---- export-dot

int cmd_dot(const std::string& input, const std::string& what, int vertex, bool pe)
{
    std::string text = read_input(input);
    if (what == "gbs") {
        std::cout << gbs_to_dot(gbs_from_json(parse_json(text)));
        return kOk;
    }
    Subject s = load_subject(input, true);
    PE2Complex x = s.complex ? *s.complex : build(*s.word, pe, nullptr);
    if (what == "complex") {
        std::cout << complex_to_dot(x, s.word ? s.word->ascii() : "complex");
        return kOk;
    }
    if (vertex < 0 || vertex >= static_cast<int>(x.vertices.size()))
        throw InvalidInput("vertex " + std::to_string(vertex) + " out of range");
    std::cout << link_to_dot(x, vertex_link(x, vertex), "link_" + x.vertices[vertex].label);
    return kOk;
}

std::uint64_t env_seed()
{
    const char* s = std::getenv("TOOLKIT_SEED");
    if (!s || !*s)
        return 1;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("TOOLKIT_SEED is not an unsigned integer: ") + s);
    }
}

}  // namespace

int run(int argc, char** argv)
{
    CLI::App app{"Square complexes, link conditions and SQ-universality checks"};
    app.require_subcommand(1);
    std::string input, format = "json";
    auto add_input = [&](CLI::App* sc) {
        sc->add_option("input", input, "inline text or JSON, a file path, or - for stdin")->required();
    };
    auto add_format = [&](CLI::App* sc, std::vector<std::string> allowed) {
        sc->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
    };

    auto* dm = app.add_subcommand("decompose-matrix", "L/R decomposition of a GL2(Z) matrix");
    add_input(dm);
    add_format(dm, {"json", "human"});

    bool pe = false;
    auto* bc = app.add_subcommand("build-complex", "build the square (or --pe) complex of an automorphism");
    add_input(bc);
    add_format(bc, {"json", "dot", "human"});
    bc->add_flag("--pe", pe, "build the piecewise-Euclidean complex instead");

    NpcOptions npc;
    auto* cn = app.add_subcommand("check-npc", "link condition, Euler characteristic and H1");
    add_input(cn);
    add_format(cn, {"json", "human"});
    cn->add_flag("--pe", pe, "check the piecewise-Euclidean complex instead");
    cn->add_flag("--float", npc.float_mode, "floating-point girth with a tolerance");
    auto* tol = cn->add_option("--tol", npc.tolerance, "tolerance in float mode")->check(CLI::PositiveNumber);
    cn->add_option("--jobs", npc.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* cg = app.add_subcommand("classify-gbs", "classify a generalized Baumslag-Solitar graph");
    add_input(cg);
    add_format(cg, {"json", "dot", "human"});

    int maxlen = 8, maxpow = 3, jobs = 1;
    auto* ae = app.add_subcommand("analyze-endo", "immersion analysis and hyperbolicity certificate");
    add_input(ae);
    add_format(ae, {"json", "human"});
    ae->add_option("--maxlen", maxlen, "periodic search word length bound")->check(CLI::PositiveNumber);
    ae->add_option("--maxpow", maxpow, "periodic search power bound")->check(CLI::PositiveNumber);
    ae->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string what = "complex";
    int vertex = 0;
    auto* ed = app.add_subcommand("export-dot", "Graphviz export of a complex, a vertex link or a GBS graph");
    add_input(ed);
    ed->add_option("--what", what, "complex, link or gbs")->check(CLI::IsMember({"complex", "link", "gbs"}));
    ed->add_option("--vertex", vertex, "vertex index for --what link");
    ed->add_flag("--pe", pe, "use the piecewise-Euclidean complex");

    SweepOptions sw;
    std::string family;
    auto* sp = app.add_subcommand("sweep", "exhaustive drivers: autwords, gbs, matrices");
    sp->add_option("family", family, "autwords, gbs or matrices")
        ->required()
        ->check(CLI::IsMember({"autwords", "gbs", "matrices"}));
    add_format(sp, {"json", "human"});
    sp->add_option("--maxlen", sw.maxlen, "body length bound for autwords")->check(CLI::PositiveNumber);
    sp->add_option("--length", sw.length, "product length bound for matrices")->check(CLI::PositiveNumber);
    sp->add_option("--jobs", sw.jobs, "worker threads")->check(CLI::PositiveNumber);
    sp->add_option("--max-vertices", sw.max_vertices, "gbs vertex bound")->check(CLI::PositiveNumber);
    sp->add_option("--max-edges", sw.max_edges, "gbs edge bound")->check(CLI::NonNegativeNumber);
    sp->add_option("--max-label", sw.max_label, "gbs label modulus bound")->check(CLI::PositiveNumber);
    sp->add_option("--count", sw.count, "number of random matrices")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }
    if (tol->count() && !npc.float_mode) {
        std::cerr << "error: --tol is only meaningful with --float\n";
        return kInvalid;
    }

    try {
        if (*dm)
            return cmd_decompose(input, format);
        if (*bc)
            return cmd_build(input, pe, format);
        if (*cn)
            return cmd_check(input, pe, npc, format);
        if (*cg)
            return cmd_gbs(input, format);
        if (*ae)
            return cmd_endo(input, maxlen, maxpow, jobs, format);
        if (*ed)
            return cmd_dot(input, what, vertex, pe);
        if (*sp) {
            sw.seed = env_seed();
            bool human = format == "human";
            if (family == "autwords")
                return sweep_autwords(sw, human);
            if (family == "gbs")
                return sweep_gbs(sw, human);
            return sweep_matrices(sw, human);
        }
    } catch (const DegenerateCylinder& e) {
        std::cerr << "DegenerateCylinder: " << e.what() << "\n";
        return kInternal;
    } catch (const InternalError& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return kInternal;
    } catch (const NoStep& e) {
        std::cerr << "NoStep: " << e.what() << "\n";
        return kInternal;
    } catch (const FiniteOrder& e) {
        std::cerr << "FiniteOrder: " << e.what() << "\n";
        return kInvalid;
    } catch (const RankNotTwo& e) {
        std::cerr << "RankNotTwo: " << e.what() << "\n";
        return kInvalid;
    } catch (const Disconnected& e) {
        std::cerr << "Disconnected: " << e.what() << "\n";
        return kInvalid;
    } catch (const ParseError& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "InvalidInput: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kInternal;
    }
    return kInvalid;
}

}  // namespace sqcx::cli

int main(int argc, char** argv) { return sqcx::cli::run(argc, argv); }
