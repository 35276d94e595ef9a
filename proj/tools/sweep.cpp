#include <iostream>
#include <numeric>
#include <random>
#include <thread>

#include <sqcx/error.hpp>

#include "cli.hpp"

namespace sqcx::cli {

H1 mapping_torus_h1(const Mat2Z& m)
{
    const std::int64_t a = m.a - 1, b = m.b, c = m.c, d = m.d - 1;
    const std::int64_t g = std::gcd(std::gcd(a, b), std::gcd(c, d));
    const std::int64_t det = std::llabs(a * d - b * c);
    H1 h;
    std::vector<std::int64_t> tors;
    if (g == 0) {
        h.free_rank = 3;
    } else if (det == 0) {
        h.free_rank = 2;
        tors.push_back(g);
    } else {
        h.free_rank = 1;
        tors = {g, det / g};
    }
    for (std::int64_t t : tors) {
        if (t > 1)
            h.torsion.push_back(std::to_string(t));
    }
    return h;
}

namespace {

template <class F>
void parallel_for(int n, int jobs, F&& f)
{
    jobs = std::max(1, std::min(jobs, n));
    if (jobs == 1) {
        for (int i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += jobs)
                f(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

}  // namespace

int sweep_autwords(const SweepOptions& opt, bool human)
{
    const std::vector<AutWord> words = all_aut_words(opt.maxlen);
    enum Status { Pass, NpcFail, Mismatch, Cylinder, Failure };
    struct Result {
        Status status = Pass;
        std::string detail;
    };
    std::vector<Result> res(words.size());
    parallel_for(static_cast<int>(words.size()), opt.jobs, [&](int i) {
        const AutWord& w = words[i];
        Result& r = res[i];
        try {
            PE2Complex x = build_square_complex(w);
            NpcReport rep = check_npc(x);
            H1 got = homology_h1(x), want = mapping_torus_h1(w.matrix());
            std::int64_t chi = euler_characteristic(x);
            if (!rep.pass) {
                r = {NpcFail, std::to_string(rep.failing()) + " failing vertices"};
            } else if (chi != 0 || !(got == want)) {
                r = {Mismatch, "chi " + std::to_string(chi) + ", H1 " + got.str() + ", expected " + want.str()};
            }
        } catch (const DegenerateCylinder& e) {
            r = {Cylinder, e.what()};
        } catch (const std::exception& e) {
            r = {Failure, e.what()};
        }
    });

    json out = {{"family", "autwords"}, {"maxlen", opt.maxlen}, {"total", words.size()}};
    const char* keys[] = {"pass", "npc_fail", "topology_mismatch", "degenerate_cylinder", "error"};
    std::vector<json> lists(5, json::array());
    std::vector<int> counts(5, 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        ++counts[res[i].status];
        if (res[i].status != Pass)
            lists[res[i].status].push_back({{"word", words[i].ascii()}, {"detail", res[i].detail}});
    }
    out["passed"] = counts[Pass];
    for (int k = 1; k < 5; ++k)
        out[keys[k]] = lists[k];
    if (human) {
        std::cout << "autwords up to length " << opt.maxlen << ": " << words.size() << " words\n";
        for (int k = 0; k < 5; ++k)
            std::cout << "  " << keys[k] << " " << counts[k] << "\n";
        for (int k = 1; k < 5; ++k) {
            for (const json& e : lists[k])
                std::cout << keys[k] << " " << e["word"].get<std::string>() << "\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    if (counts[NpcFail] || counts[Mismatch])
        return kFail;
    if (counts[Cylinder] || counts[Failure])
        return kInternal;
    return kOk;
}

int sweep_gbs(const SweepOptions& opt, bool human)
{
    std::int64_t graphs = 0, collapses = 0;
    std::map<std::string, std::int64_t> verdicts;
    json problems = json::array();
    auto same = [](const GbsClassification& x, const GbsClassification& y) {
        return x.verdict == y.verdict && x.j == y.j;
    };
    for_each_gbs_graph(opt.max_vertices, opt.max_edges, opt.max_label, [&](const GbsGraph& g) {
        ++graphs;
        try {
            GbsClassification c = classify(g);
            ++verdicts[verdict_name(c.verdict)];
            for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
                if (!is_collapsible(g, e))
                    continue;
                ++collapses;
                GbsClassification d = classify(elementary_collapse(g, e));
                if (!same(c, d) && problems.size() < 50)
                    problems.push_back({{"graph", to_json(g)}, {"edge", e}, {"problem", "collapse changes verdict"}});
            }
        } catch (const std::exception& e) {
            if (problems.size() < 50)
                problems.push_back({{"graph", to_json(g)}, {"problem", e.what()}});
        }
    });
    json out = {{"family", "gbs"},
                {"max_vertices", opt.max_vertices},
                {"max_edges", opt.max_edges},
                {"max_label", opt.max_label},
                {"graphs", graphs},
                {"collapses_checked", collapses},
                {"verdicts", verdicts},
                {"problems", problems}};
    if (human) {
        std::cout << "gbs graphs " << graphs << ", collapses checked " << collapses << "\n";
        for (const auto& [k, v] : verdicts)
            std::cout << "  " << k << " " << v << "\n";
        std::cout << "problems " << problems.size() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return problems.empty() ? kOk : kFail;
}

int sweep_matrices(const SweepOptions& opt, bool human)
{
    std::mt19937_64 rng(opt.seed);
    const Mat2Z gens[] = {Mat2Z::L(), Mat2Z::R(), Mat2Z::F(), -Mat2Z::I()};
    std::uniform_int_distribution<int> pick(0, 3), len(1, opt.length);
    int tested = 0, skipped = 0;
    json problems = json::array();
    while (tested < opt.count) {
        Mat2Z g = Mat2Z::I();
        for (int k = len(rng); k > 0; --k)
            g = g * gens[pick(rng)];
        if (is_finite_order(g)) {
            ++skipped;
            continue;
        }
        ++tested;
        try {
            MatrixDecomposition d = decompose(g);
            bool ok = d.verify();
            Mat2Z cur = d.normalized;
            for (std::size_t k = 0; k < d.lr_word.size(); ++k) {
                RowStep st = row_subtraction_step(cur);
                ok = ok && st.rest.entry_sum() < cur.entry_sum() && st.letter == d.lr_word[k];
                cur = st.rest;
            }
            if (!ok)
                problems.push_back({{"matrix", to_json(g)}, {"problem", "identity or descent fails"}});
        } catch (const std::exception& e) {
            problems.push_back({{"matrix", to_json(g)}, {"problem", e.what()}});
        }
    }
    json out = {{"family", "matrices"}, {"seed", opt.seed},        {"count", tested},
                {"length", opt.length}, {"finite_order_skipped", skipped}, {"problems", problems}};
    if (human)
        std::cout << "matrices " << tested << " (seed " << opt.seed << "), skipped " << skipped
                  << " of finite order, problems " << problems.size() << "\n";
    else
        std::cout << out.dump(2) << "\n";
    return problems.empty() ? kOk : kFail;
}

}  // namespace sqcx::cli
