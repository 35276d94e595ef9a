#pragma once

// Test-side reference implementations.  They are deliberately naive and
// share no code with the library beyond plain data types.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

// ---- free group words as strings over "aAbB..." (uppercase = inverse)

inline char inv_char(char c) { return std::islower(static_cast<unsigned char>(c)) ? std::toupper(c) : std::tolower(c); }

inline std::string reduce(const std::string& w)
{
    std::string st;
    for (char c : w) {
        if (!st.empty() && st.back() == inv_char(c))
            st.pop_back();
        else
            st.push_back(c);
    }
    return st;
}

inline std::string inv(const std::string& w)
{
    std::string r;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back(inv_char(*it));
    return r;
}

// All reduced words of length <= n over the first `rank` generators.
inline std::vector<std::string> reduced_words(int rank, int n)
{
    std::string alpha;
    for (int g = 0; g < rank; ++g) {
        alpha.push_back(char('a' + g));
        alpha.push_back(char('A' + g));
    }
    std::vector<std::string> out{""};
    std::vector<std::string> layer{""};
    for (int len = 1; len <= n; ++len) {
        std::vector<std::string> next;
        for (const auto& w : layer) {
            for (char c : alpha) {
                if (!w.empty() && w.back() == inv_char(c))
                    continue;
                next.push_back(w + c);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

inline bool cyc_reduced(const std::string& w) { return w.size() < 2 || w.front() != inv_char(w.back()); }

inline std::string cyc_core(std::string w)
{
    w = reduce(w);
    while (w.size() >= 2 && w.front() == inv_char(w.back()))
        w = w.substr(1, w.size() - 2);
    return w;
}

inline bool rotation_of(const std::string& u, const std::string& v)
{
    return u.size() == v.size() && (u + u).find(v) != std::string::npos;
}

// Every c u c^-1 with |c| <= max_conj.
inline std::set<std::string> conjugates(const std::string& u, const std::vector<std::string>& conjugators)
{
    std::set<std::string> out;
    for (const auto& c : conjugators)
        out.insert(reduce(c + u + inv(c)));
    return out;
}

// Endomorphism as images of a, b, ...
using Endo = std::vector<std::string>;

inline std::string apply(const Endo& t, const std::string& w)
{
    std::string r;
    for (char c : w) {
        int g = std::tolower(c) - 'a';
        r += std::islower(static_cast<unsigned char>(c)) ? t[g] : inv(t[g]);
    }
    return reduce(r);
}

struct Periodic {
    std::string w;
    int i, j;
};

// Every cyclically reduced w with |w| <= maxlen, no canonicalization;
// returns the least (|w|, i, w) witness with w in (a < A < b < B) order.
inline std::optional<Periodic> periodic_search(const Endo& t, int maxlen, int maxpow)
{
    auto key = [](const std::string& w) {
        std::string k;
        for (char c : w)
            k.push_back(char('0' + 2 * (std::tolower(c) - 'a') + (std::isupper(static_cast<unsigned char>(c)) ? 1 : 0)));
        return k;
    };
    std::optional<Periodic> best;
    for (const auto& w : reduced_words(static_cast<int>(t.size()), maxlen)) {
        if (w.empty() || !cyc_reduced(w))
            continue;
        if (best && w.size() > best->w.size())
            break;
        std::string u = w;
        for (int i = 1; i <= maxpow; ++i) {
            u = oracle::apply(t, u);
            std::string core = cyc_core(u);
            if (core.empty() || core.size() % w.size())
                continue;
            int j = static_cast<int>(core.size() / w.size());
            std::string wj;
            for (int k = 0; k < j; ++k)
                wj += w;
            if (!rotation_of(core, wj))
                continue;
            // rotations of w are the same class; report the least rotation
            std::string least = w;
            for (std::size_t r = 1; r < w.size(); ++r) {
                std::string rot = w.substr(r) + w.substr(0, r);
                if (key(rot) < key(least))
                    least = rot;
            }
            if (!best || i < best->i || (i == best->i && key(least) < key(best->w)))
                best = Periodic{least, i, j};
            break;
        }
    }
    return best;
}

// ---- integer 2x2 matrices

struct M2 {
    std::int64_t a, b, c, d;
    bool operator==(const M2&) const = default;
};

inline M2 mul(const M2& x, const M2& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// Z + coker(M - I) as (free rank, sorted torsion > 1).
inline std::pair<int, std::vector<std::int64_t>> mapping_torus_h1(const M2& m)
{
    std::int64_t a = m.a - 1, b = m.b, c = m.c, d = m.d - 1;
    std::int64_t d1 = std::gcd(std::gcd(a, b), std::gcd(c, d));
    std::int64_t det = std::llabs(a * d - b * c);
    if (d1 == 0)
        return {3, {}};
    std::vector<std::int64_t> t;
    int free_rank = 1;
    if (det == 0) {
        free_rank = 2;
        if (d1 > 1)
            t.push_back(d1);
    } else {
        if (d1 > 1)
            t.push_back(d1);
        if (det / d1 > 1)
            t.push_back(det / d1);
    }
    return {free_rank, t};
}

// All row-subtraction sequences from a non-negative matrix down to I or F.
// Letter 'R' subtracts row 2 from row 1, 'L' row 1 from row 2.
inline std::vector<std::string> subtraction_sequences(const M2& n)
{
    if (n == M2{1, 0, 0, 1} || n == M2{0, 1, 1, 0})
        return {""};
    std::vector<std::string> out;
    if (n.a >= n.c && n.b >= n.d) {
        for (auto& s : subtraction_sequences({n.a - n.c, n.b - n.d, n.c, n.d}))
            out.push_back("R" + s);
    }
    if (n.c >= n.a && n.d >= n.b) {
        for (auto& s : subtraction_sequences({n.a, n.b, n.c - n.a, n.d - n.b}))
            out.push_back("L" + s);
    }
    return out;
}

// ---- weighted multigraph girth by circuit enumeration

template <class W>
struct Graph {
    int n = 0;
    struct E {
        int u, v;
        W w;
    };
    std::vector<E> edges;
};

// Minimum weight over all simple circuits (self-loops and parallel pairs
// included); nullopt when the graph is a forest.
template <class W>
std::optional<W> girth(const Graph<W>& g)
{
    std::optional<W> best;
    std::vector<bool> on_path(g.n, false), used(g.edges.size(), false);
    // circuits through start s visiting only vertices >= s
    std::function<void(int, int, W)> dfs = [&](int s, int x, W len) {
        for (std::size_t k = 0; k < g.edges.size(); ++k) {
            if (used[k])
                continue;
            const auto& e = g.edges[k];
            int y;
            if (e.u == x)
                y = e.v;
            else if (e.v == x)
                y = e.u;
            else
                continue;
            if (y < s)
                continue;
            W nl = len + e.w;
            if (y == s) {
                if (!best || nl < *best)
                    best = nl;
                continue;
            }
            if (on_path[y])
                continue;
            used[k] = true;
            on_path[y] = true;
            dfs(s, y, nl);
            on_path[y] = false;
            used[k] = false;
        }
    };
    for (int s = 0; s < g.n; ++s) {
        on_path[s] = true;
        dfs(s, s, W(0));
        on_path[s] = false;
    }
    return best;
}

// ---- GBS graphs

struct GEdge {
    int u, v;
    std::int64_t lu, lv;
};

struct GGraph {
    int n = 1;
    std::vector<GEdge> edges;
};

inline bool connected(const GGraph& g)
{
    std::vector<int> comp(g.n);
    std::iota(comp.begin(), comp.end(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : g.edges) {
            int m = std::min(comp[e.u], comp[e.v]);
            if (comp[e.u] != m || comp[e.v] != m) {
                comp[e.u] = comp[e.v] = m;
                changed = true;
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

// Connected graphs, each edge multiset once (edges in nondecreasing order
// of (u, v, lu, lv) with u <= v).
inline void enumerate_gbs(int max_n, int max_e, int max_label, const std::function<void(const GGraph&)>& f)
{
    std::vector<std::int64_t> labels;
    for (int l = 1; l <= max_label; ++l) {
        labels.push_back(l);
        labels.push_back(-l);
    }
    for (int n = 1; n <= max_n; ++n) {
        std::vector<GEdge> kinds;
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v)
                for (auto lu : labels)
                    for (auto lv : labels)
                        kinds.push_back({u, v, lu, lv});
        GGraph g;
        g.n = n;
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            if (connected(g))
                f(g);
            if (static_cast<int>(g.edges.size()) == max_e)
                return;
            for (std::size_t k = from; k < kinds.size(); ++k) {
                g.edges.push_back(kinds[k]);
                rec(k);
                g.edges.pop_back();
            }
        };
        rec(0);
    }
}

// Collapse any +-1 ended non-loop edge until none is left.
inline GGraph normal_form(GGraph g)
{
    for (;;) {
        std::size_t k = 0;
        for (; k < g.edges.size(); ++k) {
            const auto& e = g.edges[k];
            if (e.u != e.v && (std::llabs(e.lu) == 1 || std::llabs(e.lv) == 1))
                break;
        }
        if (k == g.edges.size())
            return g;
        GEdge e = g.edges[k];
        int gone = std::llabs(e.lu) == 1 ? e.u : e.v;
        int kept = gone == e.u ? e.v : e.u;
        std::int64_t f = e.lu * e.lv;
        g.edges.erase(g.edges.begin() + static_cast<long>(k));
        for (auto& x : g.edges) {
            if (x.u == gone) {
                x.lu *= f;
                x.u = kept;
            }
            if (x.v == gone) {
                x.lv *= f;
                x.v = kept;
            }
            if (x.u > gone)
                --x.u;
            if (x.v > gone)
                --x.v;
        }
        --g.n;
    }
}

}  // namespace oracle
