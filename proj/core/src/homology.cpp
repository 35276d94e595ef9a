#include <algorithm>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqcx/complex.hpp"

namespace sqcx {

namespace {

using boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<cpp_int>>;

// Invariant factors (nonzero, each dividing the next) of m.
std::vector<cpp_int> smith_invariants(Matrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<cpp_int> diag;

    auto find_min = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        cpp_int best;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0)
                    continue;
                cpp_int v = abs(m[i][j]);
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                    if (best == 1)
                        return true;
                }
            }
        }
        return found;
    };
    auto swap_into = [&](std::size_t t, std::size_t i, std::size_t j) {
        std::swap(m[t], m[i]);
        for (auto& row : m)
            std::swap(row[t], row[j]);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_min(t, pi, pj))
            break;
        swap_into(t, pi, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                cpp_int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                cpp_int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                clean = clean && m[t][j] == 0;
            }
            if (clean)
                break;
            // a smaller remainder now sits in row t or column t
            std::size_t bi = t, bj = t;
            cpp_int best = abs(m[t][t]);
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] != 0 && abs(m[i][t]) < best) {
                    best = abs(m[i][t]);
                    bi = i;
                    bj = t;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] != 0 && abs(m[t][j]) < best) {
                    best = abs(m[t][j]);
                    bi = t;
                    bj = j;
                }
            }
            swap_into(t, bi, bj);
        }
        diag.push_back(abs(m[t][t]));
    }

    // diagonal to divisibility chain
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            cpp_int g = gcd(diag[i], diag[j]);
            cpp_int l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    return diag;
}

}  // namespace

H1 homology_h1(const PE2Complex& x)
{
    const std::size_t nv = x.vertices.size();
    const std::size_t ne = x.edges.size();
    std::vector<const Cell*> faces;
    for (const Cell& c : x.cells) {
        if (c.shape != CellShape::Degenerate)
            faces.push_back(&c);
    }

    Matrix d1(nv, std::vector<cpp_int>(ne, 0));
    for (std::size_t e = 0; e < ne; ++e) {
        d1[x.edges[e].head][e] += 1;
        d1[x.edges[e].tail][e] -= 1;
    }
    Matrix d2(ne, std::vector<cpp_int>(faces.size(), 0));
    for (std::size_t f = 0; f < faces.size(); ++f) {
        for (const OEdge& o : faces[f]->boundary)
            d2[o.edge][f] += o.sign;
    }

    std::size_t rank1 = nv && ne ? smith_invariants(d1).size() : 0;
    std::vector<cpp_int> inv2 = ne && !faces.empty() ? smith_invariants(d2) : std::vector<cpp_int>{};

    H1 h;
    h.free_rank = static_cast<int>(ne - rank1 - inv2.size());
    for (const cpp_int& v : inv2) {
        if (v > 1)
            h.torsion.push_back(v.str());
    }
    return h;
}

}  // namespace sqcx
