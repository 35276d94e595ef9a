#pragma once

#include <cstdint>
#include <string>

#include <sqcx/io.hpp>

namespace sqcx::cli {

enum Exit { kOk = 0, kFail = 1, kInvalid = 2, kInternal = 3 };

struct SweepOptions {
    int maxlen = 6;
    int jobs = 1;
    int max_vertices = 3;
    int max_edges = 3;
    int max_label = 3;
    int count = 1000;
    int length = 12;
    std::uint64_t seed = 1;
};

// Each prints a JSON summary and returns an exit code.
int sweep_autwords(const SweepOptions& opt, bool human);
int sweep_gbs(const SweepOptions& opt, bool human);
int sweep_matrices(const SweepOptions& opt, bool human);

// Z + coker(M - I) for the mapping torus of an automorphism of F2 with
// abelianization M.
H1 mapping_torus_h1(const Mat2Z& m);

}  // namespace sqcx::cli
