#pragma once

#include <string>
#include <vector>

#include "sqcx/autword.hpp"
#include "sqcx/complex.hpp"

namespace sqcx {

enum class CaseTag { Case1 = 1, Case2, Case3 };
std::string case_name(CaseTag c);

// Meeting j is where the block ending at time j meets the block starting
// at time j.  same[j] is true when the two triangles at that meeting share
// their hypotenuse.
std::vector<bool> meeting_types(const AutWord& w);

// case1 when every meeting shares its hypotenuse, case2 when none does,
// case3 otherwise.
CaseTag classify_case(const AutWord& w);

// Rectangles sqrt2 x 1 and right isosceles triangles, one block per letter.
PE2Complex build_pe_complex(const AutWord& w);

struct SquareComplexInfo {
    CaseTag case_tag = CaseTag::Case1;
    int merged = 0;     // meetings turned into one square
    int collapsed = 0;  // triangles collapsed to their legs
    int folded = 0;     // meetings folded into a degenerate square
};

// All non-degenerate cells are unit squares.  Throws DegenerateCylinder when
// a fold would close up a cylinder of degenerate squares.
PE2Complex build_square_complex(const AutWord& w, SquareComplexInfo* info = nullptr);

}  // namespace sqcx
