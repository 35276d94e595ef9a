#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sqcx/autword.hpp"
#include "sqcx/complex.hpp"
#include "sqcx/complexbuilder.hpp"
#include "sqcx/endo.hpp"
#include "sqcx/freegroup.hpp"
#include "sqcx/gbs.hpp"
#include "sqcx/linkcheck.hpp"
#include "sqcx/matdecomp.hpp"

namespace sqcx {

using nlohmann::json;

// Exact angle as {"num": p, "den": q}, meaning p/q * pi.
json to_json(const Angle& a);
Angle angle_from_json(const json& j);

json to_json(const Word& w);
json to_json(const Endomorphism& e);
Endomorphism endomorphism_from_json(const json& j);

// [[a, b], [c, d]]
json to_json(const Mat2Z& m);
Mat2Z mat_from_json(const json& j);

json to_json(const MatrixDecomposition& d);
json to_json(const AutWord& w);
// {"body": ["L", "R"], "tail": "psi1"}; body letters may also be
// "lambda"/"rho" or the Greek letters.
AutWord autword_from_json(const json& j);

json to_json(const PE2Complex& x);
PE2Complex complex_from_json(const json& j);

json to_json(const NpcReport& r, const PE2Complex& x);

json to_json(const GbsGraph& g);
// {"vertices": n, "edges": [{"u": 0, "v": 1, "lu": 2, "lv": 3}]}
GbsGraph gbs_from_json(const json& j);
json to_json(const ThetaMap& t);
json to_json(const GbsClassification& c);

json to_json(const PeriodicWitness& w);
json to_json(const AnalysisReport& r);
json to_json(const Certificate& c);

// Graphviz exports.
std::string complex_to_dot(const PE2Complex& x, const std::string& name = "complex");
std::string link_to_dot(const PE2Complex& x, const LinkGraph& l, const std::string& name = "link");
std::string gbs_to_dot(const GbsGraph& g, const std::string& name = "gbs");

std::string angle_str(const Angle& a);  // "pi/2", "3pi/4", "pi", "0"

}  // namespace sqcx
