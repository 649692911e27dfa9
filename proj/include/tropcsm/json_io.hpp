#ifndef TROPCSM_JSON_IO_HPP
#define TROPCSM_JSON_IO_HPP

#include <json.hpp>

#include "tropcsm/bergman.hpp"
#include "tropcsm/fan.hpp"
#include "tropcsm/matroid.hpp"
#include "tropcsm/noether.hpp"
#include "tropcsm/polynomial.hpp"

namespace tropcsm {

using json = nlohmann::ordered_json;

// Rationals travel as strings "p" or "p/q"; malformed input throws ParseError.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// {"n": int, "bases": [[int...]...]}, bases sorted lexicographically on output.
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

json polynomial_to_json(const Polynomial& p, const std::string& var);

// {"ambient_dim", "dim", "cells": [{"rays", "lineality", "weight",
//  optional "apex"}...]}; an absent apex means the origin.
json fan_to_json(const WeightedFan& f);
WeightedFan fan_from_json(const json& j);
json cycle_to_json(const PolyhedralCycle& c);
PolyhedralCycle cycle_from_json(const json& j);

// Fan schema plus a "chain" annotation (flats as element lists) per cell.
json bergman_to_json(const BergmanFan& bf);

// {"vertices": [[int,int,int]...]}
json polytope_to_json(const LatticePolytope3& p);
LatticePolytope3 polytope_from_json(const json& j);

// {"points": [[int,int,int]...], "tets": [[int,int,int,int]...]}
json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json load_json_file(const std::string& path);

} // namespace tropcsm

#endif
