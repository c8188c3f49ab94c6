#pragma once

#include "braidlab/hopf.hpp"
#include "braidlab/operad.hpp"
#include "braidlab/structure.hpp"

#include <json.hpp>

namespace braidlab {

// Machine-readable reports; key order is insertion order, so identical
// inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json json_dims(const std::vector<size_t>& dims);
Json json_bigraded(const BigradedDims& dims);
Json json_subspace(const Subspace& s);
Json json_tower(const TowerReport& t);
Json json_pbw(const PbwReport& r);
Json json_perfect_structure(const PerfectStructureReport& r);
Json json_rank(const RankReport& r);
Json json_counterexample(const CounterexampleReport& r);
Json json_algebra_element(const GroupAlgebraElement& x);
Json json_hurwitz(const HurwitzReport& r);

}  // namespace braidlab
