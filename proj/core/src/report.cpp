#include "braidlab/report.hpp"

namespace braidlab {

Json json_dims(const std::vector<size_t>& dims) {
    Json a = Json::array();
    for (size_t d : dims) a.push_back(d);
    return a;
}

Json json_bigraded(const BigradedDims& dims) {
    // rows indexed by word length p, columns by weight q
    Json a = Json::array();
    for (const auto& row : dims) {
        Json r = Json::array();
        for (size_t d : row) r.push_back(d);
        a.push_back(r);
    }
    return a;
}

Json json_subspace(const Subspace& s) {
    Json out;
    out["ambient_dim"] = s.ambient_dim();
    out["dim"] = s.dim();
    Json rows = Json::array();
    for (size_t r = 0; r < s.dim(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < s.ambient_dim(); ++c) row.push_back(s.basis().at(r, c).str());
        rows.push_back(row);
    }
    out["basis"] = rows;
    return out;
}

Json json_tower(const TowerReport& t) {
    Json out;
    out["stages_built"] = t.stages_built;
    out["stabilized"] = t.stabilized;
    if (t.stabilized) out["stable_stage"] = t.stable_stage;
    out["dim_conservation"] = t.dim_conservation;
    Json stab = Json::array();
    for (bool b : t.stabilization_ok) stab.push_back(b);
    out["stabilization_ok"] = stab;
    Json stages = Json::array();
    for (const auto& s : t.stage_dims) stages.push_back(json_bigraded(s));
    out["stage_dims"] = stages;
    out["a_infinity"] = json_bigraded(t.a_infinity);
    return out;
}

Json json_pbw(const PbwReport& r) {
    Json out;
    out["passed"] = r.passed;
    out["conservation"] = r.conservation;
    out["stabilization"] = r.stabilization;
    out["nichols_property"] = r.nichols_property;
    out["two_route_match"] = r.two_route_match;
    out["p_dims"] = json_dims(r.p_dims);
    out["q_dims"] = json_dims(r.q_dims);
    out["nichols_route"] = json_bigraded(r.nichols_route);
    out["tower"] = json_tower(r.tower);
    return out;
}

Json json_perfect_structure(const PerfectStructureReport& r) {
    Json out;
    out["passed"] = r.passed;
    out["generators_primitive"] = r.generators_primitive;
    out["direct_sum"] = r.direct_sum;
    out["decomposables_in_ker"] = r.decomposables_in_ker;
    out["primitives_in_pw"] = r.primitives_in_pw;
    out["tower_steps"] = r.tower_steps;
    out["p_dims"] = json_dims(r.p_dims);
    out["ker_a_dims"] = json_dims(r.ker_a_dims);
    out["pw_dims"] = json_dims(r.pw_dims);
    return out;
}

Json json_rank(const RankReport& r) {
    Json out;
    out["rank"] = r.rank;
    out["exact"] = r.reached_fixed_point;
    Json tower = Json::array();
    for (const auto& h : r.tower_hilbert) tower.push_back(json_dims(h));
    out["tower_hilbert"] = tower;
    return out;
}

Json json_counterexample(const CounterexampleReport& r) {
    Json out;
    out["half_period"] = r.half_period;
    out["intermediate"] = r.intermediate_str;
    out["symmetrized"] = r.final_str;
    out["nonzero"] = r.nonzero;
    return out;
}

Json json_algebra_element(const GroupAlgebraElement& x) {
    Json terms = Json::array();
    for (const auto& [g, c] : x.coeffs()) {
        Json t;
        t["element"] = g;
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    return terms;
}

Json json_hurwitz(const HurwitzReport& r) {
    Json out;
    out["orbit_size"] = r.orbit_size;
    out["product_invariant"] = r.product_invariant;
    out["stabilizer_found"] = r.stabilizer_found;
    out["word_bound"] = r.word_bound;
    if (r.stabilizer_found) out["stabilizer_word"] = r.stabilizer_word.str();
    return out;
}

}  // namespace braidlab
