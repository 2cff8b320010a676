#ifndef SATKIT_JSON_OUT_HPP
#define SATKIT_JSON_OUT_HPP

#include "satkit/graph.hpp"
#include "satkit/oracle.hpp"
#include "satkit/threshold.hpp"
#include "satkit/weight.hpp"

#include <json.hpp>

namespace satkit {

using json = nlohmann::ordered_json;

json graph_json(const Graph& g);
json embedding_json(const Embedding& e);
json verdict_json(const SaturationVerdict& v);
json weight_report_json(const WeightReport& r);
json lower_bound_json(const LowerBound& b);
json automaton_state_json(const AutomatonState& s);
json sat_result_json(const SatResult& r);
json probe_json(const SharpnessProbe& p);

std::string edge_key(const Edge& e);

}  // namespace satkit

#endif
