#pragma once

// JSON formats:
//
//   graph:   {"vertices": ["a+", ...],
//             "edges": [{"u": "a+", "v": "b+", "len_deg": 98.213, "tag": "alpha_ab"}, ...]}
//            each edge carries exactly one of len_deg / len_rad.
//   artin:   {"generators": ["a", "b", "c"],
//             "relations": [{"pair": ["a", "b"], "m": 5}, ...]}   omitted pairs are infinite
//   deltas:  {"deltas_deg": {"a,b": 59.55, ...}}  or  {"auto": "symmetric"}

#include <filesystem>
#include <string>

#include <json.hpp>

#include "curvlink/links.hpp"
#include "curvlink/metric_graph.hpp"

namespace curvlink::io {

using nlohmann::json;

/// Malformed input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json graph_to_json(const MetricGraph& g);
MetricGraph graph_from_json(const json& j);

json artin_to_json(const ArtinDefiningGraph& g);
ArtinDefiningGraph artin_from_json(const json& j);

json deltas_to_json(const ArtinDefiningGraph& g, const DeltaAssignment& d);
DeltaAssignment deltas_from_json(const ArtinDefiningGraph& g, const json& j);

json witness_to_json(const MetricGraph& g, const CycleWitness& w);

json read_json_file(const std::filesystem::path& path);

}  // namespace curvlink::io
