#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

#include "dets2/geometry.hpp"
#include "dets2/oracle.hpp"
#include "dets2/system.hpp"

// JSON wire formats. All scalars travel as strings ("a/b" or "a" over the
// rationals, decimal residues over a prime field); edges as 1-based "i,j"
// keys. Parsers validate everything and name the offending key on failure.

namespace dets2 {

using json = nlohmann::json;

using Instance = std::variant<EdgeTensor<Rational>, EdgeTensor<Fp>>;
using PointsInstance = std::variant<PointConfig<Rational>, PointConfig<Fp>>;

json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

std::string edge_key(Edge e);
Edge parse_edge_key(const std::string& key, int d);

// "rational" | {"prime": p}
FieldSpec parse_field_spec(const json& j);
json field_spec_json(const FieldSpec& spec);

// { "d": 2, "field": ..., "vectors": { "1,2": ["1","0"], ... } }
Instance parse_instance(const json& j);
json instance_json(const EdgeTensor<Rational>& t);
json instance_json(const EdgeTensor<Fp>& t);

// { "d": 3, "colors": { "1,2": 1, ... } }
Partition parse_partition(const json& j);
json partition_json(const Partition& p);

// { "d": 2, "field": ..., "points": [["0","0"], ...] }
PointsInstance parse_points(const json& j);
json points_json(const PointConfig<Rational>& c);
json points_json(const PointConfig<Fp>& c);

json matrix_json(const SystemMatrix<Rational>& sm);
json matrix_json(const SystemMatrix<Fp>& sm);

json witness_json(const KernelWitness<Rational>& w);
json witness_json(const KernelWitness<Fp>& w);

json golden_json(const GoldenValues& g);
GoldenValues parse_golden(const json& j);

} // namespace dets2
