#pragma once

// JSON forms of the library's values. Field order is fixed (insertion order)
// so serialized output is byte-stable. All indices are 0-based.
//
//   BlockMatrix  {"s","b","entries"}                 entries column-block-major
//   Design       {"b","r","l","sets"}
//   Partition    {"s","b","m","r","l","groups"}      groups: [[[row,col],...],...]
//   RegimeReport {"p1","p2","q1","q2","verdict","case","d0_exponents"}
//                exponents as "inf" / "3" / "3/2", rationals as "num/den"

#include <nlohmann/json.hpp>

#include "mixwidth/design.hpp"
#include "mixwidth/norms.hpp"
#include "mixwidth/partition.hpp"
#include "mixwidth/pipeline.hpp"
#include "mixwidth/widths.hpp"

namespace mixwidth {

using Json = nlohmann::ordered_json;

Json to_json(const BlockMatrix& x);
BlockMatrix block_matrix_from_json(const Json& j);

Json to_json(const Design& design);
Design design_from_json(const Json& j);
Json to_json(const DesignReport& report);

Json to_json(const Partition& partition);
Partition partition_from_json(const Json& j);
Json to_json(const PartitionReport& report);

/// Lambda, errors and dimension; the approximant itself only on request.
Json to_json(const ApproxResult& result, bool include_approximant = false);

Json to_json(const RegimeReport& report);
Json to_json(const RigidityCertificate& cert);
Json to_json(const NonRigidityWitness& witness);
Json to_json(const SizeEvaluation& eval);

}  // namespace mixwidth
