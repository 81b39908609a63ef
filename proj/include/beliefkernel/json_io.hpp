#pragma once

#include <json.hpp>

#include "beliefkernel/conditionals.hpp"
#include "beliefkernel/postulates.hpp"

namespace bk {

using json = nlohmann::ordered_json;

// Preorder JSON: {"signature": ["a","b"], "ranks": {"a b": 0, ...}}. The
// loader normalizes ranks and rejects missing, repeated or extra worlds.
json preorder_to_json(const TotalPreorder& order, const Signature& sig);
Signature signature_from_json(const json& j);
TotalPreorder preorder_from_json(const json& j, const Signature& sig);

json world_list_json(WorldMask mask, const Signature& sig);
json belief_set_json(WorldMask models, const Signature& sig);

json witness_to_json(const PostulateWitness& w, const PostulateInfo& p, const Signature& sig);
json verdict_to_json(const PostulateVerdict& v, const Signature& sig);
json bridge_report_to_json(const BridgeReport& r, const ChangeOperator& op, const Signature& sig);
json theorem_report_to_json(const TheoremReport& r, const Signature& sig);
json impossibility_report_to_json(const ImpossibilityReport& r, const Signature& sig);

}  // namespace bk
