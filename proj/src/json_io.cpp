#include "beliefkernel/json_io.hpp"

namespace bk {

json preorder_to_json(const TotalPreorder& order, const Signature& sig) {
  json ranks = json::object();
  for (int w = 0; w < sig.world_count(); ++w)
    ranks[world_name(World{w}, sig)] = order.rank(w);
  return json{{"signature", sig.atoms()}, {"ranks", std::move(ranks)}};
}

Signature signature_from_json(const json& j) {
  if (!j.is_array()) throw InvalidValueError("signature must be an array of atom names");
  std::vector<std::string> atoms;
  for (const auto& a : j) {
    if (!a.is_string()) throw InvalidValueError("atom names must be strings");
    atoms.push_back(a.get<std::string>());
  }
  return Signature(std::move(atoms));
}

TotalPreorder preorder_from_json(const json& j, const Signature& sig) {
  if (!j.is_object() || !j.contains("ranks") || !j["ranks"].is_object())
    throw InvalidValueError("preorder JSON needs a \"ranks\" object");
  if (j.contains("signature") && signature_from_json(j["signature"]) != sig)
    throw InvalidValueError("preorder signature does not match");
  std::vector<std::uint8_t> ranks(sig.world_count(), 0);
  std::vector<bool> seen(sig.world_count(), false);
  for (const auto& [key, value] : j["ranks"].items()) {
    const World w = world_from_name(key, sig);
    if (seen[w.index]) throw InvalidValueError("world '" + key + "' listed twice");
    if (!value.is_number_integer() || value.get<long long>() < 0 || value.get<long long>() > 255)
      throw InvalidValueError("rank of '" + key + "' must be a small non-negative integer");
    seen[w.index] = true;
    ranks[w.index] = static_cast<std::uint8_t>(value.get<long long>());
  }
  for (int w = 0; w < sig.world_count(); ++w)
    if (!seen[w])
      throw InvalidValueError("world '" + world_name(World{w}, sig) + "' missing from ranks");
  return TotalPreorder(std::move(ranks));
}

json world_list_json(WorldMask mask, const Signature& sig) {
  json out = json::array();
  for (const World w : worlds_in(mask)) out.push_back(world_name(w, sig));
  return out;
}

json belief_set_json(WorldMask models, const Signature& sig) {
  return json{{"formula", Formula::from_models(models, sig).text()},
              {"models", world_list_json(models, sig)}};
}

json witness_to_json(const PostulateWitness& w, const PostulateInfo& p, const Signature& sig) {
  json out;
  out["state"] = preorder_to_json(TotalPreorder{w.state_ranks}, sig);
  json formulas = json::object();
  formulas["alpha"] = Formula::from_models(w.alpha, sig).text();
  if (p.arity >= 2) formulas["beta"] = Formula::from_models(w.beta, sig).text();
  if (p.arity >= 3) formulas["gamma"] = Formula::from_models(w.gamma, sig).text();
  out["formulas"] = std::move(formulas);
  if (w.world1 >= 0)
    out["worlds"] = json::array(
        {world_name(World{w.world1}, sig), world_name(World{w.world2}, sig)});
  return out;
}

json verdict_to_json(const PostulateVerdict& v, const Signature& sig) {
  json scope{{"signature_size", v.signature_size},
             {"mode", v.quant.mode == QuantMode::Exhaustive ? "exhaustive" : "sampled"}};
  if (v.quant.mode == QuantMode::Sampled) {
    scope["seed"] = v.quant.seed;
    scope["samples"] = v.quant.samples;
  }
  json out{{"postulate", v.postulate},
           {"operator", v.op_name},
           {"scope", std::move(scope)},
           {"status", v.holds() ? "holds" : "fails"},
           {"checks_performed", v.checks_performed},
           {"vacuous", v.vacuous}};
  if (v.witness) {
    const PostulateInfo* p = find_postulate(v.postulate);
    out["witness"] = witness_to_json(*v.witness, *p, sig);
  }
  return out;
}

json bridge_report_to_json(const BridgeReport& r, const ChangeOperator& op, const Signature& sig) {
  json out{{"operator", op.name},
           {"flavor", op.flavor == OperatorFlavor::Contraction ? "contraction" : "revision"},
           {"status", r.holds ? "holds" : "fails"},
           {"checks_performed", r.checks_performed}};
  if (r.witness) {
    out["witness"] = json{{"state", preorder_to_json(TotalPreorder{r.witness->state_ranks}, sig)},
                          {"antecedent", Formula::from_models(r.witness->antecedent, sig).text()},
                          {"consequent", Formula::from_models(r.witness->consequent, sig).text()}};
  }
  return out;
}

json theorem_report_to_json(const TheoremReport& r, const Signature& sig) {
  json clusters = json::array();
  for (const auto& c : r.clusters) {
    json groups = json::array();
    for (const auto& g : c.groups) {
      json jg{{"name", g.name}, {"postulates", g.postulates}, {"holds", g.holds}};
      if (!g.holds) {
        jg["failed_postulate"] = g.failed_postulate;
        if (g.witness) {
          const PostulateInfo* p = find_postulate(g.failed_postulate);
          jg["witness"] = witness_to_json(*g.witness, *p, sig);
        }
      }
      groups.push_back(std::move(jg));
    }
    json jc{{"name", c.name}, {"applicable", c.applicable}, {"agree", c.agree},
            {"groups", std::move(groups)}};
    if (!c.guard.empty()) jc["guard"] = c.guard;
    clusters.push_back(std::move(jc));
  }
  json out{{"theorem", r.theorem},
           {"operator", r.op_name},
           {"signature_size", r.signature_size},
           {"agm_precondition", r.precondition_ok}};
  if (!r.precondition_ok) out["detail"] = r.precondition_detail;
  out["clusters"] = std::move(clusters);
  out["result"] = r.pass ? "PASS" : "FAIL";
  return out;
}

json impossibility_report_to_json(const ImpossibilityReport& r, const Signature& sig) {
  json out{{"postulate", r.postulate},
           {"operator", "all-contraction-compatible"},
           {"scope", json{{"signature_size", sig.atom_count()}, {"mode", "exhaustive"}}},
           {"status", r.verified ? "fails" : "undetermined"},
           {"checks_performed", r.assignments_checked}};
  if (r.example) {
    json formulas{{"alpha", Formula::from_models(r.example->alpha, sig).text()},
                  {"beta", Formula::from_models(r.example->beta, sig).text()}};
    if (r.example->gamma) formulas["gamma"] = Formula::from_models(r.example->gamma, sig).text();
    out["witness"] =
        json{{"assigned_order", preorder_to_json(TotalPreorder{r.example->assigned_ranks}, sig)},
             {"formulas", std::move(formulas)}};
  }
  return out;
}

}  // namespace bk
