#include "indgap/json_io.hpp"

#include "indgap/graph_io.hpp"

namespace indgap {

using nlohmann::json;

json to_json(const VertexSet& s) { return json(s.to_vector()); }

json to_json(const GapReport& r) {
  return json{{"alpha", r.alpha},
              {"idom", r.idom},
              {"gap", r.gap},
              {"omega", r.omega},
              {"theta", r.theta},
              {"semi_perfect", r.semi_perfect},
              {"witnesses", {{"I1", to_json(r.max_witness)}, {"I2", to_json(r.min_witness)}}}};
}

json to_json(const CliquePartition& p) {
  json out = json::array();
  for (const auto& c : p.cliques()) out.push_back(to_json(c));
  return out;
}

json to_json(const TightnessCertificate& c) {
  json out{{"verdict", c.verdict}};
  if (!c.verdict) {
    out["witness_cliques"] = c.witness_cliques;
    out["witness_set"] = to_json(c.witness_set);
  }
  return out;
}

json to_json(const GadgetArtifact& a) {
  json roles = json::array();
  for (int v = 0; v < a.graph.order(); ++v) {
    const RoleEntry& e = a.roles[v];
    json entry{{"vertex", v}, {"role", to_string(e.role)}};
    if (e.role == VertexRole::v_type || e.role == VertexRole::u_type) {
      entry["row"] = e.row;
      entry["column"] = e.column;
    }
    roles.push_back(entry);
  }
  json edges = json::array();
  for (const auto& [u, v, kind] : a.edge_kinds) {
    edges.push_back(json{{"u", u}, {"v", v}, {"kind", to_string(kind)}});
  }
  json params{{"source_n", a.source_n}, {"k", a.k}};
  if (a.star_leaves >= 0) params["star_leaves"] = a.star_leaves;
  json out{{"graph6", to_graph6(a.graph)}, {"role_map", roles}, {"edge_kinds", edges}, {"params", params}};
  if (a.witness) out["witness"] = to_json(*a.witness);
  return out;
}

json to_json(const GadgetClaimsReport& r) {
  return json{{"idom_is_k_minus_1", r.idom_is_k_minus_1},
              {"gap_at_most_one", r.gap_at_most_one},
              {"alpha_iff", r.alpha_iff},
              {"wellcovered_iff", r.wellcovered_iff},
              {"alpha_source", r.alpha_source},
              {"alpha_gadget", r.alpha_gadget},
              {"idom_gadget", r.idom_gadget},
              {"all", r.all()}};
}

json to_json(const Theorem3Report& r) {
  return json{{"has_k_tight_partition", r.has_k_tight_partition},
              {"has_k_tight_alpha_partition", r.has_k_tight_alpha_partition},
              {"all_alpha_partitions_k_tight", r.all_alpha_partitions_k_tight},
              {"gap_at_most_k_minus_1", r.gap_at_most_k_minus_1},
              {"partitions_checked", r.partitions_checked},
              {"alpha_partitions_checked", r.alpha_partitions_checked},
              {"consistent", r.consistent()}};
}

json to_json(const RecognitionResult& r) {
  json out{{"verdict", r.verdict}, {"provisional", r.provisional}};
  if (r.witness_member) out["witness_member"] = *r.witness_member;
  if (r.witness_vertices) out["witness_vertices"] = to_json(*r.witness_vertices);
  return out;
}

}  // namespace indgap
