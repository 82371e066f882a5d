#include "metrize/completion.hpp"

#include <cmath>

#include <json.hpp>

#include "metrize/metrization.hpp"
#include "metrize/shortest_path.hpp"

namespace metrize {

CompletionSpec default_completion_spec(const WeightedGraph& g) {
  auto comps = connected_components(g);
  CompletionSpec spec;
  for (const auto& c : comps) spec.anchors.push_back(c.front());
  spec.base = 0;
  spec.constants.assign(comps.size(), 1.0);
  if (!comps.empty()) spec.constants[0] = 0.0;
  return spec;
}

void validate_completion_spec(const WeightedGraph& g, const CompletionSpec& spec) {
  const auto comp = component_index(g);
  const std::size_t k = connected_components(g).size();
  if (spec.anchors.size() != k || spec.constants.size() != k) {
    throw PreconditionError("completion spec must list one anchor and one constant per component");
  }
  if (k > 0 && spec.base >= k) throw PreconditionError("base component out of range");
  for (std::size_t i = 0; i < k; ++i) {
    if (spec.anchors[i] >= g.vertex_count() || comp[spec.anchors[i]] != i) {
      throw PreconditionError("anchor of component " + std::to_string(i) + " lies outside it");
    }
    if (!std::isfinite(spec.constants[i]) || spec.constants[i] < 0.0) {
      throw PreconditionError("completion constants must be finite and nonnegative");
    }
  }
  if (k > 0 && spec.constants[spec.base] != 0.0) {
    throw PreconditionError("constant of the base component must be 0");
  }
}

DistanceMatrix complete_disconnected(const WeightedGraph& g, const CompletionSpec& spec, double eps) {
  validate_completion_spec(g, spec);
  if (!check_metrizable(g, eps).metrizable) throw PreconditionError("weight is not metrizable");
  const auto comp = component_index(g);
  DistanceMatrix d = all_pairs_distance(g);
  const std::size_t n = g.vertex_count();
  // Offset of each vertex from the base: a_i + d(u, anchor_i).
  std::vector<double> reach(n);
  for (VertexId u = 0; u < n; ++u) {
    reach[u] = spec.constants[comp[u]] + d.at(u, spec.anchors[comp[u]]);
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (comp[u] != comp[v]) d.set_symmetric(u, v, reach[u] + reach[v]);
    }
  }
  return d;
}

WeightedGraph star_supergraph(const WeightedGraph& g, const CompletionSpec& spec) {
  validate_completion_spec(g, spec);
  std::vector<LabeledEdge> extra;
  for (std::size_t i = 0; i < spec.anchors.size(); ++i) {
    if (i == spec.base) continue;
    extra.push_back({g.label(spec.anchors[i]), g.label(spec.anchors[spec.base]), spec.constants[i]});
  }
  return g.with_edges(extra);
}

CompletionSpec parse_completion_spec(const WeightedGraph& g, std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("invalid completion spec JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "completion spec must be a JSON object");

  CompletionSpec spec = default_completion_spec(g);
  const auto comp = component_index(g);
  auto component_of_rep = [&](const std::string& rep) {
    auto v = g.find(rep);
    auto comps = connected_components(g);
    if (!v || comps[comp[*v]].front() != *v) {
      throw ParseError(0, "'" + rep + "' is not the smallest label of a component");
    }
    return comp[*v];
  };
  try {
    if (doc.contains("base")) {
      std::size_t old_base = spec.base;
      spec.base = component_of_rep(doc.at("base").get<std::string>());
      // The default constants follow the base unless given explicitly.
      spec.constants[old_base] = 1.0;
      spec.constants[spec.base] = 0.0;
    }
    if (doc.contains("anchors")) {
      for (const auto& [rep, label] : doc.at("anchors").items()) {
        auto v = g.find(label.get<std::string>());
        if (!v) throw ParseError(0, "unknown anchor '" + label.get<std::string>() + "'");
        spec.anchors[component_of_rep(rep)] = *v;
      }
    }
    if (doc.contains("constants")) {
      for (const auto& [rep, value] : doc.at("constants").items()) {
        spec.constants[component_of_rep(rep)] = value.get<double>();
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed completion spec: ") + e.what());
  }
  try {
    validate_completion_spec(g, spec);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return spec;
}

std::string to_completion_json(const WeightedGraph& g, const CompletionSpec& spec) {
  using nlohmann::json;
  auto comps = connected_components(g);
  json anchors = json::object();
  json constants = json::object();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& rep = g.label(comps[i].front());
    anchors[rep] = g.label(spec.anchors.at(i));
    constants[rep] = spec.constants.at(i);
  }
  json doc{{"anchors", anchors}, {"constants", constants}};
  doc["base"] = comps.empty() ? json(nullptr) : json(g.label(comps[spec.base].front()));
  return doc.dump();
}

}  // namespace metrize
