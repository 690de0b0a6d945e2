#include "hssv/normalbundle.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace hssv {

WeightSet normal_weights(const DeletionPair& pair) {
  const RootCorrespondence phi = root_correspondence(pair);
  WeightSet out(pair.ambient().root_system_ptr());
  for (const Root& w : noncompact_positive_roots(pair.ambient())) {
    if (!phi.image().contains(w)) out.insert(w);
  }
  return out;
}

NormalDecomposition levi_components(const DeletionPair& pair) {
  const RootCorrespondence phi = root_correspondence(pair);
  NormalDecomposition out;
  out.normal_weights = normal_weights(pair);

  std::vector<Root> steps;
  for (NodeIndex i = 0; i < pair.sub().diagram().size(); ++i) {
    if (i != pair.sub_gamma0()) steps.push_back(phi.on_simple()[i]);
  }

  const auto& ws = out.normal_weights.weights();
  std::map<Root, std::size_t> where;
  for (std::size_t k = 0; k < ws.size(); ++k) where.emplace(ws[k], k);
  std::vector<int> comp(ws.size(), -1);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t start = 0; start < ws.size(); ++start) {
    if (comp[start] >= 0) continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    std::queue<std::size_t> q;
    q.push(start);
    comp[start] = c;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      members[c].push_back(v);
      for (const Root& s : steps) {
        for (const Root& nb : {ws[v] + s, ws[v] - s}) {
          auto it = where.find(nb);
          if (it != where.end() && comp[it->second] < 0) {
            comp[it->second] = c;
            q.push(it->second);
          }
        }
      }
    }
  }

  for (const auto& m : members) {
    WeightSet set(pair.ambient().root_system_ptr());
    for (std::size_t k : m) set.insert(ws[k]);
    out.components.push_back(std::move(set));
  }
  std::sort(out.components.begin(), out.components.end(), [](const WeightSet& a, const WeightSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.weights().front() < b.weights().front();
  });

  int singletons = 0;
  for (const auto& c : out.components) {
    if (c.size() == 1) {
      ++singletons;
      out.singleton_component = c.weights().front();
    }
    // Maximal: no compact step raises it inside the component.
    std::optional<Root> top;
    for (const Root& w : c) {
      bool maximal = true;
      for (const Root& s : steps) maximal = maximal && !c.contains(w + s);
      if (maximal && (!top || top->height() < w.height())) top = w;
    }
    out.highest_weights.push_back(*top);
  }
  if (singletons != 1) out.singleton_component.reset();
  return out;
}

namespace {

bool is_hyperquadric(const MarkedDiagram& md) {
  const auto& ct = md.diagram().components().front();
  const int k = ct.bourbaki_index(md.mark());
  // D4 is a hyperquadric for every mark by triality.
  return ct.family == Family::B || (ct.family == Family::D && (k == 1 || ct.rank == 4));
}

}  // namespace

CheckReport summands_distinct(const DeletionPair& pair) {
  CheckReport r;
  r.check_id = "normal_bundle";
  r.subject = pair.id();
  const NormalDecomposition nd = levi_components(pair);
  const DynkinDiagram& d = pair.ambient().diagram();

  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t k = 0; k < nd.components.size(); ++k) {
    nlohmann::json ws = nlohmann::json::array();
    for (const Root& w : nd.components[k]) ws.push_back(weight_json(w, d));
    comps.push_back({{"size", nd.components[k].size()},
                     {"highest_weight", weight_json(nd.highest_weights[k], d)},
                     {"weights", ws}});
  }
  r.data["normal_rank"] = nd.normal_weights.size();
  r.data["components"] = comps;
  r.data["singleton"] = nd.singleton_component ? weight_json(*nd.singleton_component, d) : nlohmann::json();
  r.notes = "irreducibility certified only by Levi-root connectivity of the weights";

  const bool quadric = is_hyperquadric(pair.ambient());
  if (quadric || nd.components.size() != 2) {
    r.status = Status::kIndeterminate;
    r.append_note(std::to_string(nd.components.size()) + " Levi components" +
                  (quadric ? "; hyperquadric ambient, excluded by the distinctness argument" : ""));
    for (const Root& h : nd.highest_weights) r.add_witness(weight_json(h, d));
    return r;
  }
  r.add_witness(weight_json(nd.highest_weights[0], d));
  r.add_witness(weight_json(nd.highest_weights[1], d));
  if (nd.highest_weights[0] == nd.highest_weights[1]) r.fail("highest weights coincide");
  if (nd.components[0].size() == nd.components[1].size()) r.fail("components have equal size");
  return r;
}

}  // namespace hssv
