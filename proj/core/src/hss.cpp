#include "hssv/hss.hpp"

#include <algorithm>

namespace hssv {

WeightSet::WeightSet(RootSystemPtr rs, const std::vector<Root>& weights) : rs_(std::move(rs)) {
  for (const auto& w : weights) insert(w);
}

void WeightSet::insert(const Root& r) {
  if (!rs_ || !rs_->is_root(r)) {
    throw Error(ErrorCode::kDomain, rs_ ? r.to_string(rs_->diagram()) : "weight",
                "weight set members must be roots");
  }
  auto it = std::lower_bound(w_.begin(), w_.end(), r);
  if (it == w_.end() || *it != r) w_.insert(it, r);
}

bool WeightSet::contains(const Root& r) const { return std::binary_search(w_.begin(), w_.end(), r); }

namespace {

void require_one_mark_per_component(const MarkedDiagram& md) {
  if (md.empty()) return;
  const auto& d = md.diagram();
  std::vector<int> count(d.components().size(), 0);
  for (NodeIndex m : md.marks()) ++count[d.component_of(m)];
  for (std::size_t c = 0; c < count.size(); ++c) {
    if (count[c] != 1) {
      throw Error(ErrorCode::kInvalidMarking, md.literal(),
                  "component " + d.components()[c].name() + " of " + md.literal() + " carries no mark");
    }
  }
}

}  // namespace

WeightSet noncompact_positive_roots(const MarkedDiagram& md) {
  if (md.empty()) return {};
  require_one_mark_per_component(md);
  WeightSet out(md.root_system_ptr());
  for (const auto& beta : md.root_system().positive_roots()) {
    for (NodeIndex m : md.marks()) {
      if (beta[m] == 1) {
        out.insert(beta);
        break;
      }
    }
  }
  return out;
}

std::size_t hss_dimension(const MarkedDiagram& md) { return noncompact_positive_roots(md).size(); }

TangentSpace psi_gamma(const MarkedDiagram& md) {
  require_one_mark_per_component(md);
  const NodeIndex g = md.mark();
  const RootSystem& rs = md.root_system();
  const Root gamma = rs.simple_root(g);
  TangentSpace out{WeightSet(md.root_system_ptr()), true};
  for (const auto& mu : noncompact_positive_roots(md)) {
    const Root diff = mu - gamma;
    if (!diff.is_zero() && rs.is_root(diff)) out.weights.insert(mu);
  }
  return out;
}

MarkedDiagram vmrt_diagram(const MarkedDiagram& md) {
  if (md.empty() || md.diagram().components().size() != 1) {
    throw Error(ErrorCode::kInvalidMarking, md.literal(), "VMRT operator needs an irreducible marked diagram");
  }
  const NodeIndex g = md.mark();
  const auto& d = md.diagram();
  std::vector<NodeIndex> keep;
  for (NodeIndex i = 0; i < d.size(); ++i) {
    if (i != g) keep.push_back(i);
  }
  if (keep.empty()) return {};
  DynkinDiagram sub = d.induced(keep);
  std::vector<NodeIndex> marks;
  for (NodeIndex n : d.neighbors(g)) marks.push_back(sub.index_of(d.label(n)));
  return MarkedDiagram(build_root_system(std::move(sub)), std::move(marks));
}

std::vector<MarkedDiagram> vmrt_chain(const MarkedDiagram& start, std::size_t steps) {
  std::vector<MarkedDiagram> chain{start};
  for (std::size_t k = 0; k < steps; ++k) {
    const MarkedDiagram& last = chain.back();
    if (last.empty() || last.diagram().components().size() != 1) break;
    chain.push_back(vmrt_diagram(last));
  }
  return chain;
}

}  // namespace hssv
