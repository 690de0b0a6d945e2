#include "hssv/pairs.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace hssv {

DeletionPair::DeletionPair(MarkedDiagram ambient, NodeIndex gamma0)
    : ambient_(std::move(ambient)), gamma0_(gamma0) {
  if (ambient_.empty() || ambient_.diagram().components().size() != 1) {
    throw Error(ErrorCode::kInvalidMarking, ambient_.literal(),
                "a deletion pair needs an irreducible marked diagram");
  }
  const DynkinDiagram& d = ambient_.diagram();
  if (gamma0 >= d.size()) {
    throw Error(ErrorCode::kUnknownLabel, std::to_string(gamma0), "gamma0 is not a node");
  }
  const NodeIndex g = ambient_.mark();
  chain_ = deletion_chain(d, g, gamma0);
  sub_ = delete_chain(ambient_, gamma0);

  chain_sum_ = Root::zero(d.size());
  auto path = *d.path(g, gamma0);
  for (std::size_t k = 1; k < path.size(); ++k) chain_sum_ += Root::simple(d.size(), path[k]);

  const DynkinDiagram& sd = sub_.diagram();
  for (NodeIndex i = 0; i < sd.size(); ++i) to_ambient_.push_back(d.index_of(sd.label(i)));
}

Root DeletionPair::embed(const Root& sub_root) const {
  if (sub_root.size() != sub_.diagram().size()) {
    throw Error(ErrorCode::kDomain, id(), "root does not belong to the sub diagram");
  }
  std::vector<int> c(ambient_.diagram().size(), 0);
  for (NodeIndex i = 0; i < sub_root.size(); ++i) c[to_ambient_[i]] = sub_root[i];
  return Root(std::move(c));
}

std::string DeletionPair::id() const {
  return ambient_.literal() + "/" + ambient_.diagram().label(gamma0_);
}

std::string DeletionPair::name() const {
  return "(" + sub_.space_name() + " ⊂ " + ambient_.space_name() + ")";
}

DeletionPair parse_pair_id(std::string_view id) {
  const auto slash = id.rfind('/');
  if (slash == std::string_view::npos || slash + 1 >= id.size()) {
    throw Error(ErrorCode::kParse, std::string(id), "pair id must look like 'E7:a7/a6'");
  }
  MarkedDiagram ambient = MarkedDiagram::parse(id.substr(0, slash));
  const auto g0 = ambient.diagram().find(id.substr(slash + 1));
  if (!g0) {
    throw Error(ErrorCode::kUnknownLabel, std::string(id.substr(slash + 1)),
                "no node '" + std::string(id.substr(slash + 1)) + "' in " + ambient.literal());
  }
  return DeletionPair(std::move(ambient), *g0);
}

namespace {

MarkedDiagram standard_marked(Family f, int rank, int mark_bourbaki) {
  auto rs = build_root_system(DynkinDiagram::standard(f, rank));
  return MarkedDiagram(rs, {static_cast<NodeIndex>(mark_bourbaki - 1)});
}

}  // namespace

std::vector<CatalogEntry> catalog(int max_rank) {
  if (max_rank < 4) {
    throw Error(ErrorCode::kConfig, std::to_string(max_rank), "max_rank must be at least 4");
  }
  std::vector<CatalogEntry> out;
  for (int n = 3; n <= max_rank; ++n) {
    for (int m = 2; m <= n - 1; ++m) {
      out.push_back({"B_n", DeletionPair(standard_marked(Family::B, n, 1), m - 1)});
    }
  }
  for (int n = 4; n <= max_rank; ++n) {
    out.push_back({"D_n (gamma=a_n)", DeletionPair(standard_marked(Family::D, n, n), n - 3)});
  }
  for (int n = 5; n <= max_rank; ++n) {
    for (int m = 2; m <= n - 2; ++m) {
      out.push_back({"D_n (gamma=a_1)", DeletionPair(standard_marked(Family::D, n, 1), m - 1)});
    }
  }
  if (max_rank >= 6) {
    for (int g0 : {5, 4}) out.push_back({"E6", DeletionPair(standard_marked(Family::E, 6, 6), g0 - 1)});
  }
  if (max_rank >= 7) {
    for (int g0 : {6, 5, 4}) {
      out.push_back({"E7", DeletionPair(standard_marked(Family::E, 7, 7), g0 - 1)});
    }
  }
  return out;
}

Root RootCorrespondence::apply(const Root& sub_root) const {
  if (sub_root.size() != simple_images_.size()) {
    throw Error(ErrorCode::kDomain, pair_.id(), "root does not belong to the sub diagram");
  }
  Root out = Root::zero(pair_.ambient().diagram().size());
  for (NodeIndex i = 0; i < sub_root.size(); ++i) out += sub_root[i] * simple_images_[i];
  return out;
}

RootCorrespondence root_correspondence(const DeletionPair& pair) {
  RootCorrespondence phi(pair);
  const DynkinDiagram& sd = pair.sub().diagram();
  const RootSystem& ambient = pair.ambient().root_system();
  const std::size_t n = ambient.rank();
  const NodeIndex g0 = pair.sub_gamma0();

  for (NodeIndex i = 0; i < sd.size(); ++i) {
    if (i == g0) {
      phi.simple_images_.push_back(Root::simple(n, pair.gamma()));
    } else if (sd.adjacent(i, g0)) {
      phi.simple_images_.push_back(Root::simple(n, pair.to_ambient(i)) + pair.chain_sum());
    } else {
      phi.simple_images_.push_back(Root::simple(n, pair.to_ambient(i)));
    }
  }

  for (NodeIndex i = 0; i < sd.size(); ++i) {
    for (NodeIndex j = i; j < sd.size(); ++j) {
      const long lhs = ambient.inner_product(phi.simple_images_[i], phi.simple_images_[j]);
      if (lhs != sd.inner(i, j)) {
        throw Error(ErrorCode::kCorrespondence, sd.label(i) + "," + sd.label(j),
                    "Phi does not preserve (" + sd.label(i) + "," + sd.label(j) + ") in " + pair.id());
      }
    }
  }

  const WeightSet target = noncompact_positive_roots(pair.ambient());
  phi.image_ = WeightSet(pair.ambient().root_system_ptr());
  for (const auto& beta : noncompact_positive_roots(pair.sub())) {
    const Root img = phi.apply(beta);
    if (!target.contains(img)) {
      throw Error(ErrorCode::kCorrespondence, beta.to_string(sd),
                  "Phi(" + beta.to_string(sd) + ") = " + img.to_string(ambient.diagram()) +
                      " is not a noncompact positive root of " + pair.ambient().literal());
    }
    if (phi.image_.contains(img)) {
      throw Error(ErrorCode::kCorrespondence, beta.to_string(sd),
                  "Phi is not injective at " + beta.to_string(sd));
    }
    phi.image_.insert(img);
  }
  return phi;
}

namespace {

std::optional<DeletionPair> try_pair(const MarkedDiagram& ambient, NodeIndex gamma0) {
  try {
    return DeletionPair(ambient, gamma0);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::set<std::string> label_set(const DynkinDiagram& d) { return {d.labels().begin(), d.labels().end()}; }

// An intermediate step X0 ⊂ X1 ⊂ X, if one exists.
std::optional<std::pair<DeletionPair, DeletionPair>> split(const DeletionPair& pair) {
  const DynkinDiagram& d = pair.ambient().diagram();
  const std::string g0_label = d.label(pair.gamma0());
  const auto target = label_set(pair.sub().diagram());
  for (NodeIndex g1 = 0; g1 < d.size(); ++g1) {
    if (g1 == pair.gamma() || g1 == pair.gamma0()) continue;
    auto upper = try_pair(pair.ambient(), g1);
    if (!upper) continue;
    const auto inner_g0 = upper->sub().diagram().find(g0_label);
    if (!inner_g0) continue;
    auto lower = try_pair(upper->sub(), *inner_g0);
    if (!lower) continue;
    if (label_set(lower->sub().diagram()) == target) return std::make_pair(*upper, *lower);
  }
  return std::nullopt;
}

void refine(const DeletionPair& pair, std::vector<DeletionPair>& out) {
  auto s = split(pair);
  if (!s) {
    out.push_back(pair);
    return;
  }
  refine(s->first, out);
  refine(s->second, out);
}

}  // namespace

MaximalityVerdict is_maximal(const DeletionPair& pair) {
  MaximalityVerdict v;
  refine(pair, v.refinement);
  v.maximal = v.refinement.size() == 1;
  return v;
}

}  // namespace hssv
