#include "hssv/driver.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "hssv/chevalley.hpp"
#include "hssv/hss.hpp"
#include "hssv/normalbundle.hpp"
#include "hssv/projgeo/segre.hpp"
#include "hssv/sff.hpp"

namespace hssv {

using projgeo::BiVector;
using projgeo::Mat;
using projgeo::PrimeField;
using projgeo::RationalField;
using projgeo::Vec;
using nlohmann::json;

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  // FNV-1a over the tag, folded into the seed with a splitmix step.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Runs a check, converting computation errors into fail reports and timing it.
CheckReport guarded(const std::string& check_id, const std::string& subject, const std::function<CheckReport()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig || e.code() == ErrorCode::kParse) throw;
    r = CheckReport{};
    r.check_id = check_id;
    r.subject = subject;
    r.fail(e.what());
  } catch (const std::exception& e) {
    r = CheckReport{};
    r.check_id = check_id;
    r.subject = subject;
    r.fail(std::string("internal error: ") + e.what());
  }
  r.duration_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json weights_json(const WeightSet& w, const DynkinDiagram& d) {
  json out = json::array();
  for (const auto& r : w) out.push_back(weight_json(r, d));
  return out;
}

json tangent_json(const TangentSpace& t, const DynkinDiagram& d) {
  return {{"weights", weights_json(t.weights, d)}, {"radial", t.radial}, {"dimension", t.dimension()}};
}

template <class F>
json matrix_json(const F& f, const Mat<F>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(projgeo::vec_json(f, row));
  return out;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.max_rank < 4 || c.max_rank > 12) {
    throw Error(ErrorCode::kConfig, std::to_string(c.max_rank), "max_rank must lie in [4, 12]");
  }
  auto check_primes = [](const std::vector<std::uint32_t>& ps, std::uint32_t lo, std::uint32_t hi,
                         const char* what) {
    if (ps.empty()) throw Error(ErrorCode::kConfig, what, std::string(what) + " must not be empty");
    for (auto p : ps) {
      if (!projgeo::is_prime(p) || p < lo || p > hi) {
        throw Error(ErrorCode::kConfig, std::to_string(p),
                    std::string(what) + " entries must be primes in [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "], got " + std::to_string(p));
      }
    }
  };
  check_primes(c.primes_plucker, 3, 13, "primes_plucker");
  check_primes(c.primes_segre, 2, 7, "primes_segre");
}

json config_json(const RunConfig& c) {
  return {{"max_rank", c.max_rank},
          {"primes_plucker", c.primes_plucker},
          {"primes_segre", c.primes_segre},
          {"format", c.format == OutputFormat::kJson ? "json" : "markdown"},
          {"seed", c.seed},
          {"jacobi_triples", c.jacobi_triples},
          {"random_bivectors", c.random_bivectors},
          {"q_elements", c.q_elements}};
}

OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "markdown" || s == "md") return OutputFormat::kMarkdown;
  throw Error(ErrorCode::kParse, std::string(s), "unknown format '" + std::string(s) + "' (json or markdown)");
}

std::vector<std::uint32_t> parse_primes(std::string_view s) {
  std::vector<std::uint32_t> out;
  std::stringstream in{std::string(s)};
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        item.size() > 9) {
      throw Error(ErrorCode::kParse, std::string(s), "cannot parse prime list '" + std::string(s) + "'");
    }
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (out.empty()) throw Error(ErrorCode::kParse, std::string(s), "empty prime list");
  return out;
}

KernelMode parse_mode(std::string_view s) {
  if (s == "sigma") return KernelMode::kSigma;
  if (s == "tau") return KernelMode::kTau;
  throw Error(ErrorCode::kParse, std::string(s), "unknown mode '" + std::string(s) + "' (sigma or tau)");
}

CheckReport catalog_report(const DeletionPair& pair) {
  CheckReport r;
  r.check_id = "catalog.phi";
  r.subject = pair.id();
  const DynkinDiagram& ad = pair.ambient().root_system_ptr()->diagram();
  const DynkinDiagram& sd = pair.sub().root_system_ptr()->diagram();
  r.data["name"] = pair.name();
  r.data["sub"] = pair.sub().literal();
  r.data["chain_sum"] = weight_json(pair.chain_sum(), ad);
  try {
    const RootCorrespondence phi = root_correspondence(pair);
    json images = json::array();
    for (std::size_t i = 0; i < phi.on_simple().size(); ++i) {
      images.push_back({{"simple", sd.label(i)}, {"image", weight_json(phi.on_simple()[i], ad)}});
    }
    r.data["phi_on_simple"] = images;
    r.data["image_size"] = phi.image().size();
    r.data["sub_dimension"] = hss_dimension(pair.sub());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCorrespondence) throw;
    r.fail(e.what());
  }
  const MaximalityVerdict m = is_maximal(pair);
  json steps = json::array();
  for (const auto& s : m.refinement) steps.push_back(s.id());
  r.data["maximal"] = m.maximal;
  r.data["refinement"] = steps;
  return r;
}

CheckReport degeneracy_report(const DeletionPair& pair, KernelMode mode) {
  CheckReport r;
  r.check_id = mode == KernelMode::kSigma ? "degeneracy.sigma" : "degeneracy.tau";
  r.subject = pair.id();
  const SffContext ctx(pair);
  const DynkinDiagram& d = pair.ambient().root_system_ptr()->diagram();
  const KernelReport k = mode == KernelMode::kSigma ? kernel_sigma(ctx) : kernel_tau(ctx);
  r.data["kernel"] = tangent_json(k.kernel, d);
  r.data["sub_tangent"] = tangent_json(ctx.sub_tangent(), d);
  r.data["ambient_tangent_dimension"] = ctx.ambient_tangent().dimension();
  r.data["strict"] = k.strict;
  for (const auto& w : k.witnesses) r.add_witness(weight_json(w, d));

  if (mode == KernelMode::kSigma) {
    // gamma + beta for the node beta next to gamma on the deleted path.
    const auto path = d.path(pair.gamma(), pair.gamma0());
    const Root expected = ctx.gamma() + pair.ambient().root_system_ptr()->simple_root(path->at(1));
    r.data["expected_witness"] = weight_json(expected, d);
    const bool found = std::find(k.witnesses.begin(), k.witnesses.end(), expected) != k.witnesses.end();
    if (!k.strict) r.fail("the sigma kernel has no root weight");
    if (!found) r.fail("expected witness " + expected.to_string(d) + " is not in the kernel");
  } else {
    if (!k.strict) r.fail("the tau kernel does not strictly contain the sub tangent space");
  }
  return r;
}

CheckReport infinity_locus_report(const DeletionPair& pair) { return verify_infinity_locus(pair); }

CheckReport normal_bundle_report(const DeletionPair& pair) { return summands_distinct(pair); }

CheckReport vmrt_chain_report(const MarkedDiagram& start, std::size_t steps) {
  CheckReport r;
  r.check_id = "vmrt_chain";
  r.subject = start.literal();
  json chain = json::array();
  for (const auto& m : vmrt_chain(start, steps)) {
    chain.push_back({{"literal", m.literal()}, {"canonical", m.canonical_name()}, {"space", m.space_name()}});
  }
  r.data["chain"] = chain;
  return r;
}

CheckReport vmrt_chain_report(int max_rank) {
  static const std::vector<std::pair<int, std::string>> known = {
      {7, "E7:a7"}, {6, "E6:a6"}, {5, "D5:a5"}, {4, "A4:a2"}, {3, "A1+A2:a1,a2"}};
  std::size_t first = 0;
  while (first < known.size() && known[first].first > max_rank) ++first;
  CheckReport r = vmrt_chain_report(MarkedDiagram::parse(known[first].second), known.size() - first);
  json expected = json::array();
  for (std::size_t k = first; k < known.size(); ++k) expected.push_back(known[k].second);
  r.data["expected"] = expected;
  json got = json::array();
  for (const auto& step : r.data["chain"]) got.push_back(step["canonical"]);
  if (got != expected) r.fail("chain " + got.dump() + " differs from " + expected.dump());
  return r;
}

CheckReport pluecker_line_report() {
  CheckReport r;
  r.check_id = "pluecker.line";
  r.subject = "l = [e1^(t e2 + s e3)]";
  const RationalField f;
  const projgeo::QuadricSystem sys = projgeo::plucker_system();
  const Mat<RationalField> ell = projgeo::ell_basis(f);
  // q(t a + s b) = t^2 q(a) + t s (q(a+b) - q(a) - q(b)) + s^2 q(b).
  json coeffs = json::array();
  bool vanishes = true;
  for (const auto& q : sys.quadrics) {
    const auto qa = projgeo::eval_quadric(f, q, ell[0]);
    const auto qb = projgeo::eval_quadric(f, q, ell[1]);
    const auto qab = projgeo::eval_quadric(f, q, projgeo::lin_comb(f, f.one(), ell[0], f.one(), ell[1])) - qa - qb;
    coeffs.push_back({f.to_string(qa), f.to_string(qab), f.to_string(qb)});
    vanishes = vanishes && qa == 0 && qb == 0 && qab == 0;
  }
  r.data["restricted_quadric_coefficients"] = coeffs;
  r.data["basis"] = matrix_json(f, ell);
  if (!vanishes) r.fail("some Plücker quadric does not vanish identically on l");
  return r;
}

CheckReport pluecker_section_report(std::string_view point, const std::vector<std::uint32_t>& primes) {
  const RationalField f;
  const BiVector<RationalField> b = projgeo::parse_bivector(point);
  CheckReport r;
  r.check_id = "pluecker.section";
  r.subject = projgeo::bivector_to_string(f, b);
  const bool on_g = projgeo::grassmannian_membership(f, b);
  r.data["point"] = projgeo::vec_json(f, projgeo::canonical(f, b));
  r.data["on_grassmannian"] = on_g;
  if (on_g) r.data["x45_nonzero"] = projgeo::q_orbit_membership(f, b);
  const auto sec = projgeo::pluecker_section(b, primes);
  r.data["section"] = projgeo::section_json(f, sec);
  r.data["shape"] = {{"lines", sec.lines.size()},
                     {"isolated_points", sec.isolated_points.size()},
                     {"conics", sec.conics.size()},
                     {"plane", sec.contains_plane}};
  if (!on_g) r.append_note("the point is not on G(2,5)");
  return r;
}

CheckReport pluecker_collinear_report(std::string_view point) {
  const RationalField f;
  const BiVector<RationalField> b = projgeo::parse_bivector(point);
  CheckReport r;
  r.check_id = "pluecker.collinear";
  r.subject = projgeo::bivector_to_string(f, b);
  r.data["point"] = projgeo::vec_json(f, projgeo::canonical(f, b));
  r.data["subspace"] = matrix_json(f, projgeo::subspace_of(f, b));
  const auto w = projgeo::collinearity_scan(f, b);
  if (w) {
    r.data["witness"] = {{"parameter", projgeo::vec_json(f, w->parameter)},
                         {"common_vector", projgeo::vec_json(f, w->common)},
                         {"every_parameter", w->every_parameter}};
    // Independent confirmation: rank [W_b; e1; t e2 + s e3] <= 3.
    Mat<RationalField> m = projgeo::subspace_of(f, b);
    m.push_back(projgeo::unit_vec(f, 5, 0));
    m.push_back(projgeo::lin_comb(f, w->parameter[0], projgeo::unit_vec(f, 5, 1), w->parameter[1],
                                  projgeo::unit_vec(f, 5, 2)));
    if (projgeo::rank(f, m) > 3) r.fail("the reported parameter does not give a common vector");
  } else {
    r.data["witness"] = nullptr;
  }
  return r;
}

namespace {

CheckReport pluecker_expected_section(std::string_view point, const std::vector<std::uint32_t>& primes,
                                      std::size_t lines, std::size_t points) {
  CheckReport r = pluecker_section_report(point, primes);
  const json want = {{"lines", lines}, {"isolated_points", points}, {"conics", 0}, {"plane", false}};
  r.data["expected_shape"] = want;
  if (r.data["shape"] != want) r.fail("section shape " + r.data["shape"].dump() + " differs from " + want.dump());
  return r;
}

CheckReport pluecker_expected_collinear(std::string_view point, bool witness) {
  CheckReport r = pluecker_collinear_report(point);
  r.data["expected_witness"] = witness;
  if (r.data["witness"].is_null() == witness) r.fail(witness ? "no witness found" : "unexpected witness");
  return r;
}

}  // namespace

CheckReport jacobi_report(const std::string& diagram, std::size_t triples, std::uint64_t seed) {
  CheckReport r;
  r.check_id = "property.jacobi";
  r.subject = diagram;
  const RootSystemPtr rs = build_root_system(DynkinDiagram::parse(diagram));
  const auto table = shared_table(rs);
  std::vector<LieElement> basis;
  for (std::size_t k = 0; k < table->num_roots(); ++k) basis.push_back(LieElement::e(table->root(k)));
  for (NodeIndex i = 0; i < rs->rank(); ++i) basis.push_back(LieElement::h(i));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < triples; ++t) {
    const auto& x = basis[pick(rng)];
    const auto& y = basis[pick(rng)];
    const auto& z = basis[pick(rng)];
    const LieElement sum = bracket(x, bracket(y, z, *table), *table) + bracket(y, bracket(z, x, *table), *table) +
                           bracket(z, bracket(x, y, *table), *table);
    if (!sum.is_zero()) {
      ++failures;
      if (r.witnesses.size() < 5) {
        r.add_witness({{"x", x.to_string(rs->diagram())},
                       {"y", y.to_string(rs->diagram())},
                       {"z", z.to_string(rs->diagram())},
                       {"sum", sum.to_string(rs->diagram())}});
      }
    }
  }
  r.data["triples"] = triples;
  r.data["failures"] = failures;
  r.data["basis_size"] = basis.size();
  if (failures != 0) r.fail(std::to_string(failures) + " triples violate the Jacobi identity");
  return r;
}

CheckReport reflection_report(const std::string& diagram) {
  CheckReport r;
  r.check_id = "property.reflection";
  r.subject = diagram;
  const RootSystemPtr rs = build_root_system(DynkinDiagram::parse(diagram));
  std::vector<Root> roots = rs->positive_roots();
  for (const auto& p : rs->positive_roots()) roots.push_back(-p);
  std::size_t checks = 0, failures = 0;
  for (NodeIndex i = 0; i < rs->rank(); ++i) {
    for (const auto& beta : roots) {
      ++checks;
      const Root s = rs->reflect(i, beta);
      if (!rs->is_root(s) || rs->reflect(i, s) != beta) {
        ++failures;
        if (r.witnesses.size() < 5) {
          r.add_witness({{"node", rs->diagram().label(i)}, {"root", weight_json(beta, rs->diagram())}});
        }
      }
    }
  }
  r.data["checks"] = checks;
  r.data["failures"] = failures;
  if (failures != 0) r.fail(std::to_string(failures) + " reflections are not involutions on the root set");
  return r;
}

namespace {

template <class F, class Draw>
std::size_t decomposability_trials(const F& f, std::size_t samples, std::mt19937_64& rng, Draw draw,
                                   std::size_t& decomposable, CheckReport& r) {
  std::size_t failures = 0;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < samples; ++k) {
    BiVector<F> w;
    if (coin(rng)) {
      Vec<F> u(5), v(5);
      for (auto& x : u) x = draw(rng);
      for (auto& x : v) x = draw(rng);
      w = projgeo::wedge(f, u, v);
    } else {
      w.resize(10);
      for (auto& x : w) x = draw(rng);
    }
    bool quad_zero = true;
    for (const auto& c : projgeo::pluecker_quadrics(f, w)) quad_zero = quad_zero && f.is_zero(c);
    const bool rank_le_2 = projgeo::rank(f, projgeo::alternating_matrix(f, w)) <= 2;
    if (quad_zero) ++decomposable;
    if (quad_zero != rank_le_2 || quad_zero != projgeo::is_decomposable(f, w)) {
      ++failures;
      if (r.witnesses.size() < 5) r.add_witness(projgeo::vec_json(f, w));
    }
  }
  return failures;
}

}  // namespace

CheckReport decomposability_report(const std::vector<std::uint32_t>& primes, std::size_t samples,
                                   std::uint64_t seed) {
  CheckReport r;
  r.check_id = "property.decomposability";
  std::string subject = "Q";
  for (auto p : primes) subject += ",F" + std::to_string(p);
  r.subject = subject;
  std::mt19937_64 rng(seed);
  json per = json::object();
  std::size_t failures = 0;
  {
    const RationalField f;
    std::uniform_int_distribution<int> d(-3, 3);
    std::size_t dec = 0;
    const std::size_t bad =
        decomposability_trials(f, samples, rng, [&](std::mt19937_64& g) { return projgeo::Rational(d(g)); }, dec, r);
    per["Q"] = {{"samples", samples}, {"decomposable", dec}, {"failures", bad}};
    failures += bad;
  }
  for (auto p : primes) {
    const PrimeField f(p);
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::size_t dec = 0;
    const std::size_t bad = decomposability_trials(f, samples, rng, [&](std::mt19937_64& g) { return d(g); }, dec, r);
    per["F" + std::to_string(p)] = {{"samples", samples}, {"decomposable", dec}, {"failures", bad}};
    failures += bad;
  }
  r.data["fields"] = per;
  if (failures != 0) r.fail(std::to_string(failures) + " bivectors disagree between the quadric and rank tests");
  return r;
}

namespace {

// Random element of Q: rows e1 -> c e1, e2, e3 -> <e1, e2, e3>, e4, e5 -> anything,
// with invertible diagonal blocks.
Mat<PrimeField> random_q_element(const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.size() - 1);
  while (true) {
    Mat<PrimeField> c(5, Vec<PrimeField>(5, 0));
    c[0][0] = d(rng);
    for (std::size_t i = 1; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) c[i][j] = d(rng);
    }
    for (std::size_t i = 3; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) c[i][j] = d(rng);
    }
    if (!f.is_zero(projgeo::det(f, c))) return c;
  }
}

}  // namespace

CheckReport q_orbit_report(const std::vector<std::uint32_t>& primes, std::size_t elements, std::uint64_t seed) {
  CheckReport r;
  r.check_id = "property.q_orbit";
  std::string subject;
  for (auto p : primes) subject += (subject.empty() ? "F" : ",F") + std::to_string(p);
  r.subject = subject;
  std::mt19937_64 rng(seed);
  std::size_t checks = 0, failures = 0;
  for (auto p : primes) {
    const PrimeField f(p);
    const Mat<PrimeField> ell = projgeo::ell_basis(f);
    // Sample points: both orbits represented.
    std::vector<BiVector<PrimeField>> points = {projgeo::wedge(f, projgeo::unit_vec(f, 5, 3), projgeo::unit_vec(f, 5, 4)),
                                                 projgeo::wedge(f, projgeo::unit_vec(f, 5, 1), projgeo::unit_vec(f, 5, 3))};
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    while (points.size() < 12) {
      Vec<PrimeField> u(5), v(5);
      for (auto& x : u) x = d(rng);
      for (auto& x : v) x = d(rng);
      auto w = projgeo::wedge(f, u, v);
      if (!projgeo::is_zero_vec(f, w)) points.push_back(projgeo::canonical(f, w));
    }
    for (std::size_t k = 0; k < elements; ++k) {
      const Mat<PrimeField> g = random_q_element(f, rng);
      for (const auto& row : ell) {
        if (!projgeo::in_span(f, ell, projgeo::transform(f, g, row))) {
          ++failures;
          r.add_witness({{"field", f.name()}, {"element", matrix_json(f, g)}, {"reason", "does not preserve l"}});
        }
      }
      for (const auto& w : points) {
        ++checks;
        const auto gw = projgeo::transform(f, g, w);
        if (!projgeo::grassmannian_membership(f, gw) ||
            projgeo::q_orbit_membership(f, gw) != projgeo::q_orbit_membership(f, w)) {
          ++failures;
          if (r.witnesses.size() < 5) {
            r.add_witness({{"field", f.name()}, {"element", matrix_json(f, g)}, {"point", projgeo::vec_json(f, w)}});
          }
        }
      }
    }
  }
  r.data["checks"] = checks;
  r.data["elements_per_field"] = elements;
  r.data["failures"] = failures;
  if (failures != 0) r.fail(std::to_string(failures) + " Q-translates changed the orbit verdict");
  return r;
}

Bundle make_bundle(const RunConfig& config, const std::vector<CheckReport>& reports) {
  Bundle b;
  json list = json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : reports) {
    list.push_back(to_json(r, config.include_timing));
    ++counts[static_cast<int>(r.status)];
  }
  b.json["config"] = config_json(config);
  b.json["reports"] = list;
  b.json["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"indeterminate", counts[2]}, {"skipped", counts[3]}};
  b.exit_code = counts[1] == 0 ? 0 : 1;
  return b;
}

Bundle run_all(const RunConfig& config) {
  validate(config);
  using Suite = std::function<std::vector<CheckReport>()>;
  const std::vector<CatalogEntry> entries = catalog(config.max_rank);

  auto per_pair = [&](const std::string& id, std::function<CheckReport(const CatalogEntry&)> fn) -> Suite {
    return [&entries, id, fn] {
      std::vector<CheckReport> out;
      for (const auto& e : entries) out.push_back(guarded(id, e.pair.id(), [&] { return fn(e); }));
      return out;
    };
  };
  auto single = [](const std::string& id, const std::string& subject, std::function<CheckReport()> fn) -> Suite {
    return [id, subject, fn] { return std::vector<CheckReport>{guarded(id, subject, fn)}; };
  };

  std::vector<std::string> systems = {"A4", "B4", "C4", "D5", "F4", "G2", "E6", "E7", "E8"};
  systems.erase(std::remove_if(systems.begin(), systems.end(),
                               [&](const std::string& s) { return std::stoi(s.substr(1)) > config.max_rank; }),
                systems.end());

  std::vector<Suite> suites;
  suites.push_back(per_pair("catalog.phi", [](const CatalogEntry& e) {
    CheckReport r = catalog_report(e.pair);
    r.data["family"] = e.family;
    return r;
  }));
  suites.push_back(per_pair("degeneracy.sigma", [](const CatalogEntry& e) {
    return degeneracy_report(e.pair, KernelMode::kSigma);
  }));
  suites.push_back(per_pair("degeneracy.tau", [](const CatalogEntry& e) {
    return degeneracy_report(e.pair, KernelMode::kTau);
  }));
  suites.push_back(per_pair("infinity_locus", [](const CatalogEntry& e) { return infinity_locus_report(e.pair); }));
  suites.push_back(single("vmrt_chain", "chain", [&config] { return vmrt_chain_report(config.max_rank); }));
  suites.push_back(per_pair("normal_bundle", [](const CatalogEntry& e) { return normal_bundle_report(e.pair); }));

  const auto& pp = config.primes_plucker;
  suites.push_back(single("pluecker.line", "l", [] { return pluecker_line_report(); }));
  suites.push_back([pp] {
    return std::vector<CheckReport>{
        guarded("pluecker.section", "e4^e5", [&] { return pluecker_expected_section("e4^e5", pp, 1, 1); }),
        guarded("pluecker.section", "e2^e4", [&] { return pluecker_expected_section("e2^e4", pp, 2, 0); })};
  });
  suites.push_back([] {
    return std::vector<CheckReport>{
        guarded("pluecker.collinear", "e2^e4", [] { return pluecker_expected_collinear("e2^e4", true); }),
        guarded("pluecker.collinear", "e4^e5", [] { return pluecker_expected_collinear("e4^e5", false); }),
        guarded("pluecker.collinear", "e1^e4", [] { return pluecker_expected_collinear("e1^e4", true); })};
  });
  suites.push_back([pp] {
    std::vector<projgeo::SurveyResult> results;
    std::vector<CheckReport> out;
    for (auto p : pp) {
      out.push_back(guarded("pluecker.survey", "F" + std::to_string(p), [&] {
        results.push_back(projgeo::dee_exhaustive_survey(p));
        return projgeo::survey_report(results.back());
      }));
    }
    out.push_back(guarded("pluecker.survey.verdict", "all", [&] { return projgeo::survey_agreement(results); }));
    return out;
  });
  suites.push_back([primes = config.primes_segre] {
    std::vector<CheckReport> out;
    for (auto q : primes) {
      out.push_back(guarded("segre.fitting", "F" + std::to_string(q), [q] { return projgeo::segre_fitting_report(q); }));
    }
    return out;
  });
  suites.push_back([&config, systems] {
    std::vector<CheckReport> out;
    for (const auto& s : systems) {
      out.push_back(guarded("property.jacobi", s, [&] {
        return jacobi_report(s, config.jacobi_triples, mix_seed(config.seed, "jacobi/" + s));
      }));
    }
    return out;
  });
  suites.push_back([systems] {
    std::vector<CheckReport> out;
    for (const auto& s : systems) out.push_back(guarded("property.reflection", s, [&] { return reflection_report(s); }));
    return out;
  });
  suites.push_back(single("property.decomposability", "random", [&config] {
    return decomposability_report(config.primes_plucker, config.random_bivectors,
                                  mix_seed(config.seed, "decomposability"));
  }));
  suites.push_back(single("property.q_orbit", "random", [&config] {
    return q_orbit_report(config.primes_plucker, config.q_elements, mix_seed(config.seed, "q_orbit"));
  }));

  std::vector<std::future<std::vector<CheckReport>>> jobs;
  for (const auto& s : suites) jobs.push_back(std::async(std::launch::async, s));
  std::vector<CheckReport> reports;
  for (auto& j : jobs) {
    for (auto& r : j.get()) reports.push_back(std::move(r));
  }
  return make_bundle(config, reports);
}

std::string bundle_markdown(const json& bundle) {
  auto cell = [](std::string s) {
    std::string out;
    for (char c : s) {
      if (c == '|') out += "\\|";
      else if (c == '\n') out += ' ';
      else out += c;
    }
    return out;
  };
  std::ostringstream md;
  md << "# hssv report\n\n";
  const json& c = bundle.at("config");
  md << "Config: max_rank " << c.at("max_rank").dump() << ", primes_plucker " << c.at("primes_plucker").dump()
     << ", primes_segre " << c.at("primes_segre").dump() << ", seed " << c.at("seed").dump() << "\n\n";
  md << "| check | subject | status | notes |\n|---|---|---|---|\n";
  for (const auto& r : bundle.at("reports")) {
    md << "| " << cell(r.at("check_id").get<std::string>()) << " | " << cell(r.at("subject").get<std::string>())
       << " | " << r.at("status").get<std::string>() << " | " << cell(r.value("notes", std::string())) << " |\n";
  }
  const json& s = bundle.at("summary");
  md << "\nSummary: pass " << s.at("pass").dump() << ", fail " << s.at("fail").dump() << ", indeterminate "
     << s.at("indeterminate").dump() << ", skipped " << s.at("skipped").dump() << "\n";
  return md.str();
}

std::string render(const Bundle& b, OutputFormat format) {
  return format == OutputFormat::kJson ? b.json.dump(2) + "\n" : bundle_markdown(b.json);
}

}  // namespace hssv
