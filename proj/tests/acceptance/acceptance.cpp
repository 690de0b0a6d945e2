// One line per acceptance criterion; exit status 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../common/oracles.hpp"
#include "hssv/driver.hpp"
#include "hssv/hss.hpp"
#include "hssv/normalbundle.hpp"
#include "hssv/projgeo/segre.hpp"
#include "hssv/sff.hpp"

using namespace hssv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const std::vector<std::string> kMaximal = {"D5:a5/a3", "E6:a6/a5", "E7:a7/a6"};

std::pair<char, int> type_of(const std::string& id) {
  return {id[0], std::stoi(id.substr(1, id.find(':') - 1))};
}

void criterion1(Outcome& o) {
  const auto start = Clock::now();
  const std::vector<std::tuple<char, int, std::size_t>> rows = {
      {'A', 4, 10}, {'B', 4, 16}, {'D', 5, 20}, {'E', 6, 36}, {'E', 7, 63}};
  for (const auto& [fam, n, want] : rows) {
    const std::string lit = std::string(1, fam) + std::to_string(n);
    const auto rs = build_root_system(DynkinDiagram::parse(lit));
    std::set<oracle::Coeffs> lib;
    for (const auto& r : rs->positive_roots()) lib.insert(r.coeffs());
    const auto ref = oracle::positive_roots(oracle::gram(fam, n));
    o.require(lib.size() == want, lit + " count");
    o.require(lib == ref, lit + " differs from the closure oracle");
    o.detail << " " << lit << "=" << lib.size();
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime");
  o.detail << " (" << t << " s)";
}

void criterion2(Outcome& o) {
  const std::set<std::string> required = {"B4:a1/a2", "B4:a1/a3", "D5:a5/a3", "D5:a1/a2", "D5:a1/a3",
                                          "E6:a6/a5", "E6:a6/a4", "E7:a7/a6", "E7:a7/a5", "E7:a7/a4"};
  std::set<std::string> seen;
  std::size_t checked = 0;
  double worst = 0;
  for (const auto& e : catalog(7)) {
    const DeletionPair& p = e.pair;
    const auto start = Clock::now();
    const auto [fam, n] = type_of(p.id());
    const auto g = oracle::gram(fam, n);
    bool ok = true;
    try {
      const auto phi = root_correspondence(p);
      const auto& sub = *p.sub().root_system_ptr();
      // Inner products.
      for (std::size_t i = 0; i < sub.rank(); ++i) {
        for (std::size_t j = 0; j < sub.rank(); ++j) {
          ok = ok && oracle::form(g, phi.on_simple()[i].coeffs(), phi.on_simple()[j].coeffs()) ==
                         g[p.to_ambient(i)][p.to_ambient(j)];
        }
      }
      // Noncompact roots to noncompact roots, injectively.
      const auto amb = oracle::positive_roots(g);
      std::set<oracle::Coeffs> images;
      std::size_t count = 0;
      for (const auto& r : sub.positive_roots()) {
        if (r[p.sub_gamma0()] != 1) continue;
        oracle::Coeffs img(g.size(), 0);
        for (std::size_t i = 0; i < sub.rank(); ++i) img = oracle::add(img, phi.on_simple()[i].coeffs(), r[i]);
        ok = ok && amb.count(img) && img[p.gamma()] == 1;
        images.insert(img);
        ++count;
      }
      ok = ok && images.size() == count && count == hss_dimension(p.sub());
      ok = ok && catalog_report(p).status == Status::kPass;
    } catch (const std::exception& ex) {
      ok = false;
      o.detail << " " << p.id() << ": " << ex.what();
    }
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    o.require(ok, p.id());
    o.require(t < 1.0, p.id() + " runtime");
    seen.insert(p.id());
    ++checked;
  }
  for (const auto& r : required) o.require(seen.count(r) == 1, "missing " + r);
  o.detail << " " << checked << " pairs, slowest " << worst << " s";
}

void criterion3(Outcome& o) {
  for (const auto& id : kMaximal) {
    const auto p = parse_pair_id(id);
    const SffContext ctx(p);
    const auto& d = p.ambient().root_system_ptr()->diagram();
    const auto s = kernel_sigma(ctx);
    Root expected = ctx.gamma();
    for (NodeIndex b : d.neighbors(p.gamma())) expected = expected + p.ambient().root_system_ptr()->simple_root(b);
    o.require(d.neighbors(p.gamma()).size() == 1, id + " gamma is not an end node");
    const bool has = std::find(s.witnesses.begin(), s.witnesses.end(), expected) != s.witnesses.end();
    o.require(s.strict && has, id + " sigma witness");
    const auto t = kernel_tau(ctx);
    bool contains = t.kernel.radial;
    for (const auto& w : ctx.sub_tangent().weights) contains = contains && t.kernel.weights.contains(w);
    o.require(contains && t.kernel.weights.size() > ctx.sub_tangent().weights.size(), id + " tau kernel");
    o.detail << " " << id << ": sigma witness " << expected.to_string(d) << ", tau " << t.kernel.dimension() << " > "
             << ctx.sub_tangent().dimension();
  }
}

void criterion4(Outcome& o) {
  const std::vector<std::size_t> sizes = {6, 10, 16};
  for (std::size_t k = 0; k < kMaximal.size(); ++k) {
    const auto p = parse_pair_id(kMaximal[k]);
    const CheckReport r = verify_infinity_locus(p);
    o.require(r.status == Status::kPass, kMaximal[k] + " checks (a)-(d): " + r.notes);
    const auto [fam, n] = type_of(kMaximal[k]);
    const auto g = oracle::gram(fam, n);
    const auto gamma = oracle::simple(n, static_cast<int>(p.gamma()));
    const auto g0 = oracle::simple(n, static_cast<int>(p.gamma0()));
    std::set<oracle::Coeffs> lhs, rhs;
    const auto corr = root_correspondence(p);
    for (const auto& x : corr.image()) lhs.insert(oracle::reflect(g, g0, x.coeffs()));
    for (const auto& b : oracle::positive_roots(g)) {
      if (b[p.gamma()] == 1 && oracle::pairing(g, b, gamma) == 1) rhs.insert(b);
    }
    o.require(lhs == rhs && lhs.size() == sizes[k], kMaximal[k] + " set identity");
    o.detail << " " << kMaximal[k] << ": " << lhs.size() << "=" << rhs.size();
  }
}

void criterion5(Outcome& o) {
  const std::vector<std::string> want = {"E7:a7", "E6:a6", "D5:a5", "A4:a2", "A1+A2:a1,a2"};
  std::vector<std::string> got;
  for (const auto& m : vmrt_chain(MarkedDiagram::parse("E7:a7"), 5)) got.push_back(m.canonical_name());
  o.require(got == want, "chain");
  const auto last = vmrt_chain(MarkedDiagram::parse("E7:a7"), 5).back();
  o.require(last.marks().size() == 2, "two marks at the end");
  for (const auto& g : got) o.detail << " " << g;
}

void criterion6(Outcome& o) {
  const std::vector<std::vector<std::size_t>> sizes = {{1, 3}, {1, 5}, {1, 10}};
  for (std::size_t k = 0; k < kMaximal.size(); ++k) {
    const auto p = parse_pair_id(kMaximal[k]);
    const auto phi = root_correspondence(p);
    std::vector<oracle::Coeffs> ws, steps;
    for (const auto& w : normal_weights(p)) ws.push_back(w.coeffs());
    for (std::size_t i = 0; i < phi.on_simple().size(); ++i) {
      if (i != p.sub_gamma0()) steps.push_back(phi.on_simple()[i].coeffs());
    }
    const auto ref = oracle::component_sizes(ws, steps);
    const auto dec = levi_components(p);
    std::vector<std::size_t> lib;
    for (const auto& c : dec.components) lib.push_back(c.size());
    o.require(ref == sizes[k] && lib == sizes[k], kMaximal[k] + " component sizes");
    o.require(dec.highest_weights.size() == 2 && dec.highest_weights[0] != dec.highest_weights[1],
              kMaximal[k] + " highest weights");
    o.require(summands_distinct(p).status == Status::kPass, kMaximal[k] + " report");
    o.detail << " " << kMaximal[k] << ": (" << lib[0] << "," << lib[1] << ")";
  }
  std::size_t quadrics = 0;
  for (const auto& e : catalog(7)) {
    const std::string space = e.pair.ambient().space_name();
    if (space.rfind("Q^", 0) != 0) continue;
    const CheckReport r = summands_distinct(e.pair);
    o.require(r.status == Status::kIndeterminate && !r.notes.empty(), e.pair.id() + " hyperquadric verdict");
    ++quadrics;
  }
  o.detail << "; " << quadrics << " hyperquadric pairs indeterminate";
}

void criterion7(Outcome& o) {
  using namespace projgeo;
  const auto start = Clock::now();
  const RationalField f;
  // (i) a quadratic form in [t:s] vanishing at three distinct points is zero.
  bool ell_ok = true;
  for (const auto& ts : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}}) {
    const auto w = wedge(f, unit_vec(f, 5, 0), Vec<RationalField>{0, ts.first, ts.second, 0, 0});
    for (const auto& q : pluecker_quadrics(f, w)) ell_ok = ell_ok && q == 0;
  }
  o.require(ell_ok && pluecker_line_report().status == Status::kPass, "(i) l on G(2,5)");
  // (ii)
  const auto s1 = pluecker_section(parse_bivector("e4^e5"), {5, 7});
  o.require(s1.lines.size() == 1 && s1.isolated_points.size() == 1 && s1.conics.empty() && !s1.contains_plane,
            "(ii) shape");
  o.require(s1.lines.front() == Mat<RationalField>{unit_vec(f, 10, 0), unit_vec(f, 10, 1)}, "(ii) the line is l");
  o.require(s1.certified_over == std::vector<std::string>{"F5", "F7"}, "(ii) certification");
  // (iii)
  const auto s2 = pluecker_section(parse_bivector("e2^e4"), {5, 7});
  o.require(s2.lines.size() == 2 && s2.isolated_points.empty() && s2.conics.empty(), "(iii) two lines");
  // (iv)
  std::vector<SurveyResult> results;
  for (std::uint32_t p : {5u, 7u}) {
    results.push_back(dee_exhaustive_survey(p));
    const auto& s = results.back();
    o.require(s.witness_without_extra == 0 && s.no_witness_with_line_through_b == 0, "(iv) invariant");
    o.require(s.exact + s.extra == s.surveyed && s.surveyed > 0, "(iv) counts");
    o.detail << " F" << p << ": surveyed " << s.surveyed << ", exact " << s.exact << ", extra " << s.extra
             << ", no witness " << s.no_witness << ";";
  }
  o.require(survey_agreement(results).status == Status::kPass, "(iv) verdicts agree");
  const double t = seconds_since(start);
  o.require(t < 60.0, "runtime");
  o.detail << " (" << t << " s)";
}

void criterion8(Outcome& o) {
  const auto start = Clock::now();
  const auto s = projgeo::segre_fitting(3);
  o.require(s.a_configs > 0 && s.a_failures == 0, "(a)");
  o.require(s.b_configs == 4 * 13 * 3 * 9 && s.b_failures == 0, "(b)");
  o.require(s.exact_pairs_direct == s.b_configs, "(b) direct double loop");
  o.require(s.orbit_size == s.b_configs && s.orbit_invalid == 0, "(c) single orbit");
  o.require(projgeo::segre_fitting_report(s).status == Status::kPass, "report");
  const double t = seconds_since(start);
  o.require(t < 60.0, "runtime");
  o.detail << " (a) " << s.a_configs << ", (b) " << s.b_configs << ", orbit " << s.orbit_size << " (" << t << " s)";
}

void criterion9(Outcome& o) {
  const RunConfig c;
  for (const char* sys : {"A4", "B4", "C4", "D5", "F4", "G2", "E6", "E7"}) {
    const auto j = jacobi_report(sys, 1000, c.seed);
    o.require(j.status == Status::kPass && j.data["triples"] == 1000, std::string("Jacobi ") + sys);
    o.require(reflection_report(sys).status == Status::kPass, std::string("reflection ") + sys);
  }
  const auto d = decomposability_report({5, 7}, 1000, c.seed);
  o.require(d.status == Status::kPass, "decomposability");
  const auto a = run_all(c);
  const auto b = run_all(c);
  o.require(a.json.dump() == b.json.dump(), "byte-identical bundles");
  o.require(render(a, OutputFormat::kJson) == render(b, OutputFormat::kJson), "byte-identical rendering");
  o.detail << " 8 systems x 1000 triples, 3000 bivectors, bundle " << a.json.dump().size() << " bytes, summary "
           << a.json["summary"].dump();
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria = {criterion1, criterion2, criterion3,
                                                                criterion4, criterion5, criterion6,
                                                                criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k](o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("criterion %zu: %s%s\n", k + 1, o.ok ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
