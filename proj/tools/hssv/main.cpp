#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hssv/driver.hpp"
#include "hssv/error.hpp"
#include "hssv/hss.hpp"
#include "hssv/projgeo/segre.hpp"

namespace {

struct Options {
  int max_rank = 7;
  std::string primes;
  std::string primes_segre;
  std::string format = "json";
  std::uint64_t seed = hssv::RunConfig{}.seed;
  std::string out;
  bool timings = false;
  std::string pair;
  std::string mode = "sigma";
  std::string point;
  std::string start;
  std::size_t steps = 5;
  std::uint32_t q = 3;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--max-rank", o.max_rank, "largest ambient rank");
  sub->add_option("--primes", o.primes, "comma-separated primes, e.g. 5,7");
  sub->add_option("--format", o.format, "json or markdown");
  sub->add_option("--seed", o.seed, "seed for sampled property checks");
  sub->add_option("--out", o.out, "write the output to this file");
}

hssv::RunConfig make_config(const Options& o) {
  hssv::RunConfig c;
  c.max_rank = o.max_rank;
  if (!o.primes.empty()) c.primes_plucker = hssv::parse_primes(o.primes);
  if (!o.primes_segre.empty()) c.primes_segre = hssv::parse_primes(o.primes_segre);
  c.format = hssv::parse_format(o.format);
  c.seed = o.seed;
  c.include_timing = o.timings;
  hssv::validate(c);
  return c;
}

int emit(const Options& o, const hssv::RunConfig& c, const hssv::Bundle& b) {
  const std::string text = hssv::render(b, c.format);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw hssv::Error(hssv::ErrorCode::kConfig, o.out, "cannot open output file '" + o.out + "'");
    f << text;
  }
  return b.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for deletion pairs of Hermitian symmetric spaces and the Plücker and Segre labs"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* cat = app.add_subcommand("catalog", "verify the root correspondence of every catalog pair");
  add_common(cat, o);
  cat->callback([&] {
    action = [&] {
      const auto c = make_config(o);
      std::vector<hssv::CheckReport> rs;
      for (const auto& e : hssv::catalog(c.max_rank)) {
        auto r = hssv::catalog_report(e.pair);
        r.data["family"] = e.family;
        rs.push_back(std::move(r));
      }
      return emit(o, c, hssv::make_bundle(c, rs));
    };
  });

  auto pair_command = [&](const char* name, const char* help,
                          std::function<hssv::CheckReport(const hssv::DeletionPair&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    sub->add_option("--pair", o.pair, "pair id, e.g. E7:a7/a6")->required();
    return std::pair{sub, fn};
  };
  auto bind = [&](std::pair<CLI::App*, std::function<hssv::CheckReport(const hssv::DeletionPair&)>> p) {
    p.first->callback([&, fn = p.second] {
      action = [&, fn] {
        const auto c = make_config(o);
        return emit(o, c, hssv::make_bundle(c, {fn(hssv::parse_pair_id(o.pair))}));
      };
    });
  };
  bind(pair_command("verify-pair", "verify one pair's root correspondence",
                    [](const hssv::DeletionPair& p) { return hssv::catalog_report(p); }));
  auto deg = pair_command("degeneracy", "kernel of the second fundamental form against the sub tangent",
                          [&](const hssv::DeletionPair& p) { return hssv::degeneracy_report(p, hssv::parse_mode(o.mode)); });
  deg.first->add_option("--mode", o.mode, "sigma or tau");
  bind(deg);
  bind(pair_command("infinity-locus", "root identities of the infinity locus",
                    [](const hssv::DeletionPair& p) { return hssv::infinity_locus_report(p); }));
  bind(pair_command("normal-bundle", "normal weights and their Levi partition",
                    [](const hssv::DeletionPair& p) { return hssv::normal_bundle_report(p); }));

  auto* vmrt = app.add_subcommand("vmrt-chain", "iterate the VMRT operator on marked diagrams");
  add_common(vmrt, o);
  vmrt->add_option("--start", o.start, "marked diagram, e.g. E7:a7 (default: known chain within --max-rank)");
  vmrt->add_option("--steps", o.steps, "maximum chain length");
  vmrt->callback([&] {
    action = [&] {
      const auto c = make_config(o);
      const auto r = o.start.empty() ? hssv::vmrt_chain_report(c.max_rank)
                                     : hssv::vmrt_chain_report(hssv::MarkedDiagram::parse(o.start), o.steps);
      return emit(o, c, hssv::make_bundle(c, {r}));
    };
  });

  auto* pl = app.add_subcommand("pluecker", "the Grassmannian G(2,5) lab");
  pl->require_subcommand(1);
  auto* survey = pl->add_subcommand("survey", "exhaustive survey of the boundary divisor over each prime");
  add_common(survey, o);
  survey->callback([&] {
    action = [&] {
      const auto c = make_config(o);
      std::vector<hssv::projgeo::SurveyResult> results;
      std::vector<hssv::CheckReport> rs;
      for (auto p : c.primes_plucker) {
        results.push_back(hssv::projgeo::dee_exhaustive_survey(p));
        rs.push_back(hssv::projgeo::survey_report(results.back()));
      }
      rs.push_back(hssv::projgeo::survey_agreement(results));
      return emit(o, c, hssv::make_bundle(c, rs));
    };
  });
  auto* section = pl->add_subcommand("section", "certified section span<b, l> ∩ G(2,5)");
  add_common(section, o);
  section->add_option("--point", o.point, "bivector, e.g. \"e2^e4 - 3 e1^e5\"")->required();
  section->callback([&] {
    action = [&] {
      const auto c = make_config(o);
      return emit(o, c, hssv::make_bundle(c, {hssv::pluecker_section_report(o.point, c.primes_plucker)}));
    };
  });
  auto* collinear = pl->add_subcommand("collinear", "search for a line of G(2,5) through b meeting l");
  add_common(collinear, o);
  collinear->add_option("--point", o.point, "bivector on G(2,5)")->required();
  collinear->callback([&] {
    action = [&] {
      const auto c = make_config(o);
      return emit(o, c, hssv::make_bundle(c, {hssv::pluecker_collinear_report(o.point)}));
    };
  });

  auto* sg = app.add_subcommand("segre", "the Segre P^1 x P^2 lab");
  sg->require_subcommand(1);
  auto* fitting = sg->add_subcommand("fitting", "point-plus-line sections over F_q");
  add_common(fitting, o);
  fitting->add_option("--q", o.q, "prime field size");
  fitting->callback([&] {
    action = [&] {
      auto c = make_config(o);
      c.primes_segre = {o.q};
      hssv::validate(c);
      return emit(o, c, hssv::make_bundle(c, {hssv::projgeo::segre_fitting_report(o.q)}));
    };
  });

  auto* all = app.add_subcommand("run-all", "run every suite and write one bundle");
  add_common(all, o);
  all->add_option("--primes-segre", o.primes_segre, "comma-separated primes for the Segre lab");
  all->add_flag("--timings", o.timings, "include per-check durations (breaks byte-identical output)");
  all->callback([&] {
    action = [&] {
      const auto c = make_config(o);
      return emit(o, c, hssv::run_all(c));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const hssv::Error& e) {
    std::cerr << "hssv: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hssv: internal error: " << e.what() << "\n";
    return 2;
  }
}
