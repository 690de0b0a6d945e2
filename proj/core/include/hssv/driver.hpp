#pragma once

// Check suites, run configuration and the report bundle.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hssv/pairs.hpp"
#include "hssv/projgeo/plucker.hpp"
#include "hssv/report.hpp"

namespace hssv {

enum class OutputFormat { kJson, kMarkdown };

struct RunConfig {
  int max_rank = 7;
  std::vector<std::uint32_t> primes_plucker{5, 7};
  std::vector<std::uint32_t> primes_segre{2, 3};
  OutputFormat format = OutputFormat::kJson;
  std::uint64_t seed = 20240917;
  bool include_timing = false;
  std::size_t jacobi_triples = 1000;
  std::size_t random_bivectors = 1000;
  std::size_t q_elements = 20;
};

// Throws kConfig: max_rank outside [4, 12], non-prime or oversized primes,
// empty prime lists.
void validate(const RunConfig& c);
nlohmann::json config_json(const RunConfig& c);
OutputFormat parse_format(std::string_view s);
// "5,7" -> {5, 7}; throws kParse.
std::vector<std::uint32_t> parse_primes(std::string_view s);

enum class KernelMode { kSigma, kTau };
KernelMode parse_mode(std::string_view s);

// Individual checks. Each returns a report; computation errors become fail
// reports except parse and configuration errors, which propagate.
CheckReport catalog_report(const DeletionPair& pair);
CheckReport degeneracy_report(const DeletionPair& pair, KernelMode mode);
CheckReport infinity_locus_report(const DeletionPair& pair);
CheckReport normal_bundle_report(const DeletionPair& pair);
// Iterated VMRT from the largest step of E7:a7 -> E6:a6 -> D5:a5 -> A4:a2 ->
// A1+A2 that fits max_rank.
CheckReport vmrt_chain_report(int max_rank);
CheckReport vmrt_chain_report(const MarkedDiagram& start, std::size_t steps);

CheckReport pluecker_line_report();
CheckReport pluecker_section_report(std::string_view point, const std::vector<std::uint32_t>& primes);
CheckReport pluecker_collinear_report(std::string_view point);

CheckReport jacobi_report(const std::string& diagram, std::size_t triples, std::uint64_t seed);
CheckReport reflection_report(const std::string& diagram);
CheckReport decomposability_report(const std::vector<std::uint32_t>& primes, std::size_t samples,
                                   std::uint64_t seed);
CheckReport q_orbit_report(const std::vector<std::uint32_t>& primes, std::size_t elements, std::uint64_t seed);

struct Bundle {
  nlohmann::json json;  // {config, reports, summary}
  int exit_code = 0;
};

// Runs every suite concurrently and assembles the reports in suite order.
Bundle run_all(const RunConfig& config);

// Bundle of the given reports with the given config echoed.
Bundle make_bundle(const RunConfig& config, const std::vector<CheckReport>& reports);
// Table rendering derived from the bundle JSON.
std::string bundle_markdown(const nlohmann::json& bundle);
std::string render(const Bundle& b, OutputFormat format);

}  // namespace hssv
