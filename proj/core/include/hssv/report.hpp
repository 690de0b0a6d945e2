#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hssv/rootsys.hpp"

namespace hssv {

enum class Status { kPass, kFail, kIndeterminate, kSkipped };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

// Machine-readable verdict of one check on one subject.
struct CheckReport {
  std::string check_id;
  std::string subject;
  Status status = Status::kPass;
  // Structured witnesses: weights in simple-root coordinates, projective
  // points in canonical coordinates.
  nlohmann::json witnesses = nlohmann::json::array();
  std::string notes;
  // Check-specific structured results (counts, loci, ...).
  nlohmann::json data = nlohmann::json::object();
  std::int64_t duration_ms = 0;

  void add_witness(nlohmann::json w) { witnesses.push_back(std::move(w)); }
  void append_note(std::string_view note);
  // Marks the report failed and records why.
  void fail(std::string_view why);
};

// fail/indeterminate reports need witnesses or notes; throws std::logic_error.
void validate(const CheckReport& r);

nlohmann::json to_json(const CheckReport& r, bool include_timing);
CheckReport report_from_json(const nlohmann::json& j);

// {"coords": [...], "label": "a6+a7"}
nlohmann::json weight_json(const Root& r, const DynkinDiagram& d);

}  // namespace hssv
