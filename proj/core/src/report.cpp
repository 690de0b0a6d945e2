#include "hssv/report.hpp"

#include <stdexcept>

namespace hssv {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kIndeterminate: return "indeterminate";
    case Status::kSkipped: return "skipped";
  }
  return "fail";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "indeterminate") return Status::kIndeterminate;
  if (s == "skipped") return Status::kSkipped;
  throw Error(ErrorCode::kParse, std::string(s), "unknown status '" + std::string(s) + "'");
}

void CheckReport::append_note(std::string_view note) {
  if (!notes.empty()) notes += "; ";
  notes += note;
}

void CheckReport::fail(std::string_view why) {
  status = Status::kFail;
  append_note(why);
}

void validate(const CheckReport& r) {
  if ((r.status == Status::kFail || r.status == Status::kIndeterminate) && r.witnesses.empty() &&
      r.notes.empty()) {
    throw std::logic_error("report " + r.check_id + "/" + r.subject + " is " +
                           std::string(to_string(r.status)) + " without witnesses or notes");
  }
}

nlohmann::json to_json(const CheckReport& r, bool include_timing) {
  validate(r);
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["subject"] = r.subject;
  j["status"] = to_string(r.status);
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  j["data"] = r.data;
  if (include_timing) j["duration_ms"] = r.duration_ms;
  return j;
}

CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.subject = j.at("subject").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.witnesses = j.value("witnesses", nlohmann::json::array());
  r.notes = j.value("notes", std::string());
  r.data = j.value("data", nlohmann::json::object());
  r.duration_ms = j.value("duration_ms", std::int64_t{0});
  return r;
}

nlohmann::json weight_json(const Root& r, const DynkinDiagram& d) {
  return {{"coords", r.coeffs()}, {"label", r.to_string(d)}};
}

}  // namespace hssv
