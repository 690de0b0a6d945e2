#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hssv {

enum class ErrorCode {
  kUnclassifiableDiagram,
  kInvalidDiagram,
  kUnknownLabel,
  kNonCominuscule,
  kInvalidMarking,
  kInvalidChain,
  kDomain,
  kCorrespondence,
  kCertification,
  kParse,
  kConfig,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code and the subject it
// concerns (a component, a label, a pair id, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string subject, const std::string& message)
      : std::runtime_error(message), code_(code), subject_(std::move(subject)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace hssv
