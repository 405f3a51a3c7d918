#include "kurdtext/error.h"

#include <utility>

namespace kurdtext {
namespace {

std::string Compose(ErrorCode code, const std::string& message,
                    const std::vector<Issue>& issues) {
  std::string out(ErrorCodeName(code));
  out += ": ";
  out += message;
  for (const Issue& issue : issues) {
    out += "\n  ";
    if (issue.row != 0) out += "row " + std::to_string(issue.row) + ": ";
    out += issue.message;
  }
  return out;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kDuplicateVariant: return "DuplicateVariant";
    case ErrorCode::kNonTotal: return "NonTotal";
    case ErrorCode::kUnknownGrapheme: return "UnknownGrapheme";
    case ErrorCode::kInconsistentSpans: return "InconsistentSpans";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<Issue> issues)
    : std::runtime_error(Compose(code, message, issues)),
      code_(code),
      issues_(std::move(issues)) {}

}  // namespace kurdtext
