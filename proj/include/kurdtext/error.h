#ifndef KURDTEXT_ERROR_H_
#define KURDTEXT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kurdtext {

enum class ErrorCode {
  kMalformedRow,
  kDuplicateVariant,
  kNonTotal,
  kUnknownGrapheme,
  kInconsistentSpans,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// One located problem. `row` is the 1-based physical line number in the
// offending file, or 0 when the problem is not tied to a row.
struct Issue {
  std::size_t row = 0;
  std::string message;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<Issue> issues = {});

  ErrorCode code() const { return code_; }
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  ErrorCode code_;
  std::vector<Issue> issues_;
};

}  // namespace kurdtext

#endif  // KURDTEXT_ERROR_H_
