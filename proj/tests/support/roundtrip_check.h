#ifndef KURDTEXT_TESTS_SUPPORT_ROUNDTRIP_CHECK_H_
#define KURDTEXT_TESTS_SUPPORT_ROUNDTRIP_CHECK_H_

#include <algorithm>
#include <string>
#include <vector>

#include "kurdtext/transliterator.h"
#include "kurdtext/unicode.h"

namespace kurdtext::testing {

// Checks a Latin -> Arabic -> Latin round trip: the original with its
// logged i drops removed and lowercased must equal what came back, so every
// difference is a dropped i or a case change. Returns an empty string on
// success, otherwise a description of the mismatch.
inline std::string ExplainLatinRoundTrip(const TranslitResult& forward,
                                         const RoundTripReport& report) {
  std::vector<std::size_t> dropped;
  for (const LossEvent& e : forward.loss.events) {
    if (e.action == LossAction::kDropped && (e.source == "i" || e.source == "I")) {
      dropped.push_back(e.offset);
    }
  }
  std::u32string explained;
  for (const unicode::DecodedChar& c : unicode::Decode(report.expected)) {
    if (std::find(dropped.begin(), dropped.end(), c.offset) != dropped.end()) continue;
    explained.push_back(unicode::ToLowerLatin(c.cp));
  }
  if (unicode::ToUtf8(explained) == report.got) return {};
  std::string why = "'" + report.expected + "' came back as '" + report.got + "'";
  for (const RoundTripDiff& d : DiffStrings(unicode::ToUtf8(explained), report.got)) {
    why += "; '" + d.expected + "' -> '" + d.got + "'";
  }
  return why;
}

}  // namespace kurdtext::testing

#endif  // KURDTEXT_TESTS_SUPPORT_ROUNDTRIP_CHECK_H_
