#ifndef KURDTEXT_TRANSLITERATOR_H_
#define KURDTEXT_TRANSLITERATOR_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kurdtext/alphabet.h"
#include "kurdtext/normalizer.h"
#include "kurdtext/segmenter.h"

namespace kurdtext {

enum class TranslitMode {
  kStrict,    // Latin output restricted to the 31 Hawar letters
  kExtended,  // approximate letters written as ḧ ẍ ' (and read back)
};

enum class OnUnknown { kPassThrough, kError };

enum class TranslitDirection { kLatinToArabic, kArabicToLatin };

struct TranslitOptions {
  TranslitMode mode = TranslitMode::kStrict;
  bool capitalize_sentences = false;  // Arabic -> Latin only
  OnUnknown on_unknown = OnUnknown::kPassThrough;
  // Read a standalone و as the conjunction û (Arabic -> Latin only).
  bool conjunction_waw = false;
};

enum class LossAction { kDropped, kApproximated, kPassedThrough };

std::string_view LossActionName(LossAction action);

struct LossEvent {
  std::size_t offset = 0;  // byte offset into the caller's input
  std::string source;      // the source grapheme
  LossAction action = LossAction::kDropped;
  std::string substitute;  // what was written instead (may be empty)

  friend bool operator==(const LossEvent&, const LossEvent&) = default;
};

struct LossReport {
  std::vector<LossEvent> events;  // strictly increasing offsets
};

struct TranslitResult {
  std::string output;
  LossReport loss;
  // Arabic -> Latin: rewrites applied when the input was not normalized.
  std::vector<Rewrite> input_rewrites;
  // Input characters consumed, and how many produced no output.
  std::size_t consumed = 0;
  std::size_t silent = 0;
};

struct RoundTripDiff {
  std::size_t offset = 0;  // byte offset into `expected`
  std::string expected;
  std::string got;

  friend bool operator==(const RoundTripDiff&, const RoundTripDiff&) = default;
};

struct RoundTripReport {
  bool identical = true;
  std::vector<RoundTripDiff> diffs;
  std::string expected;  // the (normalized) original
  std::string got;       // after both conversions
};

// Code point alignment of two strings (unit-cost edit distance); returns the
// differing hunks with byte offsets into `expected`.
std::vector<RoundTripDiff> DiffStrings(std::string_view expected, std::string_view got);

// Grapheme-level conversion between Latin-based (Hawar) and Arabic-based
// (Sorani) Kurdish, driven by the AlphabetTable. Pure; safe to share.
class Transliterator {
 public:
  explicit Transliterator(const AlphabetTable& table);

  // Case-folds, drops the unwritten vowel i (logged), writes the hamza
  // carrier before word-initial vowels and after a/e/ê/o in hiatus, and
  // returns normalized Arabic-script text. Throws Error(kUnknownGrapheme)
  // when on_unknown is kError.
  TranslitResult LatinToArabic(std::string_view text, const TranslitOptions& options = {}) const;

  // Normalizes the input if needed, then resolves و/ی by position, drops the
  // carrier, and writes approximate letters per `mode`. No unwritten vowels
  // are restored.
  TranslitResult ArabicToLatin(std::string_view text, const TranslitOptions& options = {}) const;

  // Converts `text` along `first_leg` and back, and compares the result with
  // the (for Arabic input, normalized) original.
  RoundTripReport RoundTrip(std::string_view text, TranslitDirection first_leg,
                            const TranslitOptions& options = {TranslitMode::kExtended}) const;

 private:
  const AlphabetTable* table_;
  Normalizer normalizer_;
  Segmenter segmenter_;
  std::u32string carrier_;
};

}  // namespace kurdtext

#endif  // KURDTEXT_TRANSLITERATOR_H_
