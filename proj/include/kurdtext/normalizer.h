#ifndef KURDTEXT_NORMALIZER_H_
#define KURDTEXT_NORMALIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kurdtext/alphabet.h"

namespace kurdtext {

struct NormalizerOptions {
  // Also rewrite a word-final bare heh that follows a consonant to ae.
  bool aggressive_heh = false;
  // Fold Arabic-Indic and Extended Arabic-Indic digits to ASCII.
  bool ascii_digits = false;
};

// Rule identifiers recorded in Rewrite::rule.
inline constexpr std::string_view kRulePresentationForm = "presentation_form";
inline constexpr std::string_view kRuleUnifyVariant = "unify_variant";
inline constexpr std::string_view kRuleHehZwnj = "heh_zwnj_vowel";
inline constexpr std::string_view kRuleFinalHeh = "aggressive_final_heh";
inline constexpr std::string_view kRuleDigits = "ascii_digits";

// One replacement of input bytes [offset, offset + before.size()) by `after`.
struct Rewrite {
  std::string rule;
  std::size_t offset = 0;
  std::string before;
  std::string after;

  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

struct NormalizationReport {
  std::string output;
  std::vector<Rewrite> rewrites;  // sorted by offset, non-overlapping
};

// Applies `rewrites` to `input`; the inverse check of a report.
std::string ReplayRewrites(std::string_view input, const std::vector<Rewrite>& rewrites);

// Maps a byte offset in a normalized string back to the input offset it
// came from. Offsets inside a rewritten unit map to the unit's start.
std::size_t MapToInputOffset(const std::vector<Rewrite>& rewrites, std::size_t output_offset);

// Rewrites Arabic-script Kurdish text to one canonical encoding:
//  * Arabic presentation forms fold to their base letters;
//  * every variant of an equivalence class becomes its canonical letter;
//  * heh (or a variant) directly followed by ZWNJ becomes ae (U+06D5) and
//    the ZWNJ is consumed;
// plus the opt-in rules in NormalizerOptions. Other text passes through
// byte-identical. Idempotent.
class Normalizer {
 public:
  explicit Normalizer(const AlphabetTable& table, NormalizerOptions options = {});

  NormalizationReport Normalize(std::string_view text) const;
  bool IsNormalized(std::string_view text) const;

  const NormalizerOptions& options() const { return options_; }

 private:
  void NormalizeSegment(std::string_view text, std::size_t seg_begin, std::size_t seg_end,
                        NormalizationReport& report) const;

  const AlphabetTable* table_;
  NormalizerOptions options_;
};

}  // namespace kurdtext

#endif  // KURDTEXT_NORMALIZER_H_
