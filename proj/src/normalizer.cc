#include "kurdtext/normalizer.h"

#include <algorithm>

#include "kurdtext/unicode.h"

namespace kurdtext {
namespace {

constexpr char32_t kHeh = 0x0647;
constexpr char32_t kAe = 0x06D5;

// Position of the current rule in the precedence used to label a unit
// that several rules touched; later rules win.
enum class RuleRank { kNone, kDigits, kUnify, kPresentation, kFinalHeh, kHehZwnj };

std::string_view RuleName(RuleRank rank) {
  switch (rank) {
    case RuleRank::kDigits: return kRuleDigits;
    case RuleRank::kUnify: return kRuleUnifyVariant;
    case RuleRank::kPresentation: return kRulePresentationForm;
    case RuleRank::kFinalHeh: return kRuleFinalHeh;
    case RuleRank::kHehZwnj: return kRuleHehZwnj;
    case RuleRank::kNone: break;
  }
  return {};
}

}  // namespace

std::string ReplayRewrites(std::string_view input, const std::vector<Rewrite>& rewrites) {
  std::string out;
  out.reserve(input.size());
  std::size_t pos = 0;
  for (const Rewrite& r : rewrites) {
    out.append(input.substr(pos, r.offset - pos));
    out.append(r.after);
    pos = r.offset + r.before.size();
  }
  out.append(input.substr(pos));
  return out;
}

std::size_t MapToInputOffset(const std::vector<Rewrite>& rewrites, std::size_t output_offset) {
  std::ptrdiff_t delta = 0;
  for (const Rewrite& r : rewrites) {
    const std::size_t out_start = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(r.offset) + delta);
    if (output_offset < out_start) break;
    if (output_offset < out_start + r.after.size()) return r.offset;
    delta += static_cast<std::ptrdiff_t>(r.after.size()) - static_cast<std::ptrdiff_t>(r.before.size());
  }
  return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(output_offset) - delta);
}

Normalizer::Normalizer(const AlphabetTable& table, NormalizerOptions options)
    : table_(&table), options_(options) {}

namespace {

// A code point of the working sequence with the range of input characters
// (indices into the segment) it derives from.
struct Piece {
  char32_t cp;
  std::size_t lo;
  std::size_t hi;
  RuleRank rank;
};

}  // namespace

// Rules never look across whitespace, so the text is processed one
// whitespace-delimited segment at a time in three passes:
//   1. per character: presentation-form folding, single code point variant
//      unification, optional digit folding;
//   2. longest-match unification of multi code point variants;
//   3. heh rules (ZWNJ, then optional word-final heh).
// Characters touched by one multi-character rule form a single rewrite.
void Normalizer::NormalizeSegment(std::string_view text, std::size_t seg_begin,
                                  std::size_t seg_end, NormalizationReport& report) const {
  std::vector<unicode::DecodedChar> chars;
  for (std::size_t p = seg_begin; p < seg_end;) {
    chars.push_back(unicode::DecodeAt(text, p));
    p += chars.back().length;
  }

  std::vector<Piece> mapped;
  mapped.reserve(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const char32_t cp = chars[i].cp;
    if (!chars[i].valid) {
      mapped.push_back({cp, i, i, RuleRank::kNone});
      continue;
    }
    auto folded = unicode::FoldPresentationForm(cp);
    if (!folded.empty()) {
      for (char32_t f : folded) {
        const std::u32string* canon = table_->CanonicalOf(std::u32string_view(&f, 1));
        if (canon != nullptr) {
          for (char32_t c : *canon) mapped.push_back({c, i, i, RuleRank::kPresentation});
        } else {
          mapped.push_back({f, i, i, RuleRank::kPresentation});
        }
      }
      continue;
    }
    if (const std::u32string* canon = table_->CanonicalOf(std::u32string_view(&cp, 1))) {
      for (char32_t c : *canon) mapped.push_back({c, i, i, RuleRank::kUnify});
      continue;
    }
    if (options_.ascii_digits && cp > 0x7F) {
      if (auto v = unicode::DigitValue(cp)) {
        mapped.push_back({static_cast<char32_t>(U'0' + *v), i, i, RuleRank::kDigits});
        continue;
      }
    }
    mapped.push_back({cp, i, i, RuleRank::kNone});
  }

  std::vector<Piece> unified;
  unified.reserve(mapped.size());
  const std::size_t max_variant = table_->max_variant_length();
  std::u32string window;
  for (std::size_t k = 0; k < mapped.size();) {
    std::size_t matched = 0;
    const std::u32string* canon = nullptr;
    window.clear();
    for (std::size_t j = k; j < mapped.size() && window.size() < max_variant; ++j) {
      window.push_back(mapped[j].cp);
    }
    for (std::size_t len = window.size(); len >= 2; --len) {
      canon = table_->CanonicalOf(std::u32string_view(window).substr(0, len));
      if (canon != nullptr) {
        matched = len;
        break;
      }
    }
    if (matched == 0) {
      unified.push_back(mapped[k]);
      ++k;
      continue;
    }
    const std::size_t lo = mapped[k].lo;
    const std::size_t hi = mapped[k + matched - 1].hi;
    for (char32_t c : *canon) unified.push_back({c, lo, hi, RuleRank::kUnify});
    k += matched;
  }

  auto continues_word = [&](char32_t cp) {
    return table_->Classify(cp).is_letter || unicode::IsJoiner(cp) || cp == unicode::kTatweel ||
           unicode::GetCategory(cp) == unicode::Category::kMark;
  };
  auto is_consonant = [&](char32_t cp) {
    const CharClass cc = table_->Classify(cp);
    return cc.script == ScriptKind::kArabicKurdish && cc.grapheme != nullptr &&
           cc.grapheme->sound_class == SoundClass::kConsonant;
  };

  std::vector<Piece> out;
  out.reserve(unified.size());
  for (std::size_t k = 0; k < unified.size(); ++k) {
    Piece piece = unified[k];
    if (piece.cp == kHeh) {
      const bool has_next = k + 1 < unified.size();
      if (has_next && unified[k + 1].cp == unicode::kZwnj) {
        piece.cp = kAe;
        piece.hi = unified[k + 1].hi;
        piece.rank = RuleRank::kHehZwnj;
        ++k;
      } else if (options_.aggressive_heh && (!has_next || !continues_word(unified[k + 1].cp)) &&
                 !out.empty() && is_consonant(out.back().cp)) {
        piece.cp = kAe;
        piece.rank = std::max(piece.rank, RuleRank::kFinalHeh);
      }
    }
    out.push_back(piece);
  }

  // Group characters into units joined by multi-character pieces, then
  // emit each unit either verbatim or as one rewrite.
  std::size_t k = 0;
  for (std::size_t i = 0; i < chars.size();) {
    std::size_t unit_end = i;
    RuleRank rank = RuleRank::kNone;
    std::u32string after;
    std::size_t scan = k;
    while (scan < out.size() && out[scan].lo <= unit_end) {
      unit_end = std::max(unit_end, out[scan].hi);
      rank = std::max(rank, out[scan].rank);
      after.push_back(out[scan].cp);
      ++scan;
    }
    k = scan;
    const std::size_t b0 = chars[i].offset;
    const std::size_t b1 = chars[unit_end].offset + chars[unit_end].length;
    const std::string_view before = text.substr(b0, b1 - b0);
    if (rank == RuleRank::kNone) {
      report.output.append(before);
    } else {
      std::string after_utf8 = unicode::ToUtf8(after);
      if (after_utf8 != before) {
        report.rewrites.push_back({std::string(RuleName(rank)), b0, std::string(before), after_utf8});
      }
      report.output.append(after_utf8);
    }
    i = unit_end + 1;
  }
}

NormalizationReport Normalizer::Normalize(std::string_view text) const {
  NormalizationReport report;
  report.output.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t seg_begin = pos;
    while (pos < text.size()) {
      unicode::DecodedChar d = unicode::DecodeAt(text, pos);
      if (d.valid && unicode::IsSpace(d.cp)) break;
      pos += d.length;
    }
    if (pos > seg_begin) NormalizeSegment(text, seg_begin, pos, report);
    while (pos < text.size()) {
      unicode::DecodedChar d = unicode::DecodeAt(text, pos);
      if (!d.valid || !unicode::IsSpace(d.cp)) break;
      report.output.append(text.substr(pos, d.length));
      pos += d.length;
    }
  }
  return report;
}

bool Normalizer::IsNormalized(std::string_view text) const {
  return Normalize(text).rewrites.empty();
}

}  // namespace kurdtext
