#include "kurdtext/transliterator.h"

#include <algorithm>

#include "kurdtext/error.h"
#include "kurdtext/unicode.h"

namespace kurdtext {
namespace {

struct PunctPair {
  char32_t latin;
  char32_t arabic;
};

constexpr PunctPair kPunctuation[] = {{U',', 0x060C}, {U';', 0x061B}, {U'?', 0x061F}};

char32_t PunctToArabic(char32_t cp) {
  for (const PunctPair& p : kPunctuation) {
    if (p.latin == cp) return p.arabic;
  }
  return cp;
}

char32_t PunctToLatin(char32_t cp) {
  for (const PunctPair& p : kPunctuation) {
    if (p.arabic == cp) return p.latin;
  }
  return cp;
}

bool IsHiatusTrigger(std::u32string_view latin) {
  return latin == U"a" || latin == U"e" || latin == U"ê" || latin == U"o";
}

bool IsTransparent(char32_t cp) {
  return unicode::IsJoiner(cp) || cp == unicode::kTatweel ||
         unicode::GetCategory(cp) == unicode::Category::kMark;
}

std::string_view StrictSubstitute(ContextRule rule) {
  switch (rule) {
    case ContextRule::kStrictH: return "h";
    case ContextRule::kStrictX: return "x";
    default: return "";
  }
}

bool IsStrictRule(ContextRule rule) {
  return rule == ContextRule::kStrictDrop || rule == ContextRule::kStrictH ||
         rule == ContextRule::kStrictX;
}

[[noreturn]] void ThrowUnknown(std::string_view text, std::size_t offset, std::size_t length) {
  throw Error(ErrorCode::kUnknownGrapheme, "no mapping for '" +
                                               std::string(text.substr(offset, length)) +
                                               "' at byte " + std::to_string(offset));
}

// One Arabic-script unit inside a word: a mapped letter, or a transparent
// character (joiner, mark, tatweel) that is dropped.
struct ArabicUnit {
  std::u32string key;
  std::size_t offset = 0;
  std::size_t length = 0;
  const Grapheme* grapheme = nullptr;
  std::vector<const MappingEntry*> entries;
};

}  // namespace

std::string_view LossActionName(LossAction action) {
  switch (action) {
    case LossAction::kDropped: return "Dropped";
    case LossAction::kApproximated: return "Approximated";
    case LossAction::kPassedThrough: return "PassedThrough";
  }
  return "Dropped";
}

Transliterator::Transliterator(const AlphabetTable& table)
    : table_(&table), normalizer_(table), segmenter_(table) {
  for (const MappingEntry& m : table.mappings()) {
    if (m.context_rule == ContextRule::kCarrier && m.latin_to_arabic()) carrier_ = m.arabic;
  }
}

TranslitResult Transliterator::LatinToArabic(std::string_view text,
                                             const TranslitOptions& options) const {
  TranslitResult result;
  std::string out;
  out.reserve(text.size() * 2);
  const bool extended = options.mode == TranslitMode::kExtended;
  auto usable = [&](const MappingEntry* e) {
    if (!e->latin_to_arabic()) return false;
    if (e->context_rule == ContextRule::kConjunctionWaw) return false;
    return extended || !(e->latin.size() == 1 && IsExtendedLatinLetter(e->latin[0]));
  };

  bool in_word = false;
  std::u32string prev_key;
  std::u32string key;
  std::vector<std::size_t> ends;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const unicode::DecodedChar d = unicode::DecodeAt(text, pos);
    ++result.consumed;

    // Longest match over the table's Latin keys, on case-folded input.
    key.clear();
    ends.clear();
    for (std::size_t p = pos; p < text.size() && key.size() < table_->max_latin_key_length();) {
      const unicode::DecodedChar c = unicode::DecodeAt(text, p);
      if (!c.valid) break;
      key.push_back(unicode::ToLowerLatin(c.cp));
      p += c.length;
      ends.push_back(p);
    }
    std::vector<const MappingEntry*> candidates;
    std::size_t matched = 0;
    for (std::size_t len = key.size(); len > 0 && candidates.empty(); --len) {
      for (const MappingEntry* e : table_->EntriesForLatin(std::u32string_view(key).substr(0, len))) {
        if (usable(e)) candidates.push_back(e);
      }
      if (!candidates.empty()) matched = len;
    }

    if (!candidates.empty()) {
      const std::u32string_view grapheme_key = std::u32string_view(key).substr(0, matched);
      const std::size_t end = ends[matched - 1];
      const bool word_initial = !in_word;
      const MappingEntry* chosen = nullptr;
      for (const MappingEntry* e : candidates) {
        if (e->context_rule == ContextRule::kWordInitial && word_initial) chosen = e;
      }
      if (chosen == nullptr) {
        for (const MappingEntry* e : candidates) {
          if (e->context_rule != ContextRule::kWordInitial) {
            chosen = e;
            break;
          }
        }
      }
      if (chosen == nullptr) chosen = candidates.front();

      const Grapheme* g = table_->FindGrapheme(ScriptKind::kLatinKurdish, grapheme_key);
      const bool vowel = g != nullptr && g->sound_class == SoundClass::kVowel;
      if (vowel && (word_initial || IsHiatusTrigger(prev_key))) {
        out += unicode::ToUtf8(carrier_);
      }
      if (chosen->arabic.empty()) {
        result.loss.events.push_back(
            {pos, std::string(text.substr(pos, end - pos)), LossAction::kDropped, ""});
        ++result.silent;
      } else {
        out += unicode::ToUtf8(chosen->arabic);
      }
      result.consumed += matched - 1;
      prev_key.assign(grapheme_key);
      in_word = true;
      pos = end;
      continue;
    }

    if (d.valid && table_->Classify(d.cp).is_letter) {
      if (options.on_unknown == OnUnknown::kError) ThrowUnknown(text, pos, d.length);
      out.append(text.substr(pos, d.length));
      result.loss.events.push_back({pos, std::string(text.substr(pos, d.length)),
                                    LossAction::kPassedThrough, std::string(text.substr(pos, d.length))});
      prev_key.clear();
      in_word = true;
      pos += d.length;
      continue;
    }

    if (!d.valid) {
      if (options.on_unknown == OnUnknown::kError) ThrowUnknown(text, pos, d.length);
      result.loss.events.push_back({pos, std::string(text.substr(pos, d.length)),
                                    LossAction::kPassedThrough, std::string(text.substr(pos, d.length))});
      out.append(text.substr(pos, d.length));
    } else {
      const char32_t mapped = PunctToArabic(d.cp);
      if (mapped != d.cp) {
        unicode::AppendUtf8(out, mapped);
      } else {
        out.append(text.substr(pos, d.length));
      }
    }
    if (!(d.valid && IsTransparent(d.cp) && in_word)) {
      in_word = false;
      prev_key.clear();
    }
    pos += d.length;
  }
  result.output = normalizer_.Normalize(out).output;
  return result;
}

TranslitResult Transliterator::ArabicToLatin(std::string_view text,
                                             const TranslitOptions& options) const {
  TranslitResult result;
  NormalizationReport normalized = normalizer_.Normalize(text);
  std::string_view src = text;
  if (!normalized.rewrites.empty()) {
    result.input_rewrites = normalized.rewrites;
    src = normalized.output;
  }
  auto input_offset = [&](std::size_t offset) {
    return result.input_rewrites.empty() ? offset
                                         : MapToInputOffset(result.input_rewrites, offset);
  };
  const bool extended = options.mode == TranslitMode::kExtended;

  std::string out;
  out.reserve(src.size());
  std::vector<ArabicUnit> word;

  auto log = [&](const ArabicUnit& u, LossAction action, std::string substitute) {
    result.loss.events.push_back({input_offset(u.offset),
                                  std::string(src.substr(u.offset, u.length)), action,
                                  std::move(substitute)});
  };

  auto find_rule = [](const ArabicUnit& u, ContextRule rule) -> const MappingEntry* {
    for (const MappingEntry* e : u.entries) {
      if (e->context_rule == rule) return e;
    }
    return nullptr;
  };

  auto flush = [&] {
    std::vector<std::size_t> letters;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i].grapheme != nullptr) letters.push_back(i);
    }
    // nucleus[j]: letter j was read as a vowel (a vowel letter, or a
    // semivowel resolved to its vocalic reading).
    std::vector<bool> nucleus(letters.size(), false);
    std::size_t j = 0;
    for (const ArabicUnit& u : word) {
      if (u.grapheme == nullptr) {
        log(u, LossAction::kDropped, "");
        ++result.silent;
        continue;
      }
      const SoundClass sc = u.grapheme->sound_class;
      const MappingEntry* chosen = nullptr;
      bool ambiguous = false;
      if (sc == SoundClass::kVowel) nucleus[j] = true;

      if (sc == SoundClass::kSemivowel) {
        if (options.conjunction_waw && letters.size() == 1) {
          chosen = find_rule(u, ContextRule::kConjunctionWaw);
        }
        if (chosen == nullptr) {
          const ArabicUnit* prev = j > 0 ? &word[letters[j - 1]] : nullptr;
          const ArabicUnit* next = j + 1 < letters.size() ? &word[letters[j + 1]] : nullptr;
          const bool prev_vowel = prev != nullptr && nucleus[j - 1];
          const bool next_vowel =
              next != nullptr && next->grapheme->sound_class == SoundClass::kVowel;
          bool glide;
          if (prev == nullptr) {
            glide = true;
          } else if (prev->grapheme->sound_class == SoundClass::kCarrier) {
            glide = false;
          } else if (prev_vowel || next_vowel) {
            glide = true;
          } else if (next != nullptr && next->grapheme->sound_class == SoundClass::kSemivowel) {
            // Two semivowels between consonants: one of them is the
            // nucleus. Before a vowel the second one glides (dîwar),
            // otherwise the second one is the nucleus (hengwîn).
            const ArabicUnit* after = j + 2 < letters.size() ? &word[letters[j + 2]] : nullptr;
            glide = !(after != nullptr && after->grapheme->sound_class == SoundClass::kVowel);
            ambiguous = true;
          } else {
            glide = false;
          }
          nucleus[j] = !glide;
          chosen = find_rule(u, glide ? ContextRule::kGlide : ContextRule::kNucleus);
        }
      }
      if (chosen == nullptr && j == 0) chosen = find_rule(u, ContextRule::kWordInitial);
      if (chosen == nullptr) {
        for (const MappingEntry* e : u.entries) {
          if (e->context_rule != ContextRule::kWordInitial &&
              e->context_rule != ContextRule::kConjunctionWaw) {
            chosen = e;
            break;
          }
        }
      }
      if (chosen == nullptr) chosen = u.entries.front();

      if (chosen->latin.empty()) {
        log(u, LossAction::kDropped, "");
        ++result.silent;
      } else if (IsStrictRule(chosen->context_rule) && !extended) {
        const std::string_view sub = StrictSubstitute(chosen->context_rule);
        out += sub;
        log(u, LossAction::kApproximated, std::string(sub));
        if (sub.empty()) ++result.silent;
      } else {
        const std::string latin = unicode::ToUtf8(chosen->latin);
        out += latin;
        if (ambiguous) log(u, LossAction::kApproximated, latin);
      }
      ++j;
    }
    word.clear();
  };

  // Sentences are found on the source: Latin output is all lowercase, so
  // splitting it would read every boundary as a continuation.
  std::vector<std::size_t> sentence_starts;
  std::vector<std::size_t> cap_points;
  if (options.capitalize_sentences) {
    for (const Span& s : segmenter_.Sentences(src)) sentence_starts.push_back(s.start);
  }
  std::size_t next_sentence = 0;

  std::u32string key;
  std::vector<std::size_t> ends;
  std::size_t pos = 0;
  while (pos < src.size()) {
    if (next_sentence < sentence_starts.size() && sentence_starts[next_sentence] <= pos) {
      flush();
      cap_points.push_back(out.size());
      ++next_sentence;
    }
    const unicode::DecodedChar d = unicode::DecodeAt(src, pos);
    ++result.consumed;

    key.clear();
    ends.clear();
    for (std::size_t p = pos; p < src.size() && key.size() < table_->max_arabic_key_length();) {
      const unicode::DecodedChar c = unicode::DecodeAt(src, p);
      if (!c.valid) break;
      key.push_back(c.cp);
      p += c.length;
      ends.push_back(p);
    }
    ArabicUnit unit;
    for (std::size_t len = key.size(); len > 0; --len) {
      const std::u32string_view k = std::u32string_view(key).substr(0, len);
      for (const MappingEntry* e : table_->EntriesForArabic(k)) {
        if (e->arabic_to_latin()) unit.entries.push_back(e);
      }
      if (!unit.entries.empty()) {
        unit.key.assign(k);
        unit.offset = pos;
        unit.length = ends[len - 1] - pos;
        unit.grapheme = table_->FindGrapheme(ScriptKind::kArabicKurdish, k);
        break;
      }
    }
    // A double waw before a vowel is u + w (duwem), not the vowel û.
    if (unit.grapheme != nullptr && unit.key.size() == 2 &&
        unit.grapheme->sound_class == SoundClass::kVowel && unit.key[0] == unit.key[1] &&
        pos + unit.length < src.size()) {
      const unicode::DecodedChar after = unicode::DecodeAt(src, pos + unit.length);
      const Grapheme* g = table_->FindGrapheme(ScriptKind::kArabicKurdish,
                                               std::u32string_view(&after.cp, 1));
      const Grapheme* single = table_->FindGrapheme(ScriptKind::kArabicKurdish,
                                                    std::u32string_view(unit.key).substr(0, 1));
      if (after.valid && g != nullptr && g->sound_class == SoundClass::kVowel &&
          single != nullptr && single->sound_class == SoundClass::kSemivowel) {
        unit.entries.clear();
        for (const MappingEntry* e : table_->EntriesForArabic(unit.key.substr(0, 1))) {
          if (e->arabic_to_latin()) unit.entries.push_back(e);
        }
        unit.key.resize(1);
        unit.length = ends[0] - pos;
        unit.grapheme = single;
      }
    }
    if (unit.grapheme != nullptr) {
      result.consumed += unit.key.size() - 1;
      pos += unit.length;
      word.push_back(std::move(unit));
      continue;
    }
    if (d.valid && IsTransparent(d.cp)) {
      ArabicUnit t;
      t.key.push_back(d.cp);
      t.offset = pos;
      t.length = d.length;
      if (!word.empty()) {
        word.push_back(std::move(t));
      } else {
        log(t, LossAction::kDropped, "");
        ++result.silent;
      }
      pos += d.length;
      continue;
    }
    flush();
    if (!d.valid || table_->Classify(d.cp).is_letter) {
      if (options.on_unknown == OnUnknown::kError) {
        ThrowUnknown(text, input_offset(pos), d.length);
      }
      const std::string raw(src.substr(pos, d.length));
      result.loss.events.push_back(
          {input_offset(pos), raw, LossAction::kPassedThrough, raw});
      out += raw;
    } else {
      const char32_t mapped = PunctToLatin(d.cp);
      if (mapped != d.cp) {
        unicode::AppendUtf8(out, mapped);
      } else {
        out.append(src.substr(pos, d.length));
      }
    }
    pos += d.length;
  }
  flush();

  if (!cap_points.empty()) {
    std::string capitalized;
    capitalized.reserve(out.size());
    std::size_t copied = 0;
    for (std::size_t i = 0; i < cap_points.size(); ++i) {
      const std::size_t limit = i + 1 < cap_points.size() ? cap_points[i + 1] : out.size();
      for (std::size_t p = cap_points[i]; p < limit;) {
        const unicode::DecodedChar c = unicode::DecodeAt(out, p);
        if (c.valid && table_->Classify(c.cp).is_letter) {
          const char32_t upper = unicode::ToUpperLatin(c.cp);
          if (upper != c.cp) {
            capitalized.append(out, copied, p - copied);
            unicode::AppendUtf8(capitalized, upper);
            copied = p + c.length;
          }
          break;
        }
        p += c.length;
      }
    }
    capitalized.append(out, copied, std::string::npos);
    out = std::move(capitalized);
  }
  result.output = std::move(out);
  return result;
}

std::vector<RoundTripDiff> DiffStrings(std::string_view expected, std::string_view got) {
  const std::vector<unicode::DecodedChar> a = unicode::Decode(expected);
  const std::vector<unicode::DecodedChar> b = unicode::Decode(got);
  auto same = [&](std::size_t i, std::size_t j) {
    return expected.substr(a[i].offset, a[i].length) == got.substr(b[j].offset, b[j].length);
  };

  // Trim the common prefix and suffix, then align the middle.
  std::size_t pre = 0;
  while (pre < a.size() && pre < b.size() && same(pre, pre)) ++pre;
  std::size_t suf = 0;
  while (suf < a.size() - pre && suf < b.size() - pre &&
         same(a.size() - 1 - suf, b.size() - 1 - suf)) {
    ++suf;
  }
  const std::size_t n = a.size() - pre - suf;
  const std::size_t m = b.size() - pre - suf;
  std::vector<RoundTripDiff> diffs;
  if (n == 0 && m == 0) return diffs;

  auto bytes_a = [&](std::size_t from, std::size_t to) {  // code point indices
    if (from == to) return std::string();
    const std::size_t s = a[from].offset;
    return std::string(expected.substr(s, a[to - 1].offset + a[to - 1].length - s));
  };
  auto bytes_b = [&](std::size_t from, std::size_t to) {
    if (from == to) return std::string();
    const std::size_t s = b[from].offset;
    return std::string(got.substr(s, b[to - 1].offset + b[to - 1].length - s));
  };
  auto offset_a = [&](std::size_t i) { return i < a.size() ? a[i].offset : expected.size(); };

  constexpr std::size_t kMaxCells = 16u << 20;
  if (n == 0 || m == 0 || (n + 1) * (m + 1) > kMaxCells) {
    diffs.push_back({offset_a(pre), bytes_a(pre, pre + n), bytes_b(pre, pre + m)});
    return diffs;
  }

  std::vector<std::uint32_t> cost((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return cost[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t diag = at(i - 1, j - 1) + (same(pre + i - 1, pre + j - 1) ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  // Backtrack into (i, j) pairs that are matched; everything between two
  // consecutive matches is one hunk.
  std::vector<std::pair<std::size_t, std::size_t>> matches;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 && j > 0) {
    const bool eq = same(pre + i - 1, pre + j - 1);
    if (eq && at(i, j) == at(i - 1, j - 1)) {
      matches.push_back({i - 1, j - 1});
      --i, --j;
    } else if (!eq && at(i, j) == at(i - 1, j - 1) + 1) {
      --i, --j;
    } else if (at(i, j) == at(i - 1, j) + 1) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(matches.begin(), matches.end());
  matches.push_back({n, m});
  std::size_t ai = 0;
  std::size_t bj = 0;
  for (auto [mi, mj] : matches) {
    if (mi > ai || mj > bj) {
      diffs.push_back({offset_a(pre + ai), bytes_a(pre + ai, pre + mi), bytes_b(pre + bj, pre + mj)});
    }
    ai = mi + 1;
    bj = mj + 1;
  }
  return diffs;
}

RoundTripReport Transliterator::RoundTrip(std::string_view text, TranslitDirection first_leg,
                                          const TranslitOptions& options) const {
  TranslitOptions back = options;
  back.capitalize_sentences = false;
  RoundTripReport report;
  if (first_leg == TranslitDirection::kArabicToLatin) {
    report.expected = normalizer_.Normalize(text).output;
    const TranslitResult latin = ArabicToLatin(text, back);
    report.got = LatinToArabic(latin.output, back).output;
  } else {
    report.expected = std::string(text);
    const TranslitResult arabic = LatinToArabic(text, back);
    report.got = ArabicToLatin(arabic.output, back).output;
  }
  report.diffs = DiffStrings(report.expected, report.got);
  report.identical = report.diffs.empty();
  return report;
}

}  // namespace kurdtext
