#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kurdtext/corpus_stats.h"
#include "kurdtext/error.h"
#include "kurdtext/normalizer.h"
#include "kurdtext/segmenter.h"
#include "kurdtext/transliterator.h"
#include "kurdtext/unicode.h"
#include "support/generators.h"
#include "support/roundtrip_check.h"

namespace kurdtext {
namespace {

using testing::TextGenerator;

constexpr int kCases = 2000;

bool ContainsVariant(const AlphabetTable& table, std::string_view text) {
  const std::u32string cps = unicode::ToUtf32(text);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    for (std::size_t len = 1; len <= table.max_variant_length() && i + len <= cps.size(); ++len) {
      if (table.CanonicalOf(std::u32string_view(cps).substr(i, len)) != nullptr) return true;
    }
    if (cps[i] == 0x0647 && i + 1 < cps.size() && cps[i + 1] == unicode::kZwnj) return true;
    if (unicode::IsArabicPresentationForm(cps[i]) && !unicode::FoldPresentationForm(cps[i]).empty()) {
      return true;
    }
  }
  return false;
}

TEST(NormalizerProperty, IdempotentSoundAndComplete) {
  TextGenerator gen(101);
  const Normalizer n(BuiltinTables());
  NormalizerOptions all;
  all.aggressive_heh = true;
  all.ascii_digits = true;
  const Normalizer aggressive(BuiltinTables(), all);
  for (int i = 0; i < kCases; ++i) {
    const std::string s = i % 2 ? gen.ArabicAsciiZwnj(200) : gen.MixedScript(120);
    for (const Normalizer* norm : {&n, &aggressive}) {
      const NormalizationReport once = norm->Normalize(s);
      ASSERT_EQ(ReplayRewrites(s, once.rewrites), once.output) << s;
      const NormalizationReport twice = norm->Normalize(once.output);
      ASSERT_EQ(twice.output, once.output) << s;
      ASSERT_TRUE(twice.rewrites.empty()) << s;
      ASSERT_FALSE(ContainsVariant(BuiltinTables(), once.output)) << s;
      for (std::size_t k = 1; k < once.rewrites.size(); ++k) {
        ASSERT_GE(once.rewrites[k].offset,
                  once.rewrites[k - 1].offset + once.rewrites[k - 1].before.size());
      }
    }
  }
}

TEST(NormalizerProperty, NonArabicIsPreserved) {
  TextGenerator gen(102);
  const Normalizer n(BuiltinTables());
  const std::u32string latin = testing::HawarAlphabet() + U" .,!?0123456789\t‌";
  for (int i = 0; i < kCases; ++i) {
    const std::string s = gen.Words(latin, 10, 12);
    ASSERT_EQ(n.Normalize(s).output, s);
  }
}

TEST(SegmenterProperty, PartitionAndReversibility) {
  TextGenerator gen(201);
  const Segmenter seg(BuiltinTables());
  for (int i = 0; i < kCases; ++i) {
    const std::string s = gen.MixedScript(150);
    const std::vector<Token> tokens = seg.Words(s);
    ASSERT_EQ(Reconstruct(s, tokens), s);
    std::size_t pos = 0;
    for (const Token& t : tokens) {
      ASSERT_GE(t.span.start, pos);
      ASSERT_LT(t.span.start, t.span.end);
      for (std::size_t p = pos; p < t.span.start;) {
        const auto d = unicode::DecodeAt(s, p);
        ASSERT_TRUE(d.valid && unicode::IsSpace(d.cp));
        p += d.length;
      }
      for (std::size_t p = t.span.start; p < t.span.end;) {
        const auto d = unicode::DecodeAt(s, p);
        if (t.kind == TokenKind::kWord) ASSERT_FALSE(unicode::IsSpace(d.cp));
        p += d.length;
      }
      pos = t.span.end;
    }
  }
}

TEST(SegmenterProperty, ZwnjOpacity) {
  TextGenerator gen(202);
  const Segmenter seg(BuiltinTables());
  const std::string zwnj = unicode::ToUtf8(unicode::kZwnj);
  for (int i = 0; i < kCases; ++i) {
    const std::string s = gen.MixedScript(150);
    const std::vector<Token> tokens = seg.Words(s);
    const auto words = [&](const std::vector<Token>& ts) {
      return std::count_if(ts.begin(), ts.end(),
                           [](const Token& t) { return t.kind == TokenKind::kWord; });
    };
    for (const Token& t : tokens) {
      if (t.kind != TokenKind::kWord) continue;
      const auto chars = unicode::Decode(t.text);
      if (chars.size() < 2) continue;
      const std::size_t cut = chars[gen.Uniform(1, chars.size() - 1)].offset;
      std::string altered = s;
      altered.insert(t.span.start + cut, zwnj);
      ASSERT_LE(words(seg.Words(altered)), words(tokens)) << s;
      break;
    }
  }
}

TEST(SegmenterProperty, SentencesCoverWords) {
  TextGenerator gen(203);
  const Segmenter seg(BuiltinTables());
  for (int i = 0; i < kCases; ++i) {
    const std::string s = gen.MixedScript(150);
    const std::vector<Span> sentences = seg.Sentences(s);
    for (std::size_t k = 1; k < sentences.size(); ++k) {
      ASSERT_LE(sentences[k - 1].end, sentences[k].start);
    }
    for (const Token& t : seg.Words(s)) {
      const auto inside = std::count_if(sentences.begin(), sentences.end(), [&](const Span& sp) {
        return sp.start <= t.span.start && t.span.end <= sp.end;
      });
      ASSERT_EQ(inside, 1) << s;
    }
  }
}

TEST(TransliteratorProperty, TotalAndOrdered) {
  TextGenerator gen(301);
  const Transliterator tr(BuiltinTables());
  const Normalizer n(BuiltinTables());
  for (int i = 0; i < kCases; ++i) {
    const std::string s = gen.MixedScript(100);
    const std::size_t chars = unicode::Decode(s).size();
    for (TranslitMode mode : {TranslitMode::kStrict, TranslitMode::kExtended}) {
      TranslitOptions options;
      options.mode = mode;
      const TranslitResult forward = tr.LatinToArabic(s, options);
      ASSERT_EQ(forward.consumed, chars) << s;
      ASSERT_TRUE(n.IsNormalized(forward.output)) << s;
      const TranslitResult backward = tr.ArabicToLatin(s, options);
      const std::size_t normalized_chars = unicode::Decode(n.Normalize(s).output).size();
      ASSERT_EQ(backward.consumed, normalized_chars) << s;
      for (const TranslitResult* r : {&forward, &backward}) {
        for (std::size_t k = 1; k < r->loss.events.size(); ++k) {
          ASSERT_LT(r->loss.events[k - 1].offset, r->loss.events[k].offset) << s;
        }
        ASSERT_LE(r->silent, r->consumed);
      }
    }
  }
}

TEST(TransliteratorProperty, OutputAlphabet) {
  TextGenerator gen(302);
  const Transliterator tr(BuiltinTables());
  std::u32string strict_ok;
  for (const auto& l : HawarLetters()) strict_ok += l;
  std::u32string extended_ok = strict_ok + U"ḧẍ'";
  for (int i = 0; i < kCases; ++i) {
    const std::string s = gen.Words(testing::SoraniLetters() + U"وو", 6, 8);
    const std::string strict = tr.ArabicToLatin(s).output;
    const std::string extended = tr.ArabicToLatin(s, {TranslitMode::kExtended}).output;
    for (char32_t cp : unicode::ToUtf32(strict)) {
      if (cp != U' ') ASSERT_NE(strict_ok.find(cp), std::u32string::npos) << s;
    }
    for (char32_t cp : unicode::ToUtf32(extended)) {
      if (cp != U' ') ASSERT_NE(extended_ok.find(cp), std::u32string::npos) << s;
    }
  }
}

TEST(TransliteratorProperty, DroppedBizrokeExplainsRoundTrip) {
  // Words whose only lossy feature is the unwritten i.
  TextGenerator gen(303);
  const Transliterator tr(BuiltinTables());
  const std::u32string consonants = U"bcçdfghjkmnpqsştvxz";
  const std::u32string vowels = U"aeêoi";
  for (int i = 0; i < kCases; ++i) {
    std::u32string word;
    const std::size_t syllables = gen.Uniform(1, 4);
    for (std::size_t k = 0; k < syllables; ++k) {
      word.push_back(consonants[gen.Uniform(0, consonants.size() - 1)]);
      word.push_back(vowels[gen.Uniform(0, vowels.size() - 1)]);
      if (gen.Chance(0.5)) word.push_back(consonants[gen.Uniform(0, consonants.size() - 1)]);
    }
    if (gen.Chance(0.3)) word[0] = unicode::ToUpperLatin(word[0]);
    const std::string text = unicode::ToUtf8(word);
    const TranslitResult forward = tr.LatinToArabic(text);
    const RoundTripReport report = tr.RoundTrip(text, TranslitDirection::kLatinToArabic);
    for (const LossEvent& e : forward.loss.events) ASSERT_EQ(e.action, LossAction::kDropped);
    ASSERT_EQ(testing::ExplainLatinRoundTrip(forward, report), "") << text;
    ASSERT_EQ(report.identical, report.diffs.empty());
  }
}

TEST(CorpusProperty, MergeOrderAndConservation) {
  TextGenerator gen(401);
  const CorpusCounter counter(BuiltinTables());
  const Normalizer n(BuiltinTables());
  const Segmenter seg(BuiltinTables());
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> docs;
    const std::size_t count = gen.Uniform(1, 8);
    std::uint64_t words = 0;
    for (std::size_t k = 0; k < count; ++k) {
      docs.push_back(gen.MixedScript(80));
      for (const Token& t : seg.Words(n.Normalize(docs.back()).output)) {
        if (t.kind == TokenKind::kWord) ++words;
      }
    }
    FrequencyTable sequential;
    for (const auto& d : docs) counter.Accumulate(sequential, d);
    ASSERT_EQ(sequential.total_tokens, words);
    std::uint64_t sum = 0;
    for (const auto& [token, c] : sequential.entries) {
      sum += c.count;
      ASSERT_LE(c.doc_count, sequential.documents);
      ASSERT_LE(c.doc_count, c.count);
    }
    ASSERT_EQ(sum, sequential.total_tokens);

    std::shuffle(docs.begin(), docs.end(), gen.rng());
    const std::size_t split = gen.Uniform(0, docs.size());
    FrequencyTable left;
    FrequencyTable right;
    for (std::size_t k = 0; k < docs.size(); ++k) counter.Accumulate(k < split ? left : right, docs[k]);
    FrequencyTable lr = left;
    Merge(lr, right);
    FrequencyTable rl = right;
    Merge(rl, left);
    ASSERT_EQ(lr, sequential);
    ASSERT_EQ(rl, sequential);

    std::ostringstream out;
    ExportTsv(sequential, out);
    std::istringstream in(out.str());
    ASSERT_EQ(ImportTsv(in), sequential);
  }
}

TEST(AlphabetProperty, DetectionRatiosAreBounded) {
  TextGenerator gen(501);
  for (int i = 0; i < kCases; ++i) {
    const std::string s = gen.MixedScript(100);
    const ScriptDetection a = DetectScript(BuiltinTables(), s);
    const ScriptDetection b = DetectScript(BuiltinTables(), s);
    ASSERT_EQ(a.kind, b.kind);
    for (double r : {a.arabic_ratio, a.latin_ratio, a.other_ratio}) {
      ASSERT_GE(r, 0.0);
      ASSERT_LE(r, 1.0);
    }
    ASSERT_LE(a.arabic_ratio + a.latin_ratio + a.other_ratio, 1.0 + 1e-9);
  }
}

}  // namespace
}  // namespace kurdtext
