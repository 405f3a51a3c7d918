#ifndef KURDTEXT_SEGMENTER_H_
#define KURDTEXT_SEGMENTER_H_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kurdtext/alphabet.h"

namespace kurdtext {

// Half-open byte range [start, end) into the source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind { kWord, kNumber, kPunct, kSymbol };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  Span span;
  TokenKind kind = TokenKind::kWord;
  std::string_view text;  // slice of the tokenized string
};

struct SegmenterOptions {
  // Characters that may end a sentence when followed by whitespace or the
  // end of text.
  std::u32string terminators = U".!?؟۔…";
  // Words (with or without their trailing period) after which a period
  // does not end a sentence.
  std::set<std::string, std::less<>> abbreviations;
};

// Reads an abbreviation list: UTF-8, one entry per line, blank lines and
// lines starting with '#' ignored. Throws Error(kIo).
std::set<std::string, std::less<>> LoadAbbreviations(const std::filesystem::path& path);

// Surface tokenizer and sentence splitter. Whitespace (including ZWSP)
// separates tokens; ZWNJ/ZWJ are glue inside words; every punctuation
// character is its own token; digit runs in any of the three digit
// systems form Number tokens.
class Segmenter {
 public:
  explicit Segmenter(const AlphabetTable& table, SegmenterOptions options = {});

  std::vector<Token> Words(std::string_view text) const;

  // Sentence spans cover every non-whitespace character and never split a
  // token. A terminator run followed by whitespace (or end of text) closes
  // a sentence, trailing closing quotes/brackets included. A single period
  // followed by a lowercase Latin letter, or preceded by a listed
  // abbreviation, does not. Arabic script has no case, so there the
  // terminator alone decides.
  std::vector<Span> Sentences(std::string_view text) const;

  const SegmenterOptions& options() const { return options_; }

 private:
  const AlphabetTable* table_;
  SegmenterOptions options_;
};

// Rebuilds `text` from its tokens and the whitespace gaps between them.
// Throws Error(kInconsistentSpans) unless the tokens are sorted,
// non-overlapping, in range, match their slices of `text`, and leave only
// whitespace uncovered.
std::string Reconstruct(std::string_view text, const std::vector<Token>& tokens);

}  // namespace kurdtext

#endif  // KURDTEXT_SEGMENTER_H_
