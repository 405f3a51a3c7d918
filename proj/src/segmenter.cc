#include "kurdtext/segmenter.h"

#include <fstream>

#include "kurdtext/error.h"
#include "kurdtext/unicode.h"

namespace kurdtext {
namespace {

bool IsApostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

bool IsNumberSeparator(char32_t cp) {
  return cp == U'.' || cp == U',' || cp == 0x066B || cp == 0x066C;
}

bool IsCloser(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U')': case U']': case U'}':
    case 0x00BB: case 0x2019: case 0x201D: case 0x203A:
      return true;
    default:
      return false;
  }
}

char32_t FirstCodePoint(std::string_view s) {
  return s.empty() ? 0 : unicode::DecodeAt(s, 0).cp;
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "Word";
    case TokenKind::kNumber: return "Number";
    case TokenKind::kPunct: return "Punct";
    case TokenKind::kSymbol: return "Symbol";
  }
  return "Symbol";
}

std::set<std::string, std::less<>> LoadAbbreviations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open abbreviation list " + path.string());
  std::set<std::string, std::less<>> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    first = false;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t lead = line.find_first_not_of(" \t");
    if (lead == std::string::npos || line[lead] == '#') continue;
    out.insert(line.substr(lead));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read abbreviation list " + path.string());
  return out;
}

Segmenter::Segmenter(const AlphabetTable& table, SegmenterOptions options)
    : table_(&table), options_(std::move(options)) {}

std::vector<Token> Segmenter::Words(std::string_view text) const {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t start, std::size_t end, TokenKind kind) {
    tokens.push_back({{start, end}, kind, text.substr(start, end - start)});
  };
  auto is_wordish = [&](const unicode::DecodedChar& d) {
    if (!d.valid) return false;
    if (unicode::IsJoiner(d.cp) || d.cp == unicode::kTatweel) return true;
    if (unicode::GetCategory(d.cp) == unicode::Category::kMark) return true;
    return table_->Classify(d.cp).is_letter;
  };
  auto is_letter = [&](const unicode::DecodedChar& d) {
    return d.valid && d.cp != unicode::kTatweel && table_->Classify(d.cp).is_letter;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const unicode::DecodedChar d = unicode::DecodeAt(text, pos);
    if (d.valid && unicode::IsSpace(d.cp)) {
      pos += d.length;
      continue;
    }
    const std::size_t start = pos;
    if (is_wordish(d)) {
      bool has_letter = is_letter(d);
      std::size_t end = pos + d.length;
      bool prev_letter = has_letter;
      while (end < text.size()) {
        const unicode::DecodedChar n = unicode::DecodeAt(text, end);
        if (is_wordish(n)) {
          // Joiners, marks and tatweel are transparent to prev_letter.
          if (is_letter(n)) {
            has_letter = true;
            prev_letter = true;
          }
          end += n.length;
          continue;
        }
        // An apostrophe between two letters stays inside the word.
        if (n.valid && IsApostrophe(n.cp) && prev_letter) {
          std::size_t p = end + n.length;
          unicode::DecodedChar after{};
          while (p < text.size()) {
            after = unicode::DecodeAt(text, p);
            if (!is_wordish(after) || is_letter(after)) break;
            p += after.length;
          }
          if (p < text.size() && is_letter(after)) {
            end += n.length;
            prev_letter = false;
            continue;
          }
        }
        break;
      }
      emit(start, end, has_letter ? TokenKind::kWord : TokenKind::kSymbol);
      pos = end;
      continue;
    }
    if (d.valid && unicode::DigitValue(d.cp)) {
      std::size_t end = pos + d.length;
      while (end < text.size()) {
        const unicode::DecodedChar n = unicode::DecodeAt(text, end);
        if (n.valid && unicode::DigitValue(n.cp)) {
          end += n.length;
          continue;
        }
        if (n.valid && IsNumberSeparator(n.cp) && end + n.length < text.size()) {
          const unicode::DecodedChar after = unicode::DecodeAt(text, end + n.length);
          if (after.valid && unicode::DigitValue(after.cp)) {
            end += n.length;
            continue;
          }
        }
        break;
      }
      emit(start, end, TokenKind::kNumber);
      pos = end;
      continue;
    }
    const bool punct = d.valid && unicode::GetCategory(d.cp) == unicode::Category::kPunct;
    emit(start, pos + d.length, punct ? TokenKind::kPunct : TokenKind::kSymbol);
    pos += d.length;
  }
  return tokens;
}

std::vector<Span> Segmenter::Sentences(std::string_view text) const {
  const std::vector<Token> tokens = Words(text);
  std::vector<Span> sentences;
  if (tokens.empty()) return sentences;

  auto is_terminator = [&](const Token& t) {
    if (t.kind != TokenKind::kPunct) return false;
    return options_.terminators.find(FirstCodePoint(t.text)) != std::u32string::npos;
  };

  std::size_t sentence_start = tokens.front().span.start;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_terminator(tokens[i])) continue;
    // Extend over an adjacent terminator run, then adjacent closers.
    std::size_t last = i;
    while (last + 1 < tokens.size() && tokens[last + 1].span.start == tokens[last].span.end &&
           is_terminator(tokens[last + 1])) {
      ++last;
    }
    const std::size_t run_last = last;
    while (last + 1 < tokens.size() && tokens[last + 1].span.start == tokens[last].span.end &&
           tokens[last + 1].kind == TokenKind::kPunct &&
           IsCloser(FirstCodePoint(tokens[last + 1].text))) {
      ++last;
    }
    const bool at_end = last + 1 == tokens.size();
    const bool gap_follows = !at_end && tokens[last + 1].span.start > tokens[last].span.end;
    if (!at_end && !gap_follows) {
      i = last;
      continue;
    }
    bool boundary = true;
    if (run_last == i && tokens[i].text == ".") {
      if (i > 0 && tokens[i - 1].span.end == tokens[i].span.start &&
          tokens[i - 1].kind == TokenKind::kWord) {
        const std::string_view word = tokens[i - 1].text;
        const std::string with_dot = std::string(word) + ".";
        if (options_.abbreviations.contains(word) || options_.abbreviations.contains(with_dot)) {
          boundary = false;
        }
      }
      if (boundary && !at_end) {
        const char32_t next = FirstCodePoint(tokens[last + 1].text);
        const CharClass cc = table_->Classify(next);
        if (cc.is_letter && cc.script != ScriptKind::kArabicKurdish &&
            unicode::ToUpperLatin(next) != next) {
          boundary = false;
        }
      }
    }
    if (boundary) {
      sentences.push_back({sentence_start, tokens[last].span.end});
      if (!at_end) sentence_start = tokens[last + 1].span.start;
    }
    i = last;
  }
  if (sentences.empty() || sentences.back().end != tokens.back().span.end) {
    sentences.push_back({sentence_start, tokens.back().span.end});
  }
  return sentences;
}

std::string Reconstruct(std::string_view text, const std::vector<Token>& tokens) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  auto check_gap = [&](std::size_t from, std::size_t to, std::size_t index) {
    for (std::size_t p = from; p < to;) {
      const unicode::DecodedChar d = unicode::DecodeAt(text, p);
      if (!d.valid || !unicode::IsSpace(d.cp)) {
        throw Error(ErrorCode::kInconsistentSpans,
                    "non-whitespace text at byte " + std::to_string(p) +
                        " is not covered by any token (before token " + std::to_string(index) +
                        ")");
      }
      p += d.length;
    }
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.span.start < pos || t.span.end <= t.span.start || t.span.end > text.size()) {
      throw Error(ErrorCode::kInconsistentSpans,
                  "token " + std::to_string(i) + " has an out-of-order or out-of-range span");
    }
    if (text.substr(t.span.start, t.span.size()) != t.text) {
      throw Error(ErrorCode::kInconsistentSpans,
                  "token " + std::to_string(i) + " text does not match its span");
    }
    check_gap(pos, t.span.start, i);
    out.append(text.substr(pos, t.span.start - pos));
    out.append(t.text);
    pos = t.span.end;
  }
  check_gap(pos, text.size(), tokens.size());
  out.append(text.substr(pos));
  return out;
}

}  // namespace kurdtext
