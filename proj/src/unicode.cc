#include "kurdtext/unicode.h"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace kurdtext {
namespace unicode {
namespace {

struct CategoryRange {
  char32_t first;
  char32_t last;
  Category category;
};

struct PresentationFold {
  char32_t cp;
  std::uint16_t offset;
  std::uint16_t length;
};

constexpr Category kLetter = Category::kLetter;
constexpr Category kMark = Category::kMark;
constexpr Category kDigit = Category::kDigit;
constexpr Category kPunct = Category::kPunct;
constexpr Category kSymbol = Category::kSymbol;
constexpr Category kSpace = Category::kSpace;

#include "unicode_tables.inc"

bool IsContinuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

DecodedChar DecodeAt(std::string_view text, std::size_t offset) {
  DecodedChar d;
  d.offset = offset;
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  const unsigned char b0 = s[offset];
  auto fail = [&] {
    d.cp = kReplacement;
    d.length = 1;
    d.valid = false;
    return d;
  };
  if (b0 < 0x80) {
    d.cp = b0;
    d.length = 1;
    return d;
  }
  std::size_t len;
  char32_t cp;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return fail();
  }
  if (offset + len > n) return fail();
  for (std::size_t i = 1; i < len; ++i) {
    if (!IsContinuation(s[offset + i])) return fail();
    cp = (cp << 6) | (s[offset + i] & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return fail();
  }
  d.cp = cp;
  d.length = len;
  return d;
}

std::vector<DecodedChar> Decode(std::string_view text) {
  std::vector<DecodedChar> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    out.push_back(DecodeAt(text, i));
    i += out.back().length;
  }
  return out;
}

std::optional<std::size_t> FindInvalidUtf8(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    DecodedChar d = DecodeAt(text, i);
    if (!d.valid) return i;
    i += d.length;
  }
  return std::nullopt;
}

void AppendUtf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string ToUtf8(char32_t cp) {
  std::string s;
  AppendUtf8(s, cp);
  return s;
}

std::string ToUtf8(std::span<const char32_t> cps) {
  std::string s;
  for (char32_t cp : cps) AppendUtf8(s, cp);
  return s;
}

std::u32string ToUtf32(std::string_view text) {
  std::u32string out;
  for (const DecodedChar& d : Decode(text)) out.push_back(d.cp);
  return out;
}

Category GetCategory(char32_t cp) {
  const auto* end = std::end(kCategoryRanges);
  const auto* it = std::upper_bound(
      std::begin(kCategoryRanges), end, cp,
      [](char32_t c, const CategoryRange& r) { return c < r.first; });
  if (it == std::begin(kCategoryRanges)) return Category::kOther;
  --it;
  return cp <= it->last ? it->category : Category::kOther;
}

bool IsSpace(char32_t cp) {
  if (cp == kZwsp || cp == kBom) return true;
  return GetCategory(cp) == Category::kSpace;
}

bool IsJoiner(char32_t cp) { return cp == kZwnj || cp == kZwj; }

std::optional<int> DigitValue(char32_t cp) {
  if (cp >= U'0' && cp <= U'9') return static_cast<int>(cp - U'0');
  if (cp >= 0x0660 && cp <= 0x0669) return static_cast<int>(cp - 0x0660);
  if (cp >= 0x06F0 && cp <= 0x06F9) return static_cast<int>(cp - 0x06F0);
  return std::nullopt;
}

bool IsArabicPresentationForm(char32_t cp) {
  return (cp >= 0xFB50 && cp <= 0xFDFF) || (cp >= 0xFE70 && cp <= 0xFEFF && cp != kBom);
}

std::span<const char32_t> FoldPresentationForm(char32_t cp) {
  if (!IsArabicPresentationForm(cp)) return {};
  const auto* end = std::end(kPresentationFolds);
  const auto* it = std::lower_bound(
      std::begin(kPresentationFolds), end, cp,
      [](const PresentationFold& f, char32_t c) { return f.cp < c; });
  if (it == end || it->cp != cp) return {};
  return {kPresentationFoldData + it->offset, it->length};
}

char32_t ToLowerLatin(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp < 0xC0) return cp;
  if (cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp == 0x0130) return U'i';
  if (cp == 0x0178) return 0xFF;
  if ((cp >= 0x0100 && cp <= 0x012F) || (cp >= 0x0132 && cp <= 0x0137) ||
      (cp >= 0x014A && cp <= 0x0177) || (cp >= 0x1E00 && cp <= 0x1E95) ||
      (cp >= 0x1EA0 && cp <= 0x1EFF)) {
    return cp % 2 == 0 ? cp + 1 : cp;
  }
  if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E)) {
    return cp % 2 == 1 ? cp + 1 : cp;
  }
  return cp;
}

char32_t ToUpperLatin(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if (cp < 0xE0) return cp;
  if (cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  if (cp == 0xFF) return 0x0178;
  if ((cp >= 0x0100 && cp <= 0x012F) || (cp >= 0x0132 && cp <= 0x0137) ||
      (cp >= 0x014A && cp <= 0x0177) || (cp >= 0x1E00 && cp <= 0x1E95) ||
      (cp >= 0x1EA0 && cp <= 0x1EFF)) {
    return cp % 2 == 1 ? cp - 1 : cp;
  }
  if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E)) {
    return cp % 2 == 0 ? cp - 1 : cp;
  }
  return cp;
}

std::optional<std::u32string> ParseHexList(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    std::string_view item = text.substr(i, j - i);
    if (item.size() > 2 && (item.substr(0, 2) == "U+" || item.substr(0, 2) == "u+")) {
      item.remove_prefix(2);
    }
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value, 16);
    if (ec != std::errc() || ptr != item.data() + item.size() || value > 0x10FFFF ||
        (value >= 0xD800 && value <= 0xDFFF)) {
      return std::nullopt;
    }
    out.push_back(static_cast<char32_t>(value));
    i = j;
  }
  return out;
}

std::string FormatHexList(std::u32string_view cps) {
  std::string out;
  char buf[16];
  for (char32_t cp : cps) {
    if (!out.empty()) out.push_back(' ');
    int n = std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
    out.append(buf, static_cast<std::size_t>(n));
  }
  return out;
}

}  // namespace unicode
}  // namespace kurdtext
