#ifndef KURDTEXT_UNICODE_H_
#define KURDTEXT_UNICODE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kurdtext {
namespace unicode {

constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kZwj = 0x200D;
constexpr char32_t kZwsp = 0x200B;
constexpr char32_t kBom = 0xFEFF;
constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kReplacement = 0xFFFD;

// One decoded scalar value and the byte range it occupied.
struct DecodedChar {
  char32_t cp = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
  bool valid = true;
};

// Decodes the scalar starting at `offset`. Ill-formed sequences yield
// U+FFFD with length 1 and valid=false.
DecodedChar DecodeAt(std::string_view text, std::size_t offset);

std::vector<DecodedChar> Decode(std::string_view text);

// Byte offset of the first ill-formed sequence, if any.
std::optional<std::size_t> FindInvalidUtf8(std::string_view text);

void AppendUtf8(std::string& out, char32_t cp);
std::string ToUtf8(char32_t cp);
std::string ToUtf8(std::span<const char32_t> cps);
std::u32string ToUtf32(std::string_view text);

enum class Category : std::uint8_t {
  kOther,
  kLetter,
  kMark,
  kDigit,
  kPunct,
  kSymbol,
  kSpace,
};

// Coarse general category (Unicode 13 data).
Category GetCategory(char32_t cp);

// Whitespace for segmentation purposes: Unicode spaces, C0 controls that
// act as spacing, ZWSP and a stray BOM. ZWNJ is not whitespace.
bool IsSpace(char32_t cp);
bool IsJoiner(char32_t cp);

// Decimal digit value for ASCII, Arabic-Indic and Extended Arabic-Indic
// digits; nullopt otherwise.
std::optional<int> DigitValue(char32_t cp);

bool IsArabicPresentationForm(char32_t cp);

// Compatibility fold of an Arabic presentation form to base letters;
// empty when cp is not a foldable presentation form.
std::span<const char32_t> FoldPresentationForm(char32_t cp);

// Simple case mapping for Latin letters used by the Hawar alphabet and
// the Latin-1 / Latin Extended-A / Latin Extended Additional blocks.
char32_t ToLowerLatin(char32_t cp);
char32_t ToUpperLatin(char32_t cp);

// Hex list "0648 0648" <-> code points. Parse returns nullopt on any
// malformed item or non-scalar value.
std::optional<std::u32string> ParseHexList(std::string_view text);
std::string FormatHexList(std::u32string_view cps);

}  // namespace unicode
}  // namespace kurdtext

#endif  // KURDTEXT_UNICODE_H_
