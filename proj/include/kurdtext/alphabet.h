#ifndef KURDTEXT_ALPHABET_H_
#define KURDTEXT_ALPHABET_H_

// Alphabet inventories for Latin-script (Hawar) and Arabic-script (Sorani)
// Kurdish, the Unicode equivalence classes of Arabic-script letters, the
// Latin <-> Arabic correspondence table, and script detection.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kurdtext {

enum class ScriptKind { kArabicKurdish, kLatinKurdish, kMixed, kOther };

enum class SoundClass { kVowel, kConsonant, kSemivowel, kCarrier, kOther };

std::string_view ScriptKindName(ScriptKind kind);
std::optional<ScriptKind> ParseScriptKind(std::string_view name);

struct Grapheme {
  std::u32string codepoints;
  ScriptKind script = ScriptKind::kOther;
  SoundClass sound_class = SoundClass::kOther;
  bool canonical = true;

  friend bool operator==(const Grapheme&, const Grapheme&) = default;
};

struct EquivalenceClass {
  Grapheme canonical;
  std::vector<std::u32string> variants;

  friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

enum class MappingClass { kBijective, kOneToMany, kApproximate, kAbsent };

enum class Direction { kBoth, kLatinToArabicOnly, kArabicToLatinOnly };

// Positional handlers a mapping row can bind to. The set is closed; the
// transliterator implements each one.
//   word_initial     row applies only to the first letter of a word
//   glide/nucleus    consonantal (w, y) vs vocalic (u, î) reading of و/ی
//   carrier          the hamza carrier written before vowel-initial syllables
//   conjunction_waw  standalone و read as the conjunction û (opt-in)
//   strict_drop/h/x  substitute used for an approximate letter in strict mode
enum class ContextRule {
  kNone,
  kWordInitial,
  kGlide,
  kNucleus,
  kCarrier,
  kConjunctionWaw,
  kStrictDrop,
  kStrictH,
  kStrictX,
};

std::string_view MappingClassName(MappingClass klass);
std::string_view DirectionName(Direction direction);
std::string_view ContextRuleName(ContextRule rule);

struct MappingEntry {
  std::u32string latin;   // empty when the letter has no Latin counterpart
  std::u32string arabic;  // empty when the letter has no Arabic counterpart
  MappingClass klass = MappingClass::kBijective;
  Direction direction = Direction::kBoth;
  ContextRule context_rule = ContextRule::kNone;
  std::string comment;

  bool latin_to_arabic() const { return direction != Direction::kArabicToLatinOnly; }
  bool arabic_to_latin() const { return direction != Direction::kLatinToArabicOnly; }

  friend bool operator==(const MappingEntry&, const MappingEntry&) = default;
};

// The 31 letters of the Hawar alphabet, lowercase.
const std::vector<std::u32string>& HawarLetters();
// Letters only emitted in extended mode: ḧ ẍ '.
const std::vector<std::u32string>& ExtendedLatinLetters();
bool IsHawarLetter(char32_t lowercase_cp);
bool IsExtendedLatinLetter(char32_t lowercase_cp);

struct CharClass {
  ScriptKind script = ScriptKind::kOther;
  bool is_letter = false;
  const Grapheme* grapheme = nullptr;  // points into the table
};

// Immutable after construction; safe for concurrent reads.
class AlphabetTable {
 public:
  // Validates every invariant and throws kurdtext::Error on violation.
  AlphabetTable(std::vector<EquivalenceClass> equivalences,
                std::vector<MappingEntry> mappings);

  const std::vector<Grapheme>& graphemes() const { return graphemes_; }
  const std::vector<EquivalenceClass>& equivalences() const { return equivalences_; }
  const std::vector<MappingEntry>& mappings() const { return mappings_; }

  // Inventory or variant grapheme with exactly these code points.
  const Grapheme* FindGrapheme(ScriptKind script, std::u32string_view cps) const;

  // Canonical code points for a variant sequence, if it is one.
  const std::u32string* CanonicalOf(std::u32string_view variant) const;
  // Longest variant length in code points (for longest-match scanning).
  std::size_t max_variant_length() const { return max_variant_length_; }

  std::vector<const MappingEntry*> EntriesForLatin(std::u32string_view latin) const;
  std::vector<const MappingEntry*> EntriesForArabic(std::u32string_view arabic) const;
  std::size_t max_latin_key_length() const { return max_latin_key_; }
  std::size_t max_arabic_key_length() const { return max_arabic_key_; }

  CharClass Classify(char32_t cp) const;

 private:
  struct IndexedChar {
    ScriptKind script;
    bool is_letter;
    std::ptrdiff_t grapheme;  // index into graphemes_, -1 for none
  };

  void BuildIndexes();

  std::vector<Grapheme> graphemes_;
  std::vector<EquivalenceClass> equivalences_;
  std::vector<MappingEntry> mappings_;
  std::map<std::u32string, std::u32string, std::less<>> variant_to_canonical_;
  std::multimap<std::u32string, std::size_t, std::less<>> by_latin_;
  std::multimap<std::u32string, std::size_t, std::less<>> by_arabic_;
  std::size_t max_variant_length_ = 0;
  std::size_t max_latin_key_ = 0;
  std::size_t max_arabic_key_ = 0;
  std::unordered_map<char32_t, IndexedChar> char_index_;
};

// Parses the two TSV documents. Throws kurdtext::Error (MalformedRow,
// DuplicateVariant, NonTotal) listing every violation with its row.
AlphabetTable ParseTables(std::string_view mapping_tsv, std::string_view equivalence_tsv);

// Loads `mapping.tsv` and `equivalences.tsv` from a directory, or, when
// `path` names a file, that file as the mapping table with
// `equivalences.tsv` beside it. Throws Error(kIo) when a file is missing.
AlphabetTable LoadTables(const std::filesystem::path& path);

std::string FormatMappingTsv(const AlphabetTable& table);
std::string FormatEquivalenceTsv(const AlphabetTable& table);
void SaveTables(const AlphabetTable& table, const std::filesystem::path& directory);

// Tables compiled into the library from data/.
const AlphabetTable& BuiltinTables();
std::string_view BuiltinMappingTsv();
std::string_view BuiltinEquivalenceTsv();

CharClass ClassifyChar(const AlphabetTable& table, char32_t cp);

struct DetectOptions {
  // Both Kurdish scripts must exceed this fraction of letters for Mixed.
  double mixed_threshold = 0.10;
};

struct DialectCue {
  std::string cue;  // e.g. "sorani_definite_suffix"
  std::string word;
  std::size_t offset = 0;
  ScriptKind script = ScriptKind::kOther;
};

struct ScriptDetection {
  ScriptKind kind = ScriptKind::kOther;
  double arabic_ratio = 0.0;
  double latin_ratio = 0.0;
  double other_ratio = 0.0;
  std::size_t letter_count = 0;
  std::vector<DialectCue> dialect_cues;
};

ScriptDetection DetectScript(const AlphabetTable& table, std::string_view text,
                             const DetectOptions& options = {});

}  // namespace kurdtext

#endif  // KURDTEXT_ALPHABET_H_
