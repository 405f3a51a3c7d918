#include "kurdtext/alphabet.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "kurdtext/error.h"
#include "kurdtext/unicode.h"

namespace kurdtext {
namespace {

struct InventoryLetter {
  std::u32string codepoints;
  SoundClass sound_class;
};

const std::vector<InventoryLetter>& LatinInventory() {
  static const std::vector<InventoryLetter> kLetters = [] {
    std::vector<InventoryLetter> v;
    const std::u32string vowels = U"aeêiîouû";
    for (const std::u32string& l : HawarLetters()) {
      SoundClass sc = SoundClass::kConsonant;
      if (vowels.find(l[0]) != std::u32string::npos) sc = SoundClass::kVowel;
      if (l == U"w" || l == U"y") sc = SoundClass::kSemivowel;
      v.push_back({l, sc});
    }
    v.push_back({U"ll", SoundClass::kConsonant});
    v.push_back({U"rr", SoundClass::kConsonant});
    for (const std::u32string& l : ExtendedLatinLetters()) {
      v.push_back({l, SoundClass::kConsonant});
    }
    return v;
  }();
  return kLetters;
}

const std::vector<InventoryLetter>& ArabicInventory() {
  static const std::vector<InventoryLetter> kLetters = {
      {U"ئ", SoundClass::kCarrier},
      {U"ا", SoundClass::kVowel},
      {U"ب", SoundClass::kConsonant},
      {U"پ", SoundClass::kConsonant},
      {U"ت", SoundClass::kConsonant},
      {U"ج", SoundClass::kConsonant},
      {U"چ", SoundClass::kConsonant},
      {U"ح", SoundClass::kConsonant},
      {U"خ", SoundClass::kConsonant},
      {U"د", SoundClass::kConsonant},
      {U"ر", SoundClass::kConsonant},
      {U"ڕ", SoundClass::kConsonant},
      {U"ز", SoundClass::kConsonant},
      {U"ژ", SoundClass::kConsonant},
      {U"س", SoundClass::kConsonant},
      {U"ش", SoundClass::kConsonant},
      {U"ع", SoundClass::kConsonant},
      {U"غ", SoundClass::kConsonant},
      {U"ف", SoundClass::kConsonant},
      {U"ڤ", SoundClass::kConsonant},
      {U"ق", SoundClass::kConsonant},
      {U"ک", SoundClass::kConsonant},
      {U"گ", SoundClass::kConsonant},
      {U"ل", SoundClass::kConsonant},
      {U"ڵ", SoundClass::kConsonant},
      {U"م", SoundClass::kConsonant},
      {U"ن", SoundClass::kConsonant},
      {U"ه", SoundClass::kConsonant},
      {U"ە", SoundClass::kVowel},
      {U"و", SoundClass::kSemivowel},
      {U"وو", SoundClass::kVowel},
      {U"ۆ", SoundClass::kVowel},
      {U"ی", SoundClass::kSemivowel},
      {U"ێ", SoundClass::kVowel},
  };
  return kLetters;
}

template <typename E>
struct NamedValue {
  std::string_view name;
  E value;
};

constexpr NamedValue<MappingClass> kClassNames[] = {
    {"Bijective", MappingClass::kBijective},
    {"OneToMany", MappingClass::kOneToMany},
    {"Approximate", MappingClass::kApproximate},
    {"Absent", MappingClass::kAbsent},
};

constexpr NamedValue<Direction> kDirectionNames[] = {
    {"Both", Direction::kBoth},
    {"LatinToArabicOnly", Direction::kLatinToArabicOnly},
    {"ArabicToLatinOnly", Direction::kArabicToLatinOnly},
};

constexpr NamedValue<ContextRule> kRuleNames[] = {
    {"", ContextRule::kNone},
    {"word_initial", ContextRule::kWordInitial},
    {"glide", ContextRule::kGlide},
    {"nucleus", ContextRule::kNucleus},
    {"carrier", ContextRule::kCarrier},
    {"conjunction_waw", ContextRule::kConjunctionWaw},
    {"strict_drop", ContextRule::kStrictDrop},
    {"strict_h", ContextRule::kStrictH},
    {"strict_x", ContextRule::kStrictX},
};

template <typename E, std::size_t N>
std::string_view NameOf(const NamedValue<E> (&table)[N], E value) {
  for (const auto& nv : table) {
    if (nv.value == value) return nv.name;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> ValueOf(const NamedValue<E> (&table)[N], std::string_view name) {
  for (const auto& nv : table) {
    if (nv.name == name) return nv.value;
  }
  return std::nullopt;
}

std::string Describe(std::u32string_view cps) {
  std::string s = "<" + unicode::ToUtf8(std::span<const char32_t>(cps.data(), cps.size()));
  s += "> (" + unicode::FormatHexList(cps) + ")";
  return s;
}

const InventoryLetter* FindInventory(const std::vector<InventoryLetter>& inv,
                                     std::u32string_view cps) {
  for (const InventoryLetter& l : inv) {
    if (l.codepoints == cps) return &l;
  }
  return nullptr;
}

// Row numbers are 1-based file lines; 0 falls back to the entry ordinal.
struct RowIndex {
  std::vector<std::size_t> equivalence_rows;
  std::vector<std::size_t> mapping_rows;
};

std::size_t RowOf(const std::vector<std::size_t>& rows, std::size_t i) {
  return i < rows.size() ? rows[i] : i + 1;
}

void Validate(const std::vector<EquivalenceClass>& equivalences,
              const std::vector<MappingEntry>& mappings, const RowIndex& rows) {
  const auto& latin_inv = LatinInventory();
  const auto& arabic_inv = ArabicInventory();

  std::vector<Issue> malformed;
  std::vector<Issue> duplicates;

  std::map<std::u32string, std::size_t> variant_owner;
  std::set<std::u32string> canonicals;
  for (std::size_t i = 0; i < equivalences.size(); ++i) {
    const EquivalenceClass& eq = equivalences[i];
    const std::size_t row = RowOf(rows.equivalence_rows, i);
    const std::u32string& canon = eq.canonical.codepoints;
    if (FindInventory(arabic_inv, canon) == nullptr) {
      malformed.push_back({row, "canonical " + Describe(canon) +
                                    " is not an Arabic-script Kurdish letter"});
      continue;
    }
    if (!canonicals.insert(canon).second) {
      duplicates.push_back({row, "canonical " + Describe(canon) + " heads two classes"});
    }
    for (const std::u32string& v : eq.variants) {
      if (v.empty()) {
        malformed.push_back({row, "empty variant"});
        continue;
      }
      if (v == canon) {
        duplicates.push_back({row, "variant " + Describe(v) + " equals its canonical"});
        continue;
      }
      if (FindInventory(arabic_inv, v) != nullptr) {
        duplicates.push_back(
            {row, "variant " + Describe(v) + " is itself a canonical letter"});
        continue;
      }
      auto [it, inserted] = variant_owner.emplace(v, row);
      if (!inserted) {
        duplicates.push_back({row, "variant " + Describe(v) + " already claimed at row " +
                                       std::to_string(it->second)});
      }
    }
  }

  std::map<std::u32string, int> latin_uses;
  std::map<std::u32string, int> arabic_uses;
  for (const MappingEntry& m : mappings) {
    if (!m.latin.empty()) ++latin_uses[m.latin];
    if (!m.arabic.empty()) ++arabic_uses[m.arabic];
  }
  for (std::size_t i = 0; i < mappings.size(); ++i) {
    const MappingEntry& m = mappings[i];
    const std::size_t row = RowOf(rows.mapping_rows, i);
    if (m.latin.empty() && m.arabic.empty()) {
      malformed.push_back({row, "both sides empty"});
      continue;
    }
    if (!m.latin.empty() && FindInventory(latin_inv, m.latin) == nullptr) {
      malformed.push_back({row, "latin " + Describe(m.latin) + " is not in the Latin inventory"});
    }
    if (!m.arabic.empty() && FindInventory(arabic_inv, m.arabic) == nullptr) {
      malformed.push_back(
          {row, "arabic " + Describe(m.arabic) + " is not in the Arabic-script inventory"});
    }
    const bool one_side_empty = m.latin.empty() != m.arabic.empty();
    if ((m.klass == MappingClass::kAbsent) != one_side_empty) {
      malformed.push_back({row, "klass Absent requires exactly one empty side"});
    }
    if (m.klass == MappingClass::kBijective && !m.latin.empty() && !m.arabic.empty() &&
        (latin_uses[m.latin] > 1 || arabic_uses[m.arabic] > 1)) {
      malformed.push_back({row, "Bijective entry shares a side with another entry"});
    }
  }

  if (!malformed.empty()) {
    throw Error(ErrorCode::kMalformedRow, "invalid table rows", std::move(malformed));
  }
  if (!duplicates.empty()) {
    throw Error(ErrorCode::kDuplicateVariant, "overlapping equivalence classes",
                std::move(duplicates));
  }

  std::vector<Issue> missing;
  for (const InventoryLetter& l : latin_inv) {
    if (!latin_uses.contains(l.codepoints)) {
      missing.push_back({0, "latin " + Describe(l.codepoints) + " has no mapping"});
    }
  }
  for (const InventoryLetter& l : arabic_inv) {
    if (!arabic_uses.contains(l.codepoints)) {
      missing.push_back({0, "arabic " + Describe(l.codepoints) + " has no mapping"});
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kNonTotal, "letters without a mapping or Absent marker",
                std::move(missing));
  }
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

// Calls fn(row, line) for each data line (non-empty, not a # comment).
template <typename Fn>
void ForEachDataLine(std::string_view text, Fn&& fn) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::size_t row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++row;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') fn(row, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out << data;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace

std::string_view ScriptKindName(ScriptKind kind) {
  switch (kind) {
    case ScriptKind::kArabicKurdish: return "ArabicKurdish";
    case ScriptKind::kLatinKurdish: return "LatinKurdish";
    case ScriptKind::kMixed: return "Mixed";
    case ScriptKind::kOther: return "Other";
  }
  return "Other";
}

std::optional<ScriptKind> ParseScriptKind(std::string_view name) {
  for (ScriptKind k : {ScriptKind::kArabicKurdish, ScriptKind::kLatinKurdish,
                       ScriptKind::kMixed, ScriptKind::kOther}) {
    if (ScriptKindName(k) == name) return k;
  }
  if (name == "arabic") return ScriptKind::kArabicKurdish;
  if (name == "latin") return ScriptKind::kLatinKurdish;
  return std::nullopt;
}

std::string_view MappingClassName(MappingClass klass) { return NameOf(kClassNames, klass); }
std::string_view DirectionName(Direction direction) { return NameOf(kDirectionNames, direction); }
std::string_view ContextRuleName(ContextRule rule) { return NameOf(kRuleNames, rule); }

const std::vector<std::u32string>& HawarLetters() {
  static const std::vector<std::u32string> kHawar = {
      U"a", U"b", U"c", U"ç", U"d", U"e", U"ê", U"f", U"g", U"h", U"i",
      U"î", U"j", U"k", U"l", U"m", U"n", U"o", U"p", U"q", U"r", U"s",
      U"ş", U"t", U"u", U"û", U"v", U"w", U"x", U"y", U"z"};
  return kHawar;
}

const std::vector<std::u32string>& ExtendedLatinLetters() {
  static const std::vector<std::u32string> kExtended = {U"ḧ", U"ẍ", U"'"};
  return kExtended;
}

bool IsHawarLetter(char32_t cp) {
  for (const auto& l : HawarLetters()) {
    if (l[0] == cp) return true;
  }
  return false;
}

bool IsExtendedLatinLetter(char32_t cp) {
  return cp == U'ḧ' || cp == U'ẍ' || cp == U'\'';
}

AlphabetTable::AlphabetTable(std::vector<EquivalenceClass> equivalences,
                             std::vector<MappingEntry> mappings)
    : equivalences_(std::move(equivalences)), mappings_(std::move(mappings)) {
  Validate(equivalences_, mappings_, {});
  BuildIndexes();
}

void AlphabetTable::BuildIndexes() {
  for (const InventoryLetter& l : LatinInventory()) {
    graphemes_.push_back({l.codepoints, ScriptKind::kLatinKurdish, l.sound_class, true});
  }
  for (const InventoryLetter& l : ArabicInventory()) {
    graphemes_.push_back({l.codepoints, ScriptKind::kArabicKurdish, l.sound_class, true});
  }
  for (EquivalenceClass& eq : equivalences_) {
    const InventoryLetter* canon = FindInventory(ArabicInventory(), eq.canonical.codepoints);
    eq.canonical.script = ScriptKind::kArabicKurdish;
    eq.canonical.sound_class = canon->sound_class;
    eq.canonical.canonical = true;
    for (const std::u32string& v : eq.variants) {
      graphemes_.push_back({v, ScriptKind::kArabicKurdish, canon->sound_class, false});
      variant_to_canonical_.emplace(v, eq.canonical.codepoints);
      max_variant_length_ = std::max(max_variant_length_, v.size());
    }
  }
  for (std::size_t i = 0; i < mappings_.size(); ++i) {
    const MappingEntry& m = mappings_[i];
    if (!m.latin.empty()) {
      by_latin_.emplace(m.latin, i);
      max_latin_key_ = std::max(max_latin_key_, m.latin.size());
    }
    if (!m.arabic.empty()) {
      by_arabic_.emplace(m.arabic, i);
      max_arabic_key_ = std::max(max_arabic_key_, m.arabic.size());
    }
  }
  for (std::size_t i = 0; i < graphemes_.size(); ++i) {
    const Grapheme& g = graphemes_[i];
    if (g.codepoints.size() != 1) continue;
    const bool letter = g.codepoints[0] != U'\'';
    char_index_.try_emplace(g.codepoints[0],
                            IndexedChar{g.script, letter, static_cast<std::ptrdiff_t>(i)});
  }
}

const Grapheme* AlphabetTable::FindGrapheme(ScriptKind script, std::u32string_view cps) const {
  for (const Grapheme& g : graphemes_) {
    if (g.script == script && g.codepoints == cps) return &g;
  }
  return nullptr;
}

const std::u32string* AlphabetTable::CanonicalOf(std::u32string_view variant) const {
  auto it = variant_to_canonical_.find(variant);
  return it == variant_to_canonical_.end() ? nullptr : &it->second;
}

std::vector<const MappingEntry*> AlphabetTable::EntriesForLatin(std::u32string_view latin) const {
  std::vector<const MappingEntry*> out;
  auto [lo, hi] = by_latin_.equal_range(latin);
  for (auto it = lo; it != hi; ++it) out.push_back(&mappings_[it->second]);
  return out;
}

std::vector<const MappingEntry*> AlphabetTable::EntriesForArabic(
    std::u32string_view arabic) const {
  std::vector<const MappingEntry*> out;
  auto [lo, hi] = by_arabic_.equal_range(arabic);
  for (auto it = lo; it != hi; ++it) out.push_back(&mappings_[it->second]);
  return out;
}

CharClass AlphabetTable::Classify(char32_t cp) const {
  const char32_t lower = unicode::ToLowerLatin(cp);
  auto it = char_index_.find(lower);
  if (it == char_index_.end() && lower != cp) it = char_index_.find(cp);
  if (it != char_index_.end()) {
    const IndexedChar& ic = it->second;
    if (ic.script == ScriptKind::kLatinKurdish && !ic.is_letter) {
      return {ScriptKind::kOther, false, nullptr};
    }
    return {ic.script, ic.is_letter, ic.grapheme < 0 ? nullptr : &graphemes_[ic.grapheme]};
  }
  if (unicode::IsArabicPresentationForm(cp)) {
    auto fold = unicode::FoldPresentationForm(cp);
    CharClass cc{ScriptKind::kArabicKurdish, false, nullptr};
    for (char32_t f : fold) {
      if (unicode::GetCategory(f) == unicode::Category::kLetter) cc.is_letter = true;
    }
    if (fold.size() == 1) {
      auto base = char_index_.find(fold[0]);
      if (base != char_index_.end() && base->second.script == ScriptKind::kArabicKurdish) {
        cc.grapheme = &graphemes_[base->second.grapheme];
      }
    }
    return cc;
  }
  return {ScriptKind::kOther, unicode::GetCategory(cp) == unicode::Category::kLetter, nullptr};
}

CharClass ClassifyChar(const AlphabetTable& table, char32_t cp) { return table.Classify(cp); }

AlphabetTable ParseTables(std::string_view mapping_tsv, std::string_view equivalence_tsv) {
  std::vector<Issue> malformed;
  std::vector<EquivalenceClass> equivalences;
  std::vector<MappingEntry> mappings;
  RowIndex rows;

  ForEachDataLine(equivalence_tsv, [&](std::size_t row, std::string_view line) {
    auto cols = SplitTabs(line);
    if (cols.size() < 2 || cols.size() > 3) {
      malformed.push_back({row, "equivalence row needs 2 or 3 columns, got " +
                                    std::to_string(cols.size())});
      return;
    }
    if (cols[0] == "canonical_hex") return;  // header
    auto canon = unicode::ParseHexList(cols[0]);
    if (!canon || canon->empty()) {
      malformed.push_back({row, "bad canonical_hex '" + std::string(cols[0]) + "'"});
      return;
    }
    EquivalenceClass eq;
    eq.canonical.codepoints = *canon;
    std::string_view list = cols[1];
    bool ok = true;
    while (!list.empty()) {
      std::size_t comma = list.find(',');
      std::string_view item = list.substr(0, comma);
      auto v = unicode::ParseHexList(item);
      if (!v || v->empty()) {
        malformed.push_back({row, "bad variant '" + std::string(item) + "'"});
        ok = false;
        break;
      }
      eq.variants.push_back(*v);
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    if (!ok) return;
    equivalences.push_back(std::move(eq));
    rows.equivalence_rows.push_back(row);
  });

  ForEachDataLine(mapping_tsv, [&](std::size_t row, std::string_view line) {
    auto cols = SplitTabs(line);
    if (cols.size() < 5 || cols.size() > 6) {
      malformed.push_back(
          {row, "mapping row needs 5 or 6 columns, got " + std::to_string(cols.size())});
      return;
    }
    if (cols[0] == "latin" && cols[1] == "arabic") return;  // header
    MappingEntry m;
    if (unicode::FindInvalidUtf8(cols[0])) {
      malformed.push_back({row, "latin column is not valid UTF-8"});
      return;
    }
    m.latin = unicode::ToUtf32(cols[0]);
    auto arabic = unicode::ParseHexList(cols[1]);
    if (!arabic) {
      malformed.push_back({row, "bad arabic hex list '" + std::string(cols[1]) + "'"});
      return;
    }
    m.arabic = *arabic;
    auto klass = ValueOf(kClassNames, cols[2]);
    auto direction = ValueOf(kDirectionNames, cols[3]);
    auto rule = ValueOf(kRuleNames, cols[4] == "-" ? std::string_view() : cols[4]);
    if (!klass) malformed.push_back({row, "unknown klass '" + std::string(cols[2]) + "'"});
    if (!direction) {
      malformed.push_back({row, "unknown direction '" + std::string(cols[3]) + "'"});
    }
    if (!rule) malformed.push_back({row, "unknown context_rule '" + std::string(cols[4]) + "'"});
    if (!klass || !direction || !rule) return;
    m.klass = *klass;
    m.direction = *direction;
    m.context_rule = *rule;
    if (cols.size() == 6) m.comment = std::string(cols[5]);
    mappings.push_back(std::move(m));
    rows.mapping_rows.push_back(row);
  });

  if (!malformed.empty()) {
    throw Error(ErrorCode::kMalformedRow, "unparseable table rows", std::move(malformed));
  }
  Validate(equivalences, mappings, rows);
  return AlphabetTable(std::move(equivalences), std::move(mappings));
}

AlphabetTable LoadTables(const std::filesystem::path& path) {
  std::filesystem::path mapping = path;
  std::filesystem::path equivalence;
  if (std::filesystem::is_directory(path)) {
    mapping = path / "mapping.tsv";
    equivalence = path / "equivalences.tsv";
  } else {
    equivalence = path.parent_path() / "equivalences.tsv";
  }
  return ParseTables(ReadFile(mapping), ReadFile(equivalence));
}

std::string FormatMappingTsv(const AlphabetTable& table) {
  std::string out = "#latin\tarabic\tklass\tdirection\tcontext_rule\tcomment\n";
  for (const MappingEntry& m : table.mappings()) {
    out += unicode::ToUtf8(std::span<const char32_t>(m.latin.data(), m.latin.size()));
    out += '\t';
    out += unicode::FormatHexList(m.arabic);
    out += '\t';
    out += MappingClassName(m.klass);
    out += '\t';
    out += DirectionName(m.direction);
    out += '\t';
    out += ContextRuleName(m.context_rule);
    out += '\t';
    out += m.comment;
    out += '\n';
  }
  return out;
}

std::string FormatEquivalenceTsv(const AlphabetTable& table) {
  std::string out = "#canonical_hex\tvariant_hex_list\n";
  for (const EquivalenceClass& eq : table.equivalences()) {
    out += unicode::FormatHexList(eq.canonical.codepoints);
    out += '\t';
    for (std::size_t i = 0; i < eq.variants.size(); ++i) {
      if (i) out += ',';
      out += unicode::FormatHexList(eq.variants[i]);
    }
    out += '\n';
  }
  return out;
}

void SaveTables(const AlphabetTable& table, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + directory.string());
  WriteFile(directory / "mapping.tsv", FormatMappingTsv(table));
  WriteFile(directory / "equivalences.tsv", FormatEquivalenceTsv(table));
}

const AlphabetTable& BuiltinTables() {
  static const AlphabetTable kTable = ParseTables(BuiltinMappingTsv(), BuiltinEquivalenceTsv());
  return kTable;
}

namespace {

struct SuffixCue {
  std::u32string suffix;
  ScriptKind script;
};

// Definite-article suffix family that occurs only in Sorani.
const std::vector<SuffixCue>& SoraniSuffixes() {
  static const std::vector<SuffixCue> kCues = {
      {U"ekanî", ScriptKind::kLatinKurdish},
      {U"ekan", ScriptKind::kLatinKurdish},
      {U"ekey", ScriptKind::kLatinKurdish},
      {U"eke", ScriptKind::kLatinKurdish},
      {U"ەکانی", ScriptKind::kArabicKurdish},
      {U"ەکان", ScriptKind::kArabicKurdish},
      {U"ەکەی", ScriptKind::kArabicKurdish},
      {U"ەکە", ScriptKind::kArabicKurdish},
  };
  return kCues;
}

void CheckWordCue(std::string_view text, const std::vector<unicode::DecodedChar>& word,
                  std::vector<DialectCue>& cues) {
  std::u32string lowered;
  for (const auto& d : word) {
    if (!unicode::IsJoiner(d.cp)) lowered.push_back(unicode::ToLowerLatin(d.cp));
  }
  for (const SuffixCue& c : SoraniSuffixes()) {
    if (lowered.size() < c.suffix.size() + 2) continue;
    if (lowered.compare(lowered.size() - c.suffix.size(), c.suffix.size(), c.suffix) != 0) {
      continue;
    }
    const std::size_t begin = word.front().offset;
    const std::size_t end = word.back().offset + word.back().length;
    cues.push_back({"sorani_definite_suffix", std::string(text.substr(begin, end - begin)),
                    begin, c.script});
    return;
  }
}

}  // namespace

ScriptDetection DetectScript(const AlphabetTable& table, std::string_view text,
                             const DetectOptions& options) {
  ScriptDetection result;
  std::size_t arabic = 0;
  std::size_t latin = 0;
  std::vector<unicode::DecodedChar> word;
  for (std::size_t i = 0; i < text.size();) {
    unicode::DecodedChar d = unicode::DecodeAt(text, i);
    i += d.length;
    const CharClass cc = table.Classify(d.cp);
    if (cc.is_letter) {
      ++result.letter_count;
      if (cc.script == ScriptKind::kArabicKurdish) ++arabic;
      if (cc.script == ScriptKind::kLatinKurdish) ++latin;
      word.push_back(d);
    } else if (!word.empty() && (unicode::IsJoiner(d.cp) ||
                                 unicode::GetCategory(d.cp) == unicode::Category::kMark)) {
      word.push_back(d);
    } else if (!word.empty()) {
      CheckWordCue(text, word, result.dialect_cues);
      word.clear();
    }
  }
  if (!word.empty()) CheckWordCue(text, word, result.dialect_cues);

  if (result.letter_count == 0) return result;
  const double n = static_cast<double>(result.letter_count);
  result.arabic_ratio = static_cast<double>(arabic) / n;
  result.latin_ratio = static_cast<double>(latin) / n;
  result.other_ratio = static_cast<double>(result.letter_count - arabic - latin) / n;
  const double t = options.mixed_threshold;
  if (result.arabic_ratio > t && result.latin_ratio > t) {
    result.kind = ScriptKind::kMixed;
  } else if (result.arabic_ratio > t && result.arabic_ratio >= result.latin_ratio) {
    result.kind = ScriptKind::kArabicKurdish;
  } else if (result.latin_ratio > t) {
    result.kind = ScriptKind::kLatinKurdish;
  }
  return result;
}

}  // namespace kurdtext
