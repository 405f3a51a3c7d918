#include "kurdtext/corpus_stats.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <vector>

#include "kurdtext/error.h"
#include "kurdtext/unicode.h"

namespace kurdtext {
namespace {

bool ParseCount(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string FoldLatin(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (const unicode::DecodedChar& d : unicode::Decode(word)) {
    if (!d.valid) {
      out.append(word.substr(d.offset, d.length));
      continue;
    }
    unicode::AppendUtf8(out, unicode::ToLowerLatin(d.cp));
  }
  return out;
}

}  // namespace

double FrequencyTable::type_token_ratio() const {
  return total_tokens == 0 ? 0.0 : static_cast<double>(entries.size()) / total_tokens;
}

CorpusCounter::CorpusCounter(const AlphabetTable& table, StatsPipeline pipeline,
                             NormalizerOptions normalizer_options,
                             SegmenterOptions segmenter_options)
    : table_(&table),
      pipeline_(pipeline),
      normalizer_(table, normalizer_options),
      segmenter_(table, std::move(segmenter_options)) {}

void CorpusCounter::Accumulate(FrequencyTable& table, std::string_view doc) const {
  std::string normalized;
  std::string_view text = doc;
  if (pipeline_.normalize) {
    normalized = normalizer_.Normalize(doc).output;
    text = normalized;
  }
  std::map<std::string, std::uint64_t, std::less<>> local;
  std::uint64_t tokens = 0;
  for (const Token& t : segmenter_.Words(text)) {
    if (t.kind != TokenKind::kWord) continue;
    if (pipeline_.script_filter &&
        DetectScript(*table_, t.text).kind != *pipeline_.script_filter) {
      continue;
    }
    ++local[pipeline_.case_fold ? FoldLatin(t.text) : std::string(t.text)];
    ++tokens;
  }
  if (tokens == 0) return;
  for (auto& [word, n] : local) {
    TermCounts& c = table.entries[word];
    c.count += n;
    c.doc_count += 1;
  }
  table.total_tokens += tokens;
  table.documents += 1;
}

void Merge(FrequencyTable& into, const FrequencyTable& from) {
  for (const auto& [word, c] : from.entries) {
    TermCounts& dst = into.entries[word];
    dst.count += c.count;
    dst.doc_count += c.doc_count;
  }
  into.total_tokens += from.total_tokens;
  into.documents += from.documents;
}

std::vector<std::pair<std::string_view, TermCounts>> SortedEntries(const FrequencyTable& table) {
  std::vector<std::pair<std::string_view, TermCounts>> rows(table.entries.begin(),
                                                            table.entries.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second.count > b.second.count; });
  return rows;
}

void ExportTsv(const FrequencyTable& table, std::ostream& out) {
  if (table.documents > 0) out << "# documents\t" << table.documents << '\n';
  out << "token\tcount\tdoc_count\n";
  for (const auto& [token, c] : SortedEntries(table)) {
    out << token << '\t' << c.count << '\t' << c.doc_count << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed to write frequency table");
}

FrequencyTable ImportTsv(std::istream& in) {
  FrequencyTable table;
  std::string line;
  std::size_t row = 0;
  bool header_seen = false;
  auto fail = [&](const std::string& message) {
    throw Error(ErrorCode::kMalformedRow, "frequency table row " + std::to_string(row) + ": " + message,
                {{row, message}});
  };
  while (std::getline(in, line)) {
    ++row;
    if (row == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.starts_with("#")) {
      constexpr std::string_view kDocs = "# documents\t";
      if (line.starts_with(kDocs) &&
          !ParseCount(std::string_view(line).substr(kDocs.size()), table.documents)) {
        fail("bad document count");
      }
      continue;
    }
    if (!header_seen) {
      if (line != "token\tcount\tdoc_count") fail("expected header token\\tcount\\tdoc_count");
      header_seen = true;
      continue;
    }
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      fail("expected 3 columns");
    }
    TermCounts c;
    const std::string_view view(line);
    if (!ParseCount(view.substr(t1 + 1, t2 - t1 - 1), c.count) ||
        !ParseCount(view.substr(t2 + 1), c.doc_count)) {
      fail("bad count");
    }
    std::string token = line.substr(0, t1);
    if (token.empty()) fail("empty token");
    if (!table.entries.emplace(std::move(token), c).second) fail("duplicate token");
    table.total_tokens += c.count;
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "failed to read frequency table");
  return table;
}

}  // namespace kurdtext
