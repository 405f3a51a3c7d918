#ifndef KURDTEXT_CORPUS_STATS_H_
#define KURDTEXT_CORPUS_STATS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kurdtext/alphabet.h"
#include "kurdtext/normalizer.h"
#include "kurdtext/segmenter.h"

namespace kurdtext {

struct TermCounts {
  std::uint64_t count = 0;
  std::uint64_t doc_count = 0;

  friend bool operator==(const TermCounts&, const TermCounts&) = default;
};

// Word frequencies over surface forms. Merging is commutative and
// associative, so shards can be counted independently.
struct FrequencyTable {
  std::map<std::string, TermCounts, std::less<>> entries;
  std::uint64_t total_tokens = 0;
  std::uint64_t documents = 0;

  std::uint64_t total_types() const { return entries.size(); }
  double type_token_ratio() const;

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

struct StatsPipeline {
  bool normalize = true;
  // Count only words whose script matches (ArabicKurdish or LatinKurdish).
  std::optional<ScriptKind> script_filter;
  // Lowercase Latin letters before counting.
  bool case_fold = false;
};

// Counts the Word tokens of `doc` into `table` as one more document.
class CorpusCounter {
 public:
  CorpusCounter(const AlphabetTable& table, StatsPipeline pipeline = {},
                NormalizerOptions normalizer_options = {}, SegmenterOptions segmenter_options = {});

  void Accumulate(FrequencyTable& table, std::string_view doc) const;

 private:
  const AlphabetTable* table_;
  StatsPipeline pipeline_;
  Normalizer normalizer_;
  Segmenter segmenter_;
};

void Merge(FrequencyTable& into, const FrequencyTable& from);

// Entries by descending count, then bytewise token order.
std::vector<std::pair<std::string_view, TermCounts>> SortedEntries(const FrequencyTable& table);

// TSV with header `token\tcount\tdoc_count`, rows by descending count then
// bytewise token order. A `# documents\tN` line precedes the header when
// N > 0. Throws Error(kIo) on stream failure.
void ExportTsv(const FrequencyTable& table, std::ostream& out);
// Inverse of ExportTsv. Throws Error(kMalformedRow) on a bad row.
FrequencyTable ImportTsv(std::istream& in);

}  // namespace kurdtext

#endif  // KURDTEXT_CORPUS_STATS_H_
