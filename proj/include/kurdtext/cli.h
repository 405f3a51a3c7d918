#ifndef KURDTEXT_CLI_H_
#define KURDTEXT_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kurdtext/alphabet.h"
#include "kurdtext/corpus_stats.h"
#include "kurdtext/normalizer.h"
#include "kurdtext/transliterator.h"

namespace kurdtext::cli {

enum class Command { kNormalize, kTranslit, kTokenize, kDetect, kStats };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitIo = 3;

// Environment variable naming a default table directory.
inline constexpr const char* kTablesEnv = "KURDTEXT_TABLES";

struct CliConfig {
  Command command = Command::kNormalize;
  std::vector<std::string> inputs;  // empty or "-" reads standard input
  std::string output;               // empty writes standard output
  std::string log;                  // empty writes standard error
  std::string table_path;           // overrides the environment and built-in tables
  bool whole = false;               // whole documents instead of lines
  bool json = false;

  NormalizerOptions normalizer;

  TranslitDirection direction = TranslitDirection::kArabicToLatin;
  TranslitOptions translit;

  bool sentences = false;
  std::string abbrev_path;

  double mixed_threshold = 0.10;

  StatsPipeline stats;
};

// Executes `config`. Primary output goes to `out` (or config.output),
// diagnostics as JSON lines to `log` (or config.log). Returns an exit code.
int Run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& log);

// Parses arguments and runs. Usage errors print to `log` and return 1.
int Main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& log);

}  // namespace kurdtext::cli

#endif  // KURDTEXT_CLI_H_
