#include "kurdtext/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "kurdtext/error.h"
#include "kurdtext/segmenter.h"
#include "kurdtext/unicode.h"

namespace kurdtext::cli {
namespace {

using nlohmann::json;

constexpr std::string_view kBom = "\xEF\xBB\xBF";

// Thrown to unwind with a specific exit code after the diagnostic is logged.
struct Abort {
  int code;
};

class Session {
 public:
  Session(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& log)
      : config_(config), stdin_(in), out_(&out), log_(&log) {}

  int Execute();

 private:
  struct Source {
    std::string name;
    std::istream* stream = nullptr;
    std::unique_ptr<std::ifstream> file;
  };

  void OpenSinks();
  void LoadTable();
  Source Open(const std::string& name);
  // Calls fn(line_text, line_number, had_newline) per line, or once per
  // document in whole mode (line number 0).
  template <typename Fn>
  void ForEachUnit(Source& source, bool whole, Fn&& fn);
  std::string ReadAll(Source& source);
  void Validate(const Source& source, std::string_view text, std::size_t line);

  void Record(json record);
  [[noreturn]] void Fail(int code, json record);
  [[noreturn]] void FailWith(const Error& error);
  void CheckOutput();

  void DoNormalize();
  void DoTranslit();
  void DoTokenize();
  void DoDetect();
  void DoStats();

  std::vector<std::string> Inputs() const {
    return config_.inputs.empty() ? std::vector<std::string>{"-"} : config_.inputs;
  }

  const CliConfig& config_;
  std::istream& stdin_;
  std::ostream* out_;
  std::ostream* log_;
  std::ofstream out_file_;
  std::ofstream log_file_;
  std::optional<AlphabetTable> loaded_;
  const AlphabetTable* table_ = nullptr;
};

int Session::Execute() {
  try {
    OpenSinks();
    LoadTable();
    switch (config_.command) {
      case Command::kNormalize: DoNormalize(); break;
      case Command::kTranslit: DoTranslit(); break;
      case Command::kTokenize: DoTokenize(); break;
      case Command::kDetect: DoDetect(); break;
      case Command::kStats: DoStats(); break;
    }
    out_->flush();
    CheckOutput();
    log_->flush();
    return kExitOk;
  } catch (const Abort& abort) {
    out_->flush();
    log_->flush();
    return abort.code;
  }
}

void Session::OpenSinks() {
  if (!config_.log.empty()) {
    log_file_.open(config_.log, std::ios::binary | std::ios::trunc);
    if (!log_file_) {
      *log_ << json{{"type", "error"}, {"code", "Io"}, {"message", "cannot open log " + config_.log}}
                   .dump()
            << '\n';
      throw Abort{kExitIo};
    }
    log_ = &log_file_;
  }
  if (!config_.output.empty()) {
    out_file_.open(config_.output, std::ios::binary | std::ios::trunc);
    if (!out_file_) {
      Fail(kExitIo, {{"type", "error"}, {"code", "Io"}, {"message", "cannot open output " + config_.output}});
    }
    out_ = &out_file_;
  }
}

void Session::LoadTable() {
  std::string path = config_.table_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kTablesEnv); env != nullptr && *env != '\0') path = env;
  }
  try {
    if (path.empty()) {
      table_ = &BuiltinTables();
    } else {
      loaded_.emplace(LoadTables(path));
      table_ = &*loaded_;
    }
  } catch (const Error& e) {
    FailWith(e);
  }
}

Session::Source Session::Open(const std::string& name) {
  Source source;
  source.name = name;
  if (name == "-") {
    source.stream = &stdin_;
    return source;
  }
  source.file = std::make_unique<std::ifstream>(name, std::ios::binary);
  if (!*source.file) {
    Fail(kExitIo, {{"type", "error"}, {"code", "Io"}, {"input", name}, {"message", "cannot open input"}});
  }
  source.stream = source.file.get();
  return source;
}

void Session::Validate(const Source& source, std::string_view text, std::size_t line) {
  if (const auto bad = unicode::FindInvalidUtf8(text)) {
    json record{{"type", "error"}, {"code", "InvalidUtf8"}, {"input", source.name}, {"offset", *bad}};
    if (line > 0) record["line"] = line;
    Fail(kExitData, std::move(record));
  }
}

std::string Session::ReadAll(Source& source) {
  std::string text(std::istreambuf_iterator<char>(*source.stream), {});
  if (source.stream->bad()) {
    Fail(kExitIo, {{"type", "error"}, {"code", "Io"}, {"input", source.name}, {"message", "read failed"}});
  }
  if (text.starts_with(kBom)) text.erase(0, kBom.size());
  Validate(source, text, 0);
  return text;
}

template <typename Fn>
void Session::ForEachUnit(Source& source, bool whole, Fn&& fn) {
  if (whole) {
    const std::string text = ReadAll(source);
    fn(std::string_view(text), std::size_t{0}, false);
    return;
  }
  std::string line;
  std::size_t number = 0;
  std::istream& in = *source.stream;
  while (std::getline(in, line)) {
    ++number;
    const bool had_newline = !in.eof();
    if (number == 1 && line.starts_with(kBom)) line.erase(0, kBom.size());
    Validate(source, line, number);
    fn(std::string_view(line), number, had_newline);
  }
  if (in.bad()) {
    Fail(kExitIo, {{"type", "error"}, {"code", "Io"}, {"input", source.name}, {"message", "read failed"}});
  }
}

void Session::Record(json record) { *log_ << record.dump() << '\n'; }

void Session::Fail(int code, json record) {
  Record(std::move(record));
  throw Abort{code};
}

void Session::FailWith(const Error& error) {
  json issues = json::array();
  for (const Issue& issue : error.issues()) {
    issues.push_back({{"row", issue.row}, {"message", issue.message}});
  }
  Fail(error.code() == ErrorCode::kIo ? kExitIo : kExitData,
       {{"type", "error"},
        {"code", std::string(ErrorCodeName(error.code()))},
        {"message", error.what()},
        {"issues", std::move(issues)}});
}

void Session::CheckOutput() {
  if (!*out_) Fail(kExitIo, {{"type", "error"}, {"code", "Io"}, {"message", "write failed"}});
}

json Locate(const std::string& input, std::size_t line, std::size_t offset) {
  json record{{"input", input}};
  if (line > 0) record["line"] = line;
  record["offset"] = offset;
  return record;
}

void Session::DoNormalize() {
  const Normalizer normalizer(*table_, config_.normalizer);
  std::size_t total = 0;
  for (const std::string& name : Inputs()) {
    Source source = Open(name);
    ForEachUnit(source, config_.whole, [&](std::string_view text, std::size_t line, bool nl) {
      const NormalizationReport report = normalizer.Normalize(text);
      *out_ << report.output;
      if (nl) *out_ << '\n';
      for (const Rewrite& r : report.rewrites) {
        json record = Locate(source.name, line, r.offset);
        record["type"] = "rewrite";
        record["rule"] = r.rule;
        record["before"] = r.before;
        record["after"] = r.after;
        Record(std::move(record));
      }
      total += report.rewrites.size();
    });
    CheckOutput();
  }
  Record({{"type", "summary"}, {"rewrites", total}});
}

void Session::DoTranslit() {
  const Transliterator translit(*table_);
  std::size_t events = 0;
  for (const std::string& name : Inputs()) {
    Source source = Open(name);
    ForEachUnit(source, config_.whole, [&](std::string_view text, std::size_t line, bool nl) {
      TranslitResult result;
      try {
        result = config_.direction == TranslitDirection::kLatinToArabic
                     ? translit.LatinToArabic(text, config_.translit)
                     : translit.ArabicToLatin(text, config_.translit);
      } catch (const Error& e) {
        json record = Locate(source.name, line, 0);
        record.erase("offset");
        record["type"] = "error";
        record["code"] = std::string(ErrorCodeName(e.code()));
        record["message"] = e.what();
        Fail(kExitData, std::move(record));
      }
      *out_ << result.output;
      if (nl) *out_ << '\n';
      for (const Rewrite& r : result.input_rewrites) {
        json record = Locate(source.name, line, r.offset);
        record["type"] = "rewrite";
        record["rule"] = r.rule;
        record["before"] = r.before;
        record["after"] = r.after;
        Record(std::move(record));
      }
      for (const LossEvent& e : result.loss.events) {
        json record = Locate(source.name, line, e.offset);
        record["type"] = "loss";
        record["source"] = e.source;
        record["action"] = std::string(LossActionName(e.action));
        record["substitute"] = e.substitute;
        Record(std::move(record));
      }
      events += result.loss.events.size();
    });
    CheckOutput();
  }
  Record({{"type", "summary"}, {"loss_events", events}});
}

void Session::DoTokenize() {
  SegmenterOptions options;
  if (!config_.abbrev_path.empty()) {
    try {
      options.abbreviations = LoadAbbreviations(config_.abbrev_path);
    } catch (const Error& e) {
      FailWith(e);
    }
  }
  const Segmenter segmenter(*table_, std::move(options));
  for (const std::string& name : Inputs()) {
    Source source = Open(name);
    ForEachUnit(source, config_.whole, [&](std::string_view text, std::size_t line, bool nl) {
      if (config_.sentences) {
        for (const Span& s : segmenter.Sentences(text)) {
          const std::string_view slice = text.substr(s.start, s.size());
          if (config_.json) {
            json record = line > 0 ? json{{"line", line}} : json::object();
            record["start"] = s.start;
            record["end"] = s.end;
            record["text"] = slice;
            *out_ << record.dump() << '\n';
          } else {
            *out_ << slice << '\n';
          }
        }
        return;
      }
      const std::vector<Token> tokens = segmenter.Words(text);
      if (config_.json) {
        for (const Token& t : tokens) {
          json record = line > 0 ? json{{"line", line}} : json::object();
          record["start"] = t.span.start;
          record["end"] = t.span.end;
          record["kind"] = std::string(TokenKindName(t.kind));
          record["text"] = t.text;
          *out_ << record.dump() << '\n';
        }
        return;
      }
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) *out_ << ' ';
        *out_ << tokens[i].text;
      }
      if (nl || config_.whole) *out_ << '\n';
    });
    CheckOutput();
  }
}

void Session::DoDetect() {
  DetectOptions options;
  options.mixed_threshold = config_.mixed_threshold;
  for (const std::string& name : Inputs()) {
    Source source = Open(name);
    const std::string text = ReadAll(source);
    const ScriptDetection d = DetectScript(*table_, text, options);
    if (config_.json) {
      json cues = json::array();
      for (const DialectCue& c : d.dialect_cues) {
        cues.push_back({{"cue", c.cue},
                        {"word", c.word},
                        {"offset", c.offset},
                        {"script", std::string(ScriptKindName(c.script))}});
      }
      *out_ << json{{"input", source.name},
                    {"script", std::string(ScriptKindName(d.kind))},
                    {"arabic_ratio", d.arabic_ratio},
                    {"latin_ratio", d.latin_ratio},
                    {"other_ratio", d.other_ratio},
                    {"letters", d.letter_count},
                    {"dialect_cues", std::move(cues)}}
                   .dump()
            << '\n';
    } else {
      *out_ << ScriptKindName(d.kind) << '\n';
    }
    CheckOutput();
  }
}

void Session::DoStats() {
  const CorpusCounter counter(*table_, config_.stats, config_.normalizer);
  FrequencyTable table;
  for (const std::string& name : Inputs()) {
    Source source = Open(name);
    counter.Accumulate(table, ReadAll(source));
  }
  if (!config_.json) {
    try {
      ExportTsv(table, *out_);
    } catch (const Error& e) {
      FailWith(e);
    }
    return;
  }
  *out_ << json{{"type", "summary"},
                {"documents", table.documents},
                {"total_tokens", table.total_tokens},
                {"total_types", table.total_types()}}
               .dump()
        << '\n';
  for (const auto& [token, c] : SortedEntries(table)) {
    *out_ << json{{"token", token}, {"count", c.count}, {"doc_count", c.doc_count}}.dump() << '\n';
  }
}

}  // namespace

int Run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& log) {
  Session session(config, in, out, log);
  return session.Execute();
}

int Main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& log) {
  CliConfig config;
  CLI::App app{"Kurdish text toolkit: normalization, transliteration, tokenization, script detection and corpus statistics"};
  app.name("kurdtext");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("-o,--output", config.output, "Write primary output to FILE");
  app.add_option("--log", config.log, "Write diagnostics (JSON lines) to FILE instead of stderr");
  app.add_option("--table", config.table_path,
                 "Mapping TSV (with equivalences.tsv beside it) or table directory; "
                 "defaults to $KURDTEXT_TABLES, then the built-in tables");

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", config.inputs, "Input files ('-' or none for stdin)")
        ->check(CLI::ExistingFile | CLI::IsMember({"-"}));
  };
  auto add_normalizer_flags = [&](CLI::App* sub) {
    sub->add_flag("--aggressive-heh", config.normalizer.aggressive_heh,
                  "Rewrite word-final heh after a consonant to ae");
    sub->add_flag("--digits", config.normalizer.ascii_digits, "Fold Arabic-Indic digits to ASCII");
  };

  CLI::App* normalize = app.add_subcommand("normalize", "Rewrite Arabic-script text to canonical encoding");
  add_inputs(normalize);
  add_normalizer_flags(normalize);
  normalize->add_flag("--whole", config.whole, "Process whole documents instead of lines");

  std::string from;
  std::string to;
  std::string mode = "strict";
  std::string on_unknown = "pass";
  CLI::App* translit = app.add_subcommand("translit", "Transliterate between Arabic and Latin script");
  add_inputs(translit);
  translit->add_option("--from", from, "Source script")->required()->check(CLI::IsMember({"arabic", "latin"}));
  translit->add_option("--to", to, "Target script")->required()->check(CLI::IsMember({"arabic", "latin"}));
  translit->add_option("--mode", mode, "strict: Hawar letters only; extended: also ḧ ẍ '")
      ->check(CLI::IsMember({"strict", "extended"}));
  translit->add_option("--on-unknown", on_unknown, "Unmapped letters: pass them through or fail")
      ->check(CLI::IsMember({"pass", "error"}));
  translit->add_flag("--capitalize", config.translit.capitalize_sentences,
                     "Capitalize sentence-initial letters (Arabic to Latin)");
  translit->add_flag("--conjunction-waw", config.translit.conjunction_waw,
                     "Read a standalone waw as the conjunction û");
  translit->add_flag("--whole", config.whole, "Process whole documents instead of lines");

  CLI::App* tokenize = app.add_subcommand("tokenize", "Split text into tokens or sentences");
  add_inputs(tokenize);
  tokenize->add_flag("--sentences", config.sentences, "Emit sentences instead of tokens");
  tokenize->add_option("--abbrev", config.abbrev_path, "Abbreviation list, one per line")
      ->check(CLI::ExistingFile);
  tokenize->add_flag("--json", config.json, "Emit one JSON record per token or sentence");
  tokenize->add_flag("--whole", config.whole, "Process whole documents instead of lines");

  CLI::App* detect = app.add_subcommand("detect", "Identify the script of each input document");
  add_inputs(detect);
  detect->add_option("--mixed-threshold", config.mixed_threshold,
                     "Minimum letter share of each script for Mixed")
      ->check(CLI::Range(0.0, 1.0));
  detect->add_flag("--json", config.json, "Emit ratios and dialect cues as JSON");

  std::string script;
  bool no_normalize = false;
  CLI::App* stats = app.add_subcommand("stats", "Word frequencies; each input file is one document");
  add_inputs(stats);
  add_normalizer_flags(stats);
  stats->add_flag("--no-normalize", no_normalize, "Count raw surface forms");
  stats->add_option("--script", script, "Count only words in this script")
      ->check(CLI::IsMember({"arabic", "latin"}));
  stats->add_flag("--case-fold", config.stats.case_fold, "Lowercase Latin letters before counting");
  stats->add_flag("--json", config.json, "Emit JSON records instead of TSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, log);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (normalize->parsed()) {
    config.command = Command::kNormalize;
  } else if (translit->parsed()) {
    config.command = Command::kTranslit;
    if (from == to) {
      log << "kurdtext: --from and --to must differ\n";
      return kExitUsage;
    }
    config.direction =
        from == "latin" ? TranslitDirection::kLatinToArabic : TranslitDirection::kArabicToLatin;
    config.translit.mode = mode == "extended" ? TranslitMode::kExtended : TranslitMode::kStrict;
    config.translit.on_unknown = on_unknown == "error" ? OnUnknown::kError : OnUnknown::kPassThrough;
  } else if (tokenize->parsed()) {
    config.command = Command::kTokenize;
  } else if (detect->parsed()) {
    config.command = Command::kDetect;
  } else {
    config.command = Command::kStats;
    config.stats.normalize = !no_normalize;
    if (script == "arabic") config.stats.script_filter = ScriptKind::kArabicKurdish;
    if (script == "latin") config.stats.script_filter = ScriptKind::kLatinKurdish;
  }
  return Run(config, in, out, log);
}

}  // namespace kurdtext::cli
