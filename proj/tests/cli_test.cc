#include "kurdtext/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace kurdtext::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string log;
};

Outcome RunCli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "kurdtext");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream log;
  const int code = Main(static_cast<int>(argv.size()), argv.data(), in, out, log);
  return {code, out.str(), log.str()};
}

std::vector<json> LogRecords(const std::string& log) {
  std::vector<json> records;
  std::istringstream lines(log);
  std::string line;
  while (std::getline(lines, line)) records.push_back(json::parse(line));
  return records;
}

fs::path TempPath(const std::string& name) { return fs::temp_directory_path() / name; }

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(CliTest, TranslitArabicToLatin) {
  const Outcome r = RunCli({"translit", "--from", "arabic", "--to", "latin"}, "شار\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "şar\n");
}

TEST(CliTest, TranslitLossGoesToSideChannel) {
  const Outcome r = RunCli({"translit", "--from", "latin", "--to", "arabic"}, "ziman\nşar");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "زمان\nشار");
  const auto records = LogRecords(r.log);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0]["type"], "loss");
  EXPECT_EQ(records[0]["line"], 1);
  EXPECT_EQ(records[0]["offset"], 1);
  EXPECT_EQ(records[0]["action"], "Dropped");
  EXPECT_EQ(records[1]["type"], "summary");
}

TEST(CliTest, TranslitModes) {
  EXPECT_EQ(RunCli({"translit", "--from", "arabic", "--to", "latin", "--mode", "extended"}, "حەسەن")
                .out,
            "ḧesen");
  EXPECT_EQ(RunCli({"translit", "--from", "arabic", "--to", "latin", "--capitalize"}, "شار. باش")
                .out,
            "Şar. Baş");
  EXPECT_EQ(RunCli({"translit", "--from", "arabic", "--to", "latin", "--conjunction-waw"}, "من و تۆ")
                .out,
            "mn û to");
  const Outcome err =
      RunCli({"translit", "--from", "arabic", "--to", "latin", "--on-unknown", "error"}, "ث");
  EXPECT_EQ(err.code, kExitData);
  EXPECT_EQ(LogRecords(err.log).back()["code"], "UnknownGrapheme");
}

TEST(CliTest, NormalizeWritesCanonicalTextAndRewriteLog) {
  const Outcome r = RunCli({"normalize"}, "كتيب\nکورد\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "کتیب\nکورد\n");
  const auto records = LogRecords(r.log);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0]["type"], "rewrite");
  EXPECT_EQ(records[0]["rule"], "unify_variant");
  EXPECT_EQ(records[0]["before"], "ك");
  EXPECT_EQ(records[1]["offset"], 4);
  EXPECT_EQ(records[2]["rewrites"], 2);
}

TEST(CliTest, NormalizeFlags) {
  EXPECT_EQ(RunCli({"normalize", "--digits"}, "١٢٣").out, "123");
  EXPECT_EQ(RunCli({"normalize", "--aggressive-heh"}, "ماله").out, "مالە");
  EXPECT_EQ(RunCli({"normalize", "--whole"}, "ك\nي").out, "ک\nی");
}

TEST(CliTest, OutputMatchesLibrary) {
  const std::string input = "كه‌ ﻻىٔ\r\nKurdî\n\nيٚ";
  const Outcome r = RunCli({"normalize"}, input);
  const Normalizer n(BuiltinTables());
  std::string expected;
  std::istringstream lines(input);
  std::string line;
  bool first = true;
  while (std::getline(lines, line)) {
    if (!first) expected += '\n';
    first = false;
    expected += n.Normalize(line).output;
  }
  EXPECT_EQ(r.out, expected);
  EXPECT_EQ(RunCli({"normalize", "--whole"}, input).out, n.Normalize(input).output);
}

TEST(CliTest, BomIsToleratedAndNeverEmitted) {
  const Outcome r = RunCli({"translit", "--from", "arabic", "--to", "latin"}, "\xEF\xBB\xBFشار\n");
  EXPECT_EQ(r.out, "şar\n");
  EXPECT_EQ(RunCli({"normalize", "--whole"}, "\xEF\xBB\xBFك").out, "ک");
}

TEST(CliTest, DetectEmptyInputIsOther) {
  const Outcome r = RunCli({"detect"}, "");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "Other\n");
  const Outcome js = RunCli({"detect", "--json"}, "Kurdî کوردی");
  const json record = json::parse(js.out);
  EXPECT_EQ(record["script"], "Mixed");
  EXPECT_DOUBLE_EQ(record["arabic_ratio"].get<double>(), 0.5);
}

TEST(CliTest, Tokenize) {
  EXPECT_EQ(RunCli({"tokenize"}, "Ez diçim malê.\nTu?\n").out, "Ez diçim malê .\nTu ?\n");
  const Outcome js = RunCli({"tokenize", "--json"}, "a 12");
  const auto records = LogRecords(js.out);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1]["kind"], "Number");
  EXPECT_EQ(records[1]["start"], 2);
  EXPECT_EQ(RunCli({"tokenize", "--sentences", "--whole"}, "Ez hatim. Tu çûyî.").out,
            "Ez hatim.\nTu çûyî.\n");
}

TEST(CliTest, TokenizeAbbreviations) {
  const fs::path abbrev = TempPath("kurdtext_cli_abbrev.txt");
  WriteFile(abbrev, "Dr.\n");
  EXPECT_EQ(RunCli({"tokenize", "--sentences", "--abbrev", abbrev.string()}, "Dr. Kamal hat.").out,
            "Dr. Kamal hat.\n");
  fs::remove(abbrev);
}

TEST(CliTest, StatsOverFiles) {
  const fs::path a = TempPath("kurdtext_cli_stats_a.txt");
  const fs::path b = TempPath("kurdtext_cli_stats_b.txt");
  WriteFile(a, "a b\n");
  WriteFile(b, "b c\n");
  const Outcome r = RunCli({"stats", a.string(), b.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "# documents\t2\ntoken\tcount\tdoc_count\nb\t2\t2\na\t1\t1\nc\t1\t1\n");
  const Outcome js = RunCli({"stats", "--json", a.string(), b.string()});
  const auto records = LogRecords(js.out);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0]["total_tokens"], 4);
  EXPECT_EQ(records[1]["token"], "b");
  fs::remove(a);
  fs::remove(b);
}

TEST(CliTest, OutputAndLogFiles) {
  const fs::path out = TempPath("kurdtext_cli_out.txt");
  const fs::path log = TempPath("kurdtext_cli_log.jsonl");
  const Outcome r = RunCli({"normalize", "-o", out.string(), "--log", log.string()}, "ك");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(r.log.empty());
  EXPECT_EQ(ReadFile(out), "ک");
  EXPECT_EQ(LogRecords(ReadFile(log)).size(), 2u);
  fs::remove(out);
  fs::remove(log);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"translit", "--from", "arabic", "--to", "arabic"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"translit", "--from", "arabic"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"translit", "--from", "greek", "--to", "latin"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"normalize", "/nonexistent/input.txt"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST(CliTest, InvalidUtf8IsDataError) {
  const Outcome r = RunCli({"normalize"}, "ok\nbad \xFF\n");
  EXPECT_EQ(r.code, kExitData);
  EXPECT_EQ(r.out, "ok\n");
  const auto records = LogRecords(r.log);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records.back()["code"], "InvalidUtf8");
  EXPECT_EQ(records.back()["line"], 2);
  EXPECT_EQ(records.back()["offset"], 4);
}

TEST(CliTest, BadTableIsDataError) {
  const fs::path dir = TempPath("kurdtext_cli_bad_table");
  fs::create_directories(dir);
  WriteFile(dir / "mapping.tsv", "");
  WriteFile(dir / "equivalences.tsv", "");
  const Outcome r = RunCli({"--table", dir.string(), "normalize"}, "x");
  EXPECT_EQ(r.code, kExitData);
  const auto records = LogRecords(r.log);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0]["code"], "NonTotal");
  EXPECT_FALSE(records[0]["issues"].empty());

  ::setenv(kTablesEnv, dir.string().c_str(), 1);
  EXPECT_EQ(RunCli({"normalize"}, "x").code, kExitData);
  ::unsetenv(kTablesEnv);
  EXPECT_EQ(RunCli({"normalize"}, "x").code, kExitOk);

  EXPECT_EQ(RunCli({"--table", (dir / "missing").string(), "normalize"}, "x").code, kExitIo);
  fs::remove_all(dir);
}

TEST(CliTest, UnwritableOutputIsIoError) {
  EXPECT_EQ(RunCli({"normalize", "-o", "/nonexistent/dir/out.txt"}, "x").code, kExitIo);
}

TEST(CliTest, ExecutableRuns) {
  const fs::path input = TempPath("kurdtext_cli_exec_in.txt");
  const fs::path output = TempPath("kurdtext_cli_exec_out.txt");
  WriteFile(input, "شار\n");
  const std::string command = std::string(KURDTEXT_CLI_PATH) +
                              " translit --from arabic --to latin " + input.string() + " > " +
                              output.string() + " 2>/dev/null";
  EXPECT_EQ(std::system(command.c_str()), 0);
  EXPECT_EQ(ReadFile(output), "şar\n");
  fs::remove(input);
  fs::remove(output);
}

}  // namespace
}  // namespace kurdtext::cli
