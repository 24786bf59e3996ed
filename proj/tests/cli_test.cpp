#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ttable/cli.hpp"

namespace ttable::cli {
namespace {

constexpr const char* kTypesPath = TTABLE_DATA_DIR "/earnings_types.json";
constexpr const char* kDataPath = TTABLE_DATA_DIR "/earnings_data.csv";

const std::string kGridCsv = ",Q1,Q2,Q3\nCoA,3.5,2.9,4\nCoB,3.2,,4.3\nCoC,,4.9,\n";
const std::string kGridText =
    "    | Q1   Q2   Q3\n"
    "----+--------------\n"
    "CoA | 3.5  2.9  4\n"
    "CoB | 3.2       4.3\n"
    "CoC |      4.9\n";
const std::string kListingCsv =
    "CoA,Q1,3.5\nCoA,Q2,2.9\nCoA,Q3,4\nCoB,Q1,3.2\nCoB,Q3,4.3\nCoC,Q2,4.9\n";

bool contains(std::string_view hay, std::string_view needle) {
  return hay.find(needle) != std::string_view::npos;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.is_open()) << path;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string write_temp(const std::string& name, std::string_view content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

struct RunResult {
  int code = 0;
  std::string out;
  std::string diag;
};

RunResult run_eval(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream diag;
  const int code = cmd_eval(args, out, diag);
  return {code, out.str(), diag.str()};
}

RunResult run_import(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream diag;
  const int code = cmd_import(args, out, diag);
  return {code, out.str(), diag.str()};
}

RunResult eval_fixture(const std::string& expr, std::vector<std::string> extra = {}) {
  std::vector<std::string> args = {"-e", expr, "--types", kTypesPath, "--data", kDataPath};
  args.insert(args.end(), extra.begin(), extra.end());
  return run_eval(args);
}

// ---------------------------------------------------------------------------
// eval

TEST(CmdEval, RendersTextByDefault) {
  const RunResult r = eval_fixture("table(Quarter, Company, D)");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kGridText);
  EXPECT_EQ(r.diag, "");
}

TEST(CmdEval, RendersTheRequestedFormat) {
  const RunResult csv = eval_fixture("table(Quarter, Company, D)", {"--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, kGridCsv);

  const RunResult json = eval_fixture("table(Quarter, Company, D)", {"--format", "json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_TRUE(contains(json.out, "\"colHeaders\": ["));
  EXPECT_TRUE(contains(json.out, "\"value\": 3.5"));

  const RunResult alias = eval_fixture("table(Quarter, Company, D)", {"--format", "json-like"});
  EXPECT_EQ(alias.code, 0);
  EXPECT_EQ(alias.out, json.out);
}

TEST(CmdEval, WritesToAFileWhenAsked) {
  const std::string out_path = ::testing::TempDir() + "eval_grid_out.csv";
  const RunResult r = eval_fixture("table(Quarter, Company, D)",
                                   {"--format", "csv", "--out", out_path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(read_file(out_path), kGridCsv);
}

TEST(CmdEval, BindsTheDataFileToTheRequestedName) {
  const std::string data = write_temp("sales_amount.csv",
                                      "Company,Quarter,amount\nCoA,Q1,3.5\nCoB,Q3,4.3\n");
  const RunResult r = run_eval({"-e",
                                "table(Quarter, Company, Sales) | dropEmptyRows | dropEmptyCols",
                                "--types", kTypesPath, "--data", data, "--data-name", "Sales",
                                "--value-column", "amount", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, ",Q1,Q3\nCoA,3.5,\nCoB,,4.3\n");
}

TEST(CmdEval, ReadsLineDelimitedDataToo) {
  const std::string data = write_temp(
      "point.jsonl", "{\"value\": 1, \"attrs\": {\"Quarter\": \"Q1\", \"Company\": \"CoA\"}}\n");
  const RunResult r = run_eval({"-e",
                                "table(Quarter, Company, D) | dropEmptyRows | dropEmptyCols",
                                "--types", kTypesPath, "--data", data, "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, ",Q1\nCoA,1\n");
}

TEST(CmdEval, SyntaxErrorsExitTwo) {
  const RunResult r = eval_fixture("table(");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "");
  EXPECT_TRUE(contains(r.diag, "error: 1:7: expected")) << r.diag;
}

TEST(CmdEval, TheExpressionIsCheckedBeforeAnyFileIsRead) {
  const RunResult r = run_eval({"-e", "table(Quarter", "--types", "no_such_types.json",
                                "--data", "no_such_data.csv"});
  EXPECT_EQ(r.code, 2);  // parse error wins over the missing files
  EXPECT_TRUE(contains(r.diag, "expected")) << r.diag;
}

TEST(CmdEval, EvaluationErrorsExitOne) {
  const RunResult collision = eval_fixture("table(unit, unit, D)");
  EXPECT_EQ(collision.code, 1);
  EXPECT_EQ(collision.diag,
            "error: 1:1: ambiguous placement at (1,1): 3.5 and 2.9 map to the same cell\n");

  const RunResult unbound = eval_fixture("table(Zone, Company, D)");
  EXPECT_EQ(unbound.code, 1);
  EXPECT_EQ(unbound.diag, "error: 1:7: unbound type name 'Zone'\n");
}

TEST(CmdEval, FileProblemsExitThree) {
  const RunResult types = run_eval({"-e", "table(Quarter, Company, D)", "--types",
                                    "no_such_types.json", "--data", kDataPath});
  EXPECT_EQ(types.code, 3);
  EXPECT_TRUE(contains(types.diag, "cannot open types file")) << types.diag;

  const RunResult data = run_eval({"-e", "table(Quarter, Company, D)", "--types", kTypesPath,
                                   "--data", "no_such_data.csv"});
  EXPECT_EQ(data.code, 3);
  EXPECT_TRUE(contains(data.diag, "cannot open data file")) << data.diag;

  const std::string bad_types = write_temp("bad_types.json", "[{\"name\": 4}]");
  const RunResult malformed = run_eval({"-e", "table(Quarter, Company, D)", "--types",
                                        bad_types, "--data", kDataPath});
  EXPECT_EQ(malformed.code, 3);
  EXPECT_TRUE(contains(malformed.diag, "types file:")) << malformed.diag;
}

TEST(CmdEval, UsageProblemsExitThree) {
  EXPECT_EQ(run_eval({"--types", kTypesPath, "--data", kDataPath}).code, 3);  // no --expr
  EXPECT_EQ(eval_fixture("table(Quarter, Company, D)", {"--format", "yaml"}).code, 3);
  EXPECT_EQ(eval_fixture("table(Quarter, Company, D)", {"--bogus"}).code, 3);
}

TEST(CmdEval, HelpExitsZero) {
  const RunResult r = run_eval({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "--expr")) << r.out;
  EXPECT_TRUE(contains(r.out, "--format")) << r.out;
}

TEST(CmdEval, EmptyRefinementsWarnButStillSucceed) {
  const RunResult r =
      eval_fixture("table(unit, refine(Company, select(Quarter, _ = \"Q9\")), D)");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");  // no rows survive, so nothing renders
  EXPECT_TRUE(contains(
      r.diag, "warning: value Company.CoA is refined by the empty type 'Quarter'"))
      << r.diag;
  EXPECT_EQ(std::count(r.diag.begin(), r.diag.end(), '\n'), 3);
}

TEST(CmdEval, UnwritableOutputExitsThree) {
  const RunResult r = eval_fixture("table(Quarter, Company, D)",
                                   {"--out", ::testing::TempDir() + "no_dir/x.csv"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.diag, "cannot open output file")) << r.diag;
}

// ---------------------------------------------------------------------------
// import

TEST(CmdImport, GridRoundTripsToTheOriginalData) {
  const std::string table = write_temp("import_grid.csv", kGridCsv);
  const RunResult r = run_import({"--table", table, "--col-levels", "1", "--col-names",
                                  "Quarter", "--row-levels", "1", "--row-names", "Company"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_file(kDataPath));
}

TEST(CmdImport, ListingRoundTripsToTheOriginalData) {
  const std::string table = write_temp("import_listing.csv", kListingCsv);
  const RunResult r = run_import({"--table", table, "--col-levels", "0", "--row-levels", "2",
                                  "--row-names", "Company,Quarter"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_file(kDataPath));
}

TEST(CmdImport, HonorsTheValueColumnName) {
  const std::string table = write_temp("import_value_col.csv", kGridCsv);
  const RunResult r = run_import({"--table", table, "--col-levels", "1", "--col-names",
                                  "Quarter", "--row-levels", "1", "--row-names", "Company",
                                  "--value-column", "amount"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "Company,Quarter,amount\n")) << r.out;
}

TEST(CmdImport, WritesToAFileWhenAsked) {
  const std::string table = write_temp("import_to_file.csv", kGridCsv);
  const std::string out_path = ::testing::TempDir() + "imported_data.csv";
  const RunResult r = run_import({"--table", table, "--col-levels", "1", "--col-names",
                                  "Quarter", "--row-levels", "1", "--row-names", "Company",
                                  "--out", out_path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(read_file(out_path), read_file(kDataPath));
}

TEST(CmdImport, ShapeMismatchesExitThree) {
  const std::string table = write_temp("import_arity.csv", kGridCsv);
  const RunResult r = run_import({"--table", table, "--col-levels", "2", "--col-names",
                                  "Quarter", "--row-levels", "1", "--row-names", "Company"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.diag, "2 column levels but 1 column names")) << r.diag;
}

TEST(CmdImport, MissingFileExitsThree) {
  const RunResult r = run_import({"--table", "no_such_table.csv"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.diag, "cannot open table file")) << r.diag;
}

TEST(CmdImport, ConflictingHeaderAttributesExitOne) {
  // The same type name on both axes with different values cannot merge.
  const std::string table = write_temp("import_conflict.csv", ",CoB\nCoA,5\n");
  const RunResult r = run_import({"--table", table, "--col-levels", "1", "--col-names",
                                  "Company", "--row-levels", "1", "--row-names", "Company"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.diag,
                       "cell (1,1): column and row headers disagree on a shared attribute"))
      << r.diag;
}

TEST(CmdImport, HelpExitsZero) {
  const RunResult r = run_import({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "--table")) << r.out;
}

}  // namespace
}  // namespace ttable::cli
