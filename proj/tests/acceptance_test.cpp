// End-to-end checks over the shipped example files plus the quantified
// properties of the library: one test per acceptance criterion.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "generators.hpp"
#include "ttable/cli.hpp"
#include "ttable/data_algebra.hpp"
#include "ttable/dsl.hpp"
#include "ttable/io.hpp"
#include "ttable/table_builder.hpp"
#include "ttable/type_algebra.hpp"

namespace ttable {
namespace {

using testsupport::Rng;

constexpr const char* kTypesPath = TTABLE_DATA_DIR "/earnings_types.json";
constexpr const char* kDataPath = TTABLE_DATA_DIR "/earnings_data.csv";

const std::string kGridCsv = ",Q1,Q2,Q3\nCoA,3.5,2.9,4\nCoB,3.2,,4.3\nCoC,,4.9,\n";
const std::string kListingCsv =
    "CoA,Q1,3.5\nCoA,Q2,2.9\nCoA,Q3,4\nCoB,Q1,3.2\nCoB,Q3,4.3\nCoC,Q2,4.9\n";

bool contains(std::string_view hay, std::string_view needle) {
  return hay.find(needle) != std::string_view::npos;
}

dsl::Env shipped_env() {
  dsl::Env env;
  env.types = io::read_types(kTypesPath);
  env.data["D"] = io::read_data(kDataPath);
  return env;
}

Table eval_shipped(const std::string& expr) {
  return dsl::eval(dsl::parse(expr), shipped_env());
}

std::optional<Table> try_build(const AxisType& col, const AxisType& row, const DataSet& data,
                               const CollisionPolicy& policy) {
  try {
    return build(col, row, data, policy);
  } catch (const BuildError&) {
    return std::nullopt;
  }
}

// 1. The 3x3 grid over the shipped six-item dataset, byte-exact, with its
//    three empty cells exactly where the data has gaps.
TEST(Acceptance, GridConstructionReproducesTheShippedExample) {
  const Table t = eval_shipped("table(Quarter, Company, D)");
  EXPECT_EQ(io::render_table(t, io::TableFormat::Csv), kGridCsv);
  EXPECT_EQ(t.width(), 3);
  EXPECT_EQ(t.height(), 3);
  EXPECT_EQ(t.cells.size(), 6u);
  EXPECT_EQ(t.cell(2, 2), nullptr);
  EXPECT_EQ(t.cell(1, 3), nullptr);
  EXPECT_EQ(t.cell(3, 3), nullptr);
}

// 2. Refining the row axis and dropping empty rows linearizes the dataset in
//    company-major order.
TEST(Acceptance, RefinedRowsLinearizeTheDatasetInOrder) {
  const Table t = eval_shipped("table(unit, refine(Company, Quarter), D) | dropEmptyRows");
  EXPECT_EQ(io::render_table(t, io::TableFormat::Csv), kListingCsv);
  ASSERT_EQ(t.height(), 6);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"CoA", "Q1"}, {"CoA", "Q2"}, {"CoA", "Q3"},
      {"CoB", "Q1"}, {"CoB", "Q3"}, {"CoC", "Q2"}};
  for (int i = 0; i < 6; ++i) {
    Record want;
    want.insert("Company", text(expected[i].first));
    want.insert("Quarter", text(expected[i].second));
    EXPECT_EQ(t.row_headers[i], want);
  }
}

// 3. Collapsing the column axis under max keeps each company's best value.
TEST(Acceptance, MaxAggregationSummarizesEachRow) {
  const Table t = eval_shipped("table(unit, Company, D) | onCollision(max)");
  ASSERT_EQ(t.width(), 1);
  ASSERT_EQ(t.height(), 3);
  EXPECT_EQ(*t.cell(1, 1), Value(num(4.0)));
  EXPECT_EQ(*t.cell(1, 2), Value(num(4.3)));
  EXPECT_EQ(*t.cell(1, 3), Value(num(4.9)));
}

// 4. Pairing an axis with itself: drop leaves only uncontested cells, and the
//    default error policy names a colliding address.
TEST(Acceptance, SelfPairingCollapsesUnderDropAndFailsUnderError) {
  const Table companies = eval_shipped("table(Company, Company, D) | onCollision(drop)");
  ASSERT_EQ(companies.cells.size(), 1u);
  ASSERT_NE(companies.cell(3, 3), nullptr);
  EXPECT_EQ(*companies.cell(3, 3), Value(num(4.9)));

  const Table quarters = eval_shipped("table(Quarter, Quarter, D) | onCollision(drop)");
  EXPECT_TRUE(quarters.cells.empty());

  for (const char* expr : {"table(Company, Company, D)", "table(Quarter, Quarter, D)"}) {
    try {
      eval_shipped(expr);
      ADD_FAILURE() << "no error for " << expr;
    } catch (const dsl::EvalError& e) {
      EXPECT_TRUE(contains(e.what(), "ambiguous placement at (1,1)")) << e.what();
    }
  }
}

// 5. Transposing a built table equals building with swapped axes, across
//    random axes, datasets, and every collision policy.
TEST(Acceptance, TransposeCommutesWithConstruction) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(8001);
  int built = 0;
  for (int i = 0; i < 1000; ++i) {
    const AxisType col = testsupport::random_axis(rng, "c");
    const AxisType row = testsupport::random_axis(rng, "r");
    const DataSet data = testsupport::random_data(rng, col, row);
    const CollisionPolicy policy = testsupport::random_policy(rng);
    const auto direct = try_build(col, row, data, policy);
    const auto swapped = try_build(row, col, data, policy);
    ASSERT_EQ(direct.has_value(), swapped.has_value());
    if (direct) {
      ASSERT_EQ(transpose(*direct), *swapped);
      ++built;
    }
  }
  EXPECT_GE(built, 100);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count(), 10);
}

// 6. Narrowing a plain type before building equals building the full grid
//    from pre-filtered data and then reading only the surviving headers.
TEST(Acceptance, TypeSelectionMatchesDataSelection) {
  Rng rng(8002);
  int nonempty = 0;
  for (int i = 0; i < 500; ++i) {
    const DomainType col = testsupport::random_plain_type(rng, "C");
    const DomainType row = testsupport::random_plain_type(rng, "R");
    const DataSet data = testsupport::random_data(rng, col, row);
    const CollisionPolicy policy = testsupport::random_policy(rng);

    std::vector<Value> keep_col;
    std::vector<Value> keep_row;
    for (const auto& rv : col.values) {
      if (rng.chance(0.5)) {
        keep_col.push_back(rv.value);
      }
    }
    for (const auto& rv : row.values) {
      if (rng.chance(0.5)) {
        keep_row.push_back(rv.value);
      }
    }
    const auto in = [](const std::vector<Value>& set, const Value& v) {
      return std::any_of(set.begin(), set.end(), [&](const Value& c) { return c == v; });
    };
    const auto q = [&](const Value& v) { return in(keep_col, v); };
    const auto p = [&](const Value& v) { return in(keep_row, v); };

    const auto narrowed =
        try_build(select_type(col, q), select_type(row, p), data, policy);
    const DataSet filtered = select_data(data, [&](const Record& r) {
      const Value* a = r.find(col.name);
      const Value* b = r.find(row.name);
      return a != nullptr && q(*a) && b != nullptr && p(*b);
    });
    const auto full = try_build(col, row, filtered, policy);
    ASSERT_EQ(narrowed.has_value(), full.has_value());
    if (!narrowed) {
      continue;
    }
    nonempty += filtered.empty() ? 0 : 1;

    // 1-based original positions of the surviving values, in order.
    std::vector<int> cols;
    std::vector<int> rows;
    for (std::size_t x = 0; x < col.values.size(); ++x) {
      if (q(col.values[x].value)) {
        cols.push_back(static_cast<int>(x) + 1);
      }
    }
    for (std::size_t y = 0; y < row.values.size(); ++y) {
      if (p(row.values[y].value)) {
        rows.push_back(static_cast<int>(y) + 1);
      }
    }
    ASSERT_EQ(narrowed->column_headers.size(), cols.size());
    ASSERT_EQ(narrowed->row_headers.size(), rows.size());
    for (std::size_t x = 0; x < cols.size(); ++x) {
      ASSERT_EQ(narrowed->column_headers[x], full->column_headers[cols[x] - 1]);
    }
    for (std::size_t y = 0; y < rows.size(); ++y) {
      ASSERT_EQ(narrowed->row_headers[y], full->row_headers[rows[y] - 1]);
    }
    ASSERT_EQ(narrowed->cells.size(), full->cells.size());
    for (const auto& [addr, value] : full->cells) {
      const auto cx = std::find(cols.begin(), cols.end(), addr.col);
      const auto ry = std::find(rows.begin(), rows.end(), addr.row);
      ASSERT_NE(cx, cols.end());  // filtered data can only hit surviving lanes
      ASSERT_NE(ry, rows.end());
      const Value* narrowed_cell =
          narrowed->cell(static_cast<int>(cx - cols.begin()) + 1,
                         static_cast<int>(ry - rows.begin()) + 1);
      ASSERT_NE(narrowed_cell, nullptr);
      ASSERT_EQ(*narrowed_cell, value);
    }
  }
  EXPECT_GE(nonempty, 50);
}

// 7. Coarsening undoes a refinement, and refinement order matters.
TEST(Acceptance, CoarsenInvertsRefineWhichIsNotCommutative) {
  Rng rng(8003);
  for (int i = 0; i < 500; ++i) {
    const DomainType base = testsupport::random_plain_type(rng, "Base");
    const DomainType sub = testsupport::random_plain_type(rng, "Sub");
    const DomainType refined = refine(base, sub);
    ASSERT_EQ(coarsen(refined), base);
    ASSERT_FALSE(refined == refine(sub, base));
  }
}

// 8. Looking a denoted record back up returns its own position, agreeing with
//    a brute-force subsumption scan.
TEST(Acceptance, PositionLookupAgreesWithPathEnumeration) {
  Rng rng(8004);
  for (int i = 0; i < 500; ++i) {
    const DomainType type = testsupport::random_type(rng, "T", rng.below(3));
    const AxisType axis = type;
    const std::vector<Record> records = records_of(type);
    for (std::size_t k = 0; k < records.size(); ++k) {
      const int expected = static_cast<int>(k) + 1;
      ASSERT_EQ(position_of(records[k], type), expected);
      ASSERT_EQ(testsupport::oracle_position(records[k], axis), expected);
    }
  }
}

// 9. Reading a built table back yields a permutation of the input data, and
//    the import command reproduces it end to end from the rendered file.
TEST(Acceptance, TableToDataInvertsConstructionAndImportReproducesIt) {
  Rng rng(8005);
  for (int i = 0; i < 500; ++i) {
    const AxisType col = testsupport::random_axis(rng, "c");
    const AxisType row = testsupport::random_axis(rng, "r");
    const DataSet data = testsupport::collision_free_data(rng, col, row);
    const Table t = build(col, row, data);
    const DataSet round = table_to_data(t);

    ASSERT_EQ(round.size(), data.size());
    std::vector<bool> used(round.size(), false);
    for (const auto& item : data) {
      bool found = false;
      for (std::size_t k = 0; k < round.size(); ++k) {
        if (!used[k] && round[k].value == item.value && round[k].record == item.record) {
          used[k] = true;
          found = true;
          break;
        }
      }
      ASSERT_TRUE(found);
    }

    // The same data comes back through the rendered file and the import
    // command, in the table's row-major order.
    const auto level_names = [](const std::vector<Record>& headers) {
      std::size_t depth = 0;
      for (const auto& r : headers) {
        depth = std::max(depth, r.size());
      }
      std::vector<std::string> names(depth);
      for (const auto& r : headers) {
        std::size_t level = 0;
        for (const auto& attr : r) {
          names[level++] = attr.first;
        }
      }
      return names;
    };
    const std::vector<std::string> col_names = level_names(t.column_headers);
    const std::vector<std::string> row_names = level_names(t.row_headers);

    const std::string stamp = std::to_string(i);
    const std::string table_path = ::testing::TempDir() + "roundtrip_" + stamp + ".csv";
    const std::string out_path = ::testing::TempDir() + "roundtrip_" + stamp + "_out.csv";
    {
      std::ofstream file(table_path, std::ios::binary);
      file << io::render_table(t, io::TableFormat::Csv);
    }
    std::vector<std::string> args = {"--table", table_path,
                                     "--col-levels", std::to_string(col_names.size()),
                                     "--row-levels", std::to_string(row_names.size()),
                                     "--out", out_path};
    const auto join = [](const std::vector<std::string>& names) {
      std::string out;
      for (const auto& n : names) {
        if (!out.empty()) {
          out += ',';
        }
        out += n;
      }
      return out;
    };
    if (!col_names.empty()) {
      args.push_back("--col-names");
      args.push_back(join(col_names));
    }
    if (!row_names.empty()) {
      args.push_back("--row-names");
      args.push_back(join(row_names));
    }
    std::ostringstream out;
    std::ostringstream diag;
    ASSERT_EQ(cli::cmd_import(args, out, diag), 0) << diag.str();
    ASSERT_EQ(io::read_data(out_path), round);
  }
}

// 10. Every grammar production round-trips through the printer, and malformed
//     expressions fail the eval command with a positioned error and code 2.
TEST(Acceptance, GrammarCorpusRoundTripsAndMalformedInputsFailWithPositions) {
  const std::vector<std::string> corpus = {
      "table(Quarter, Company, D)",
      "table(unit, Company, D)",
      "table(Quarter, unit, D)",
      "table(unit, unit, D)",
      "table(select(Quarter, _ = \"Q1\"), Company, D)",
      "table(select(Quarter, _ != \"Q2\"), Company, D)",
      "table(select(T, _ < 10), unit, D)",
      "table(select(T, _ <= 2.5), unit, D)",
      "table(select(T, _ > -3), unit, D)",
      "table(select(T, _ >= 0.125), unit, D)",
      "table(select(T, _ in {\"a\", 2, true}), unit, D)",
      "table(select(T, _ = true || _ = false), unit, D)",
      "table(select(T, !_ = 4), unit, D)",
      "table(select(T, !(_ = 1 || _ = 2)), unit, D)",
      "table(select(T, _ > 0 && _ < 9 || _ = -1), unit, D)",
      "table(reverse(Quarter), Company, D)",
      "table(extend(Quarter, \"Q4\"), Company, D)",
      "table(extend(T, 1, 2.5, \"x\", false), unit, D)",
      "table(refine(Company, Quarter), unit, D)",
      "table(coarsen(refine(Company, Quarter)), unit, D)",
      "table(reverse(select(extend(T, 9), _ != 9)), unit, D)",
      "table(unit, refine(Quarter, Company), D) | dropEmptyRows",
      "table(Quarter, Company, select(D, Company = \"CoA\"))",
      "table(Quarter, Company, select(D, Quarter != \"Q2\" && Company in {\"CoA\", \"CoB\"}))",
      "table(Quarter, Company, select(select(D, score > 3), score <= 9))",
      "table(Quarter, Company, select(D, !flag = true))",
      "table(Quarter, Company, select(D, a < 1 || b >= 2))",
      "table(Quarter, Company, D) | transpose",
      "table(Quarter, Company, D) | dropEmptyCols",
      "table(Quarter, Company, D) | onlyEmptyRows",
      "table(Quarter, Company, D) | onCollision(error)",
      "table(Quarter, Company, D) | onCollision(drop)",
      "table(Quarter, Company, D) | onCollision(max)",
      "table(Quarter, Company, D) | onCollision(min)",
      "table(Quarter, Company, D) | onCollision(sum)",
      "table(Quarter, Company, D) | onCollision(first)",
      "table(Quarter, Company, D) | onCollision(last)",
      "table(Quarter, Company, D) | onCollision(count)",
      "table(Quarter, Company, D) | onCollision(concat(\"; \"))",
      "table(Quarter, Company, D) | dropEmptyRows | dropEmptyCols | transpose | onCollision(sum)",
  };
  ASSERT_GE(corpus.size(), 30u);
  for (const auto& src : corpus) {
    EXPECT_EQ(dsl::to_source(dsl::parse(src)), src);
  }

  const std::vector<std::string> malformed = {
      "",
      "table",
      "table(",
      "table(Quarter",
      "table(Quarter,",
      "table(Quarter, Company)",
      "table(Quarter, Company, D",
      "table(Quarter, Company, D) x",
      "table(Quarter Company, D)",
      "table(select(Quarter), Company, D)",
      "table(select(Quarter, ), Company, D)",
      "table(select(Quarter, _ =), Company, D)",
      "table(select(Quarter, _ in 4), Company, D)",
      "table(select(Quarter, _ in {}), Company, D)",
      "table(extend(Quarter), Company, D)",
      "table(refine(Quarter), Company, D)",
      "table(Quarter, Company, D) |",
      "table(Quarter, Company, D) | onCollision",
      "table(Quarter, Company, D) | onCollision(maximum)",
      "table(Quarter, Company, D) | onCollision(drop) | onCollision(drop)",
      "table(Quarter, Company, 'D')",
      "table(Quarter, Company, \"D\")",
  };
  ASSERT_GE(malformed.size(), 20u);
  for (const auto& src : malformed) {
    std::ostringstream out;
    std::ostringstream diag;
    const int code =
        cli::cmd_eval({"-e", src, "--types", kTypesPath, "--data", kDataPath}, out, diag);
    EXPECT_EQ(code, 2) << src;
    const std::string d = diag.str();
    // "error: <line>:<column>: <message>"
    ASSERT_TRUE(d.rfind("error: ", 0) == 0) << src << " -> " << d;
    const std::size_t line_start = 7;
    const std::size_t colon1 = d.find(':', line_start);
    ASSERT_NE(colon1, std::string::npos) << d;
    const std::size_t colon2 = d.find(':', colon1 + 1);
    ASSERT_NE(colon2, std::string::npos) << d;
    EXPECT_GT(colon1, line_start) << d;
    for (std::size_t i = line_start; i < colon1; ++i) {
      EXPECT_TRUE(std::isdigit(static_cast<unsigned char>(d[i]))) << d;
    }
    for (std::size_t i = colon1 + 1; i < colon2; ++i) {
      EXPECT_TRUE(std::isdigit(static_cast<unsigned char>(d[i]))) << d;
    }
  }
}

}  // namespace
}  // namespace ttable
