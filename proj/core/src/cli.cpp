#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ttable/cli.hpp"
#include "ttable/data_algebra.hpp"
#include "ttable/dsl.hpp"
#include "ttable/io.hpp"

namespace ttable::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEval = 1;
constexpr int kExitExpr = 2;
constexpr int kExitFile = 3;

// CLI11 consumes the argument vector in reverse, without the program name.
int run_parser(CLI::App& app, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& diag) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, diag) == 0 ? kExitOk : kExitFile;
  }
  return -1;  // parsed, keep going
}

io::TableFormat format_from_name(const std::string& name) {
  if (name == "csv") {
    return io::TableFormat::Csv;
  }
  if (name == "json" || name == "json-like") {
    return io::TableFormat::Json;
  }
  return io::TableFormat::Text;
}

int write_output(const std::string& out_path, const std::string& content, std::ostream& out,
                 std::ostream& diag) {
  if (out_path.empty()) {
    out << content;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    diag << "error: cannot open output file '" << out_path << "'\n";
    return kExitFile;
  }
  file << content;
  if (!file.flush()) {
    diag << "error: failed to write '" << out_path << "'\n";
    return kExitFile;
  }
  return kExitOk;
}

}  // namespace

int cmd_eval(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag) {
  CLI::App app{"Evaluate a table expression against type and data files", "ttable eval"};
  std::string expr_text;
  std::string types_path;
  std::string data_path;
  std::string data_name = "D";
  std::string value_column = "value";
  std::string out_path;
  std::string format_name = "text";
  app.add_option("-e,--expr", expr_text, "Table expression to evaluate")->required();
  app.add_option("--types", types_path, "Type definition file (JSON)")->required();
  app.add_option("--data", data_path, "Data file (delimited or JSON lines)")->required();
  app.add_option("--data-name", data_name, "Name the data file is bound to (default D)");
  app.add_option("--value-column", value_column, "Value column name in delimited data");
  app.add_option("--out", out_path, "Output file (default stdout)");
  app.add_option("--format", format_name, "Output format (default text)")
      ->check(CLI::IsMember({"csv", "text", "json", "json-like"}));

  if (const int code = run_parser(app, args, out, diag); code >= 0) {
    return code;
  }

  // The expression is checked before any file is touched, so a syntax error
  // reports as such even when the files are also bad.
  dsl::TableExpr expr;
  try {
    expr = dsl::parse(expr_text);
  } catch (const dsl::ParseError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitExpr;
  }

  dsl::Env env;
  try {
    env.types = io::read_types(types_path);
    env.data[data_name] = io::read_data(data_path, value_column);
  } catch (const IoError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitFile;
  }

  Table table;
  std::vector<std::string> warnings;
  try {
    table = dsl::eval(expr, env, &warnings);
  } catch (const dsl::EvalError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitEval;
  } catch (const Error& e) {
    diag << "error: " << e.what() << '\n';
    return kExitEval;
  }
  for (const auto& w : warnings) {
    diag << "warning: " << w << '\n';
  }

  return write_output(out_path, io::render_table(table, format_from_name(format_name)), out,
                      diag);
}

int cmd_import(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag) {
  CLI::App app{"Convert a rendered table back into attributed data", "ttable import"};
  std::string table_path;
  int col_levels = 0;
  int row_levels = 0;
  std::vector<std::string> col_names;
  std::vector<std::string> row_names;
  std::string value_column = "value";
  std::string out_path;
  app.add_option("--table", table_path, "Rendered table file (delimited)")->required();
  app.add_option("--col-levels", col_levels, "Number of column header rows")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--row-levels", row_levels, "Number of row header columns")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--col-names", col_names, "Type names of the column header rows")
      ->delimiter(',');
  app.add_option("--row-names", row_names, "Type names of the row header columns")
      ->delimiter(',');
  app.add_option("--value-column", value_column, "Value column name for the output");
  app.add_option("--out", out_path, "Output file (default stdout)");

  if (const int code = run_parser(app, args, out, diag); code >= 0) {
    return code;
  }

  std::string content;
  {
    std::ifstream in(table_path, std::ios::binary);
    if (!in) {
      diag << "error: cannot open table file '" << table_path << "'\n";
      return kExitFile;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    content = buf.str();
  }

  Table table;
  try {
    table = io::parse_table_csv(content, col_levels, col_names, row_levels, row_names);
  } catch (const IoError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitFile;
  }

  DataSet data;
  try {
    data = table_to_data(table);
  } catch (const Error& e) {
    diag << "error: " << e.what() << '\n';
    return kExitEval;
  }

  std::vector<std::string> columns = row_names;
  columns.insert(columns.end(), col_names.begin(), col_names.end());
  std::ostringstream rendered;
  io::write_data_csv(data, columns, rendered, value_column);
  return write_output(out_path, rendered.str(), out, diag);
}

}  // namespace ttable::cli
