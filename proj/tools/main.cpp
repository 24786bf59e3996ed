#include <iostream>
#include <string>
#include <vector>

#include "ttable/cli.hpp"

namespace {

void print_usage(std::ostream& out) {
  out << "usage: ttable <command> [options]\n"
         "\n"
         "commands:\n"
         "  eval    evaluate a table expression against type and data files\n"
         "  import  convert a rendered table back into attributed data\n"
         "\n"
         "Run 'ttable <command> --help' for the options of a command.\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    print_usage(std::cerr);
    return 3;
  }
  const std::string command = argv[1];
  const std::vector<std::string> args(argv + 2, argv + argc);
  if (command == "eval") {
    return ttable::cli::cmd_eval(args, std::cout, std::cerr);
  }
  if (command == "import") {
    return ttable::cli::cmd_import(args, std::cout, std::cerr);
  }
  if (command == "help" || command == "--help" || command == "-h") {
    print_usage(std::cout);
    return 0;
  }
  std::cerr << "error: unknown command '" << command << "'\n\n";
  print_usage(std::cerr);
  return 3;
}
