#include <iostream>
#include <string>
#include <vector>

#include "dfca/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = dfca::cli::run(args);
  if (result.document) {
    std::cout << result.document->dump(2) << "\n";
  } else {
    (result.exit_code >= dfca::cli::kUsageError ? std::cerr : std::cout) << result.text;
  }
  return result.exit_code;
}
