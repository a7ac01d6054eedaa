#include <string>
#include <vector>

#include "polyspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyspec::cli::run(args);
}
