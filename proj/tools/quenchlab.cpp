#include <string>
#include <vector>

#include "quenchlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quenchlab::cli_main(args);
}
