#include <vector>

#include "colhopf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return colhopf::run_cli(args);
}
