#include <iostream>

#include "rigx_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = rigx::cli::run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
