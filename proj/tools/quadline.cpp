#include <iostream>

#include "quadline/cli.hpp"

int main(int argc, char** argv)
{
  const auto outcome = quadline::cli::run(argc, argv);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
