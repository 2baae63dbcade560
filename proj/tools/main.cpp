#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace fanohodge::cli;
  const ParseResult parsed = parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, std::cout, std::cerr);
}
