#include "nilab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto parsed = nilab::parse_command_line(args, std::cout, std::cerr);
  if (!parsed.config)
    return parsed.exit;
  return nilab::run(*parsed.config, std::cout, std::cerr);
}
