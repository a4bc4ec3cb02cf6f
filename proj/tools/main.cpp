/// @file main.cpp
/// @brief Entry point for the lps command-line tool.

#include <iostream>
#include <vector>

#include "lps/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lps::cli::run(std::move(args), std::cout, std::cerr);
}
