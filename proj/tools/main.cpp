#include <iostream>

#include "angleset/cli.hpp"

int main(int argc, char** argv) {
  try {
    const auto config = angleset::cli::parse_args(argc, argv);
    return angleset::cli::dispatch(config);
  } catch (const angleset::cli::UsageError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
