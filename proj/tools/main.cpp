#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mcs/monoid.hpp"

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("MCS_MAX_TERMS")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || n == 0) {
      std::cerr << "error: MCS_MAX_TERMS must be a positive integer\n";
      return mcs::cli::kInputError;
    }
    mcs::set_max_terms(static_cast<std::size_t>(n));
  }
  return mcs::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
