#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "jrobust/error.hpp"
#include "jrobust/harness.hpp"

// Exit code ctest treats as a skip.
constexpr int kSkip = 77;

int main(int argc, char** argv) {
  try {
    (void)jrobust::Toolchain::discover();
  } catch (const jrobust::InfrastructureError& e) {
    std::cout << "no Java toolchain, skipping: " << e.what() << "\n";
    return kSkip;
  }
  doctest::Context context(argc, argv);
  return context.run();
}
