#include <cstdlib>

#include <gtest/gtest.h>

#ifndef FRACPOW_COEFF_DIR
#define FRACPOW_COEFF_DIR "data/coefficients"
#endif

int main(int argc, char** argv) {
  // Point the coefficient cache at the shipped approximants unless the
  // caller already chose a directory.
  ::setenv("FRACPOW_CACHE_DIR", FRACPOW_COEFF_DIR, /*overwrite=*/0);
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
