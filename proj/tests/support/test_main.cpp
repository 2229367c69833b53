#include <gtest/gtest.h>

#include "sdepth/errors.hpp"

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  sdepth::set_verification(true);
  return RUN_ALL_TESTS();
}
