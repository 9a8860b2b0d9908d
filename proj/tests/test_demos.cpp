#include <gtest/gtest.h>

#include "cake/demos.hpp"

TEST(Demos, EveryDemoPasses) {
  for (const auto& name : cake::demo_names()) {
    auto r = cake::run_demo(name);
    EXPECT_TRUE(r.pass) << name;
    EXPECT_FALSE(r.lines.empty());
  }
}

TEST(Demos, SizedVariants) {
  EXPECT_TRUE(cake::run_demo("symprop-all-lebesgue-S-count", 4).pass);
  EXPECT_TRUE(cake::run_demo("symprop-concentrated-S-count", 3).pass);
  EXPECT_THROW(cake::run_demo("nope"), cake::DomainError);
}
