#include <lie_degrees/parallel.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

using namespace lie_degrees;

TEST(Parallel, ResultsLandByIndex) {
  for (unsigned threads : {1u, 2u, 4u, 7u}) {
    auto out = parallel_map<long>(1000, threads, [](std::size_t i) { return static_cast<long>(i * i); });
    ASSERT_EQ(out.size(), 1000u);
    for (std::size_t i = 0; i < out.size(); ++i) ASSERT_EQ(out[i], static_cast<long>(i * i));
  }
  EXPECT_TRUE(parallel_map<int>(0, 4, [](std::size_t) { return 1; }).empty());
}

TEST(Parallel, RethrowsWorkerException) {
  auto boom = [](std::size_t i) -> int {
    if (i == 37) throw std::runtime_error("boom");
    return 0;
  };
  EXPECT_THROW(parallel_map<int>(100, 3, boom), std::runtime_error);
  EXPECT_THROW(parallel_map<int>(100, 1, boom), std::runtime_error);
}

TEST(Parallel, EnvironmentOverridesThreadCount) {
  ::unsetenv("LIE_DEGREES_THREADS");
  EXPECT_EQ(thread_count(3), 3u);
  EXPECT_GE(thread_count(0), 1u);
  ::setenv("LIE_DEGREES_THREADS", "5", 1);
  EXPECT_EQ(thread_count(3), 5u);
  ::setenv("LIE_DEGREES_THREADS", "junk", 1);
  EXPECT_EQ(thread_count(3), 3u);
  ::setenv("LIE_DEGREES_THREADS", "0", 1);
  EXPECT_EQ(thread_count(2), 2u);
  ::unsetenv("LIE_DEGREES_THREADS");
}
