#include <gtest/gtest.h>

#include "nilva/dist_kernels.hpp"

using namespace nilva;
using namespace nilva::kernels;

namespace {

bool agree(const Kernel& a, const Kernel& b, int margin) {
  Comparator cmp;
  compare_kernels(cmp, "test", a, b, margin);
  return cmp.ok() && cmp.comparisons() > 0;
}

}  // namespace

TEST(Kernels, DeltaCoefficients) {
  const Window w{8, 3};
  const Kernel d = delta(w);
  EXPECT_EQ(d.coefficient({5, -6, 0, 0}), Scalar(1));
  EXPECT_EQ(d.coefficient({3, -3, 0, 0}), Scalar(0));
  EXPECT_TRUE(agree(d, d_z(log_kernel(w)), 1));
}

TEST(Kernels, LogCoefficients) {
  const Kernel l = log_kernel({8, 3});
  EXPECT_EQ(l.coefficient({0, 0, 1, 0}), Scalar(1));
  EXPECT_EQ(l.coefficient({0, 0, 0, 1}), Scalar(-1));
  EXPECT_EQ(l.coefficient({3, -3, 0, 0}), Scalar(1, 3));
  EXPECT_EQ(l.coefficient({-2, 2, 0, 0}), Scalar(-1, 2));
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(l.coefficient({n, -n, 0, 0}), Scalar(1, n));
    EXPECT_EQ(l.coefficient({-n, n, 0, 0}), Scalar(-1, n));
  }
}

TEST(Kernels, RlAndTCoefficients) {
  const Window w{8, 3};
  const Kernel rl = rl_kernel(w);
  EXPECT_EQ(rl.coefficient({2, -2, 0, 0}), Scalar(1, 4));
  EXPECT_EQ(rl.coefficient({0, 0, 2, 0}), Scalar(0));
  EXPECT_TRUE(agree(rl, swap_zw(rl), 0));
  const Kernel t = t_kernel(w);
  EXPECT_EQ(t.coefficient({4, -4, 0, 0}), Scalar(-1, 32));
  EXPECT_EQ(t.coefficient({-4, 4, 0, 0}), Scalar(1, 32));
  EXPECT_TRUE(agree(t, -swap_zw(t), 0));
}

TEST(Kernels, Derivatives) {
  const Window w{8, 3};
  const Kernel lz = from_laurent(w, monomial(0, 0, 1, 0));
  EXPECT_TRUE(agree(d_z(lz), from_laurent(w, monomial(-1, 0)), 0));
  for (int n : {-3, 2, 5}) {
    const Kernel zn = from_laurent(w, monomial(n, 0));
    EXPECT_TRUE(agree(d_z(zn), from_laurent(w, monomial(n - 1, 0, 0, 0, Scalar(n))), 0));
  }
  EXPECT_TRUE(agree(d_z(log_kernel(w)), delta(w), 1));
}

TEST(Kernels, LaurentMultiplication) {
  const Window w{8, 3};
  EXPECT_TRUE(agree(mul_laurent(delta(w), monomial(0, 0)), delta(w), 0));
  const Kernel zd = mul_laurent(delta(w), monomial(1, 0) + monomial(0, 1, 0, 0, Scalar(-1)));
  EXPECT_TRUE(agree(zd, Kernel(w), 1));
  const Kernel shifted = mul_laurent(log_kernel(w), monomial(0, 0, 1, 0));
  EXPECT_EQ(shifted.coefficient({0, 0, 2, 0}), Scalar(1));
  EXPECT_EQ(shifted.coefficient({3, -3, 1, 0}), Scalar(1, 3));
}

TEST(KernelChecks, IdentitiesOnSeveralWindows) {
  for (int n : {4, 8, 12}) {
    const Window w{n, 3};
    EXPECT_EQ(check_kernel_identities(w).status, Status::Pass) << n;
    EXPECT_EQ(check_kernel_symmetries(w).status, Status::Pass) << n;
    EXPECT_EQ(check_series_sanity(w).status, Status::Pass) << n;
  }
}

TEST(KernelChecks, NegativeControlReportsCounterexample) {
  const auto r = check_negative_control({8, 3});
  EXPECT_EQ(r.status, Status::Reported);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->expected, r.counterexample->actual);
}

TEST(Kernels, LogDegreeGuard) {
  EXPECT_THROW(t_kernel({8, 2}), std::invalid_argument);
  EXPECT_THROW(rl_kernel({8, 1}), std::invalid_argument);
}
