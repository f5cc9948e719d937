#include <gtest/gtest.h>

#include "golomb/homeo.hpp"
#include "oracles.hpp"

using namespace golomb;

namespace {

BijectionWindow with_values(u64 n, std::initializer_list<std::pair<u64, u64>> changes) {
  auto v = BijectionWindow::identity(n).values();
  for (auto [x, hx] : changes) v[x - 1] = hx;
  return BijectionWindow(v);
}

}  // namespace

TEST(BijectionWindow, Validation) {
  EXPECT_THROW(BijectionWindow({1, 2, 2}), PreconditionViolation);
  EXPECT_THROW(BijectionWindow({1, 0}), PreconditionViolation);
  EXPECT_THROW(BijectionWindow(std::vector<u64>{}), PreconditionViolation);
  const BijectionWindow h({1, 5, 3});
  EXPECT_EQ(h.inverse(5), 2u);
  EXPECT_EQ(h.inverse(2), std::nullopt);
  EXPECT_EQ(h.restricted(2).size(), 2u);
}

TEST(FixedOne, Examples) {
  EXPECT_EQ(check_fixed_one(BijectionWindow::identity(10)).verdict, Verdict::Pass);
  EXPECT_EQ(check_fixed_one(BijectionWindow({2, 1})).verdict, Verdict::Fail);
  EXPECT_EQ(check_fixed_one(BijectionWindow({1, 7, 4})).verdict, Verdict::Pass);
}

TEST(PrimesPreserved, Examples) {
  EXPECT_EQ(check_primes_preserved(BijectionWindow::identity(50)).verdict, Verdict::Pass);
  const auto bad = check_primes_preserved(with_values(10, {{2, 4}, {4, 2}}));
  EXPECT_EQ(bad.verdict, Verdict::Fail);
  EXPECT_EQ(bad.violations.front().x, 2u);
  EXPECT_EQ(check_primes_preserved(BijectionWindow(oracle::prime_swap_window(10))).verdict, Verdict::Pass);
  const auto partial = check_primes_preserved(with_values(10, {{7, 11}}));
  EXPECT_EQ(partial.verdict, Verdict::Pass);
  EXPECT_EQ(partial.indeterminate, 1u);  // h^-1(7) lies outside [1,10]
}

TEST(Equivariance, Examples) {
  EXPECT_EQ(check_prime_divisor_equivariance(BijectionWindow::identity(100)).verdict, Verdict::Pass);
  const auto swap = check_prime_divisor_equivariance(BijectionWindow(oracle::prime_swap_window(12)));
  EXPECT_EQ(swap.verdict, Verdict::Fail);
  EXPECT_EQ(swap.violations.front().x, 4u);
  const auto mult = check_prime_divisor_equivariance(BijectionWindow(oracle::multiplicative_swap_window(12)));
  EXPECT_EQ(mult.verdict, Verdict::Pass);
  EXPECT_EQ(BijectionWindow(oracle::multiplicative_swap_window(12))(4), 9u);
  EXPECT_EQ(BijectionWindow(oracle::multiplicative_swap_window(12))(6), 6u);
}

TEST(Monogenic, Examples) {
  const auto id = check_monogenic(BijectionWindow::identity(10), 2, 3);
  EXPECT_EQ(id.result.verdict, Verdict::Pass);
  EXPECT_EQ(id.exponents, (std::vector<std::optional<u64>>{1, 2, 3}));
  const auto good = check_monogenic(with_values(9, {{2, 3}, {3, 2}, {4, 9}, {9, 4}}), 2, 2);
  EXPECT_EQ(good.result.verdict, Verdict::Pass);
  EXPECT_EQ(good.exponents[1], 2u);
  const auto bad = check_monogenic(with_values(6, {{2, 3}, {3, 2}, {4, 6}, {6, 4}}), 2, 2);
  EXPECT_EQ(bad.result.verdict, Verdict::Fail);
  EXPECT_EQ(check_monogenic(BijectionWindow::identity(10), 2, 5).result.indeterminate, 2u);
}

TEST(Mu, Examples) {
  const auto id = extract_mu(BijectionWindow::identity(16), {2, 3}, 4);
  EXPECT_EQ(id.result.verdict, Verdict::Pass);
  for (u64 n = 1; n <= 4; ++n) EXPECT_EQ(id.table(n), n);

  const auto consistent = extract_mu(with_values(9, {{4, 16}, {9, 81}}), {2, 3}, 2);
  EXPECT_EQ(consistent.result.verdict, Verdict::Pass);
  EXPECT_EQ(consistent.table(2), 4u);
  EXPECT_FALSE(consistent.table.primes_to_primes);

  const auto ambiguous = extract_mu(with_values(9, {{4, 16}}), {2, 3}, 2);
  EXPECT_EQ(ambiguous.result.verdict, Verdict::Fail);

  EXPECT_THROW(extract_mu(BijectionWindow::identity(16), {4}, 2), PreconditionViolation);
  EXPECT_THROW(extract_mu(with_values(9, {{4, 6}, {6, 4}}), {2}, 2), NoExponent);
}

TEST(Brunault, Examples) {
  EXPECT_EQ(brunault_primes(3, 2, 1, 1000), std::vector<u64>{5});
  EXPECT_EQ(brunault_primes(2, 3, 1, 1000), std::vector<u64>{7});
  EXPECT_THROW(brunault_primes(8, 3, 1, 1000), PreconditionViolation);
  EXPECT_THROW(brunault_primes(3, 2, 100, 100), NotFoundWithinBound);
}

TEST(Brunault, MatchesScan) {
  for (u64 b : {2ULL, 3ULL, 5ULL}) {
    for (u64 a = 2; a <= 40; ++a) {
      if (is_kth_power(a, b)) continue;
      const auto ps = brunault_primes(a, b, 5, 100'000);
      std::vector<u64> ref;
      for (u64 p = 2; ref.size() < 5; ++p) {
        if (p % b != 1 || !oracle::is_prime(p) || a % p == 0) continue;
        if (oracle::pow_mod(a, (p - 1) / b, p) != 1) ref.push_back(p);
      }
      ASSERT_EQ(ps, ref) << a << " " << b;
    }
  }
}

TEST(Report, Identity) {
  const auto r = run_all_checks(BijectionWindow::identity(100));
  EXPECT_TRUE(r.all_passed);
  ASSERT_EQ(r.items.size(), 4u);
  for (const auto& item : r.items) EXPECT_EQ(item.verdict, Verdict::Pass) << item.item;
  EXPECT_NE(r.note.find("necessary"), std::string::npos);
}

TEST(Report, FixedOneFailure) {
  const auto r = run_all_checks(with_values(20, {{1, 2}, {2, 1}}));
  EXPECT_FALSE(r.all_passed);
  EXPECT_EQ(r.items[0].verdict, Verdict::Fail);
}

TEST(Report, MultiplicativeSwapPassesNecessaryConditions) {
  const auto r = run_all_checks(BijectionWindow(oracle::multiplicative_swap_window(100)));
  EXPECT_TRUE(r.all_passed);
  for (u64 n = 1; n <= 6; ++n) EXPECT_EQ(r.mu(n), n);
}

TEST(Report, PrimeSwapFailsEquivariance) {
  const auto r = run_all_checks(BijectionWindow(oracle::prime_swap_window(100)));
  EXPECT_FALSE(r.all_passed);
  EXPECT_EQ(r.items[1].verdict, Verdict::Pass);
  EXPECT_EQ(r.items[2].verdict, Verdict::Fail);
  EXPECT_EQ(r.items[2].violations.front().x, 4u);
}
