#include "compcov/gap_counts.hpp"
#include "compcov/oracle.hpp"
#include "compcov/series.hpp"

#include <doctest.h>

using namespace compcov;

namespace {

ExactRational ratio(const ExactInteger& a, const ExactInteger& b) {
  ExactRational q(a, b);
  q.canonicalize();
  return q;
}

MeanVariance brute_run(Ensemble e, int n) {
  const auto s = oracle::brute_sums(e, n);
  const ExactRational mean = ratio(s.run, s.size);
  return {mean, ratio(s.run_sq, s.size) - mean * mean};
}

MeanVariance brute_ones(Ensemble e, int n) {
  const auto s = oracle::brute_sums(e, n);
  const ExactRational mean = ratio(s.ones, s.size);
  return {mean, ratio(s.ones_sq, s.size) - mean * mean};
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("truncated series arithmetic") {
  using S = TruncatedSeries<ExactRational>;
  const S a(4, {1, 2, 3});
  const S b(3, {1, -1});
  const S sum = a + b;
  CHECK(sum.degree() == 3);
  CHECK(sum[0] == 2);
  CHECK(sum[1] == 1);
  CHECK(sum[2] == 3);
  const S prod = a * b;
  CHECK(prod[0] == 1);
  CHECK(prod[1] == 1);
  CHECK(prod[2] == 1);
  CHECK(prod[3] == -3);
  CHECK((a * ExactRational(1, 2))[2] == ExactRational(3, 2));
  CHECK_THROWS(S(-1));
}

TEST_CASE("division inverts multiplication") {
  using S = TruncatedSeries<ExactRational>;
  const S num(12, {3, 0, -1, 5, 7});
  const S den(12, {2, 1, 0, -3});
  const S q = divide(num, den);
  CHECK(den * q == num);
  CHECK_THROWS_AS(divide(num, S(12, {0, 1})), std::domain_error);
  using I = TruncatedSeries<ExactInteger>;
  CHECK_THROWS_AS(divide(I(3, {1}), I(3, {2, 1})), std::domain_error);
}

TEST_CASE("recurrence and division agree up to degree 400") {
  for (Family f : {Family::Unrestricted, Family::OneFree}) {
    CHECK(family_series(f).expand(400) == family_series(f).expand_by_division(400));
    for (int k : {1, 2, 3, 7, 50, 399})
      CHECK(runs_below_series(f, k).expand(400) == runs_below_series(f, k).expand_by_division(400));
  }
}

TEST_CASE("recurrence matches the denominator") {
  // 1 - 2z + z^{k+1}: c_m = 2 c_{m-1} - c_{m-k-1}.
  const int k = 3;
  const auto c = runs_below_series(Family::Unrestricted, k).expand(30);
  for (int m = k + 2; m <= 30; ++m) CHECK(c[m] == 2 * c[m - 1] - c[m - k - 1]);
  const RationalFunction<ExactRational> r({ExactRational(1)}, {ExactRational(2), ExactRational(-1)});
  CHECK(r.expand(5)[3] == ExactRational(1, 16));
  CHECK_THROWS_AS(RationalFunction<ExactInteger>({1}, {0, 1}), std::domain_error);
  CHECK_THROWS(runs_below_series(Family::Unrestricted, 0));
}

TEST_CASE("fibonacci") {
  CHECK(fibonacci_d(0) == 0);
  CHECK(fibonacci_d(1) == 1);
  CHECK(fibonacci_d(6) == 8);
  CHECK(fibonacci_d(100) == ExactInteger("354224848179261915075"));
  CHECK_THROWS(fibonacci_d(-1));
}

TEST_CASE("published moments") {
  CHECK(max_part_moments(Family::Unrestricted, 4) == MeanVariance{ExactRational(27, 16), ExactRational(247, 256)});
  CHECK(max_part_moments(Family::OneFree, 6) == MeanVariance{ExactRational(13, 4), ExactRational(27, 16)});
  CHECK(max_part_moments(Family::Unrestricted, 1).mean == ExactRational(1, 2));
  CHECK(parts_moments(Family::Unrestricted, 4) == MeanVariance{2, 1});
  CHECK(parts_moments(Family::OneFree, 6) == MeanVariance{ExactRational(5, 4), ExactRational(7, 16)});
  for (int n = 1; n <= 50; ++n) CHECK(parts_moments(Family::Unrestricted, n).mean == ratio(n, 2));
  CHECK_THROWS(max_part_moments(Family::Unrestricted, 0));
  CHECK_THROWS(parts_moments(Family::OneFree, 0));
}

TEST_CASE("moments equal brute force up to 16") {
  const auto mu_u = max_part_moments_upto(Family::Unrestricted, 16);
  const auto mu_g = max_part_moments_upto(Family::OneFree, 16);
  const auto m_u = parts_moments_upto(Family::Unrestricted, 16);
  const auto m_g = parts_moments_upto(Family::OneFree, 16);
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(mu_u[n] == brute_run(Ensemble::unconstrained(), n));
    CHECK(mu_g[n] == brute_run(Ensemble::pinned_solus(), n));
    CHECK(m_u[n] == brute_ones(Ensemble::unconstrained(), n));
    CHECK(m_g[n] == brute_ones(Ensemble::pinned_solus(), n));
  }
}

TEST_CASE("longest-run mean agrees with gap counts up to 400") {
  const auto mu = max_part_moments_upto(Family::Unrestricted, 400);
  for (int n = 1; n <= 400; ++n) {
    const auto s = gap_sums(Ensemble::unconstrained(), n);
    const ExactRational mean = ratio(s.run, s.size);
    CHECK(mu[n].mean == mean);
    CHECK(mu[n].variance == ratio(s.run_sq, s.size) - mean * mean);
  }
}

}
