#include "compcov/series.hpp"

#include <initializer_list>

namespace compcov {

namespace {

using IntPoly = std::vector<ExactInteger>;

IntPoly sparse(std::initializer_list<std::pair<int, long>> terms) {
  int top = 0;
  for (const auto& [power, coeff] : terms) top = std::max(top, power);
  IntPoly p(static_cast<std::size_t>(top) + 1);
  for (const auto& [power, coeff] : terms) p[static_cast<std::size_t>(power)] += coeff;
  return p;
}

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("moment formulas need n >= 1");
}

}  // namespace

ExactInteger fibonacci_d(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  ExactInteger d;
  mpz_fib_ui(d.get_mpz_t(), static_cast<unsigned long>(n));
  return d;
}

RationalFunction<ExactInteger> family_series(Family f) {
  if (f == Family::Unrestricted) return {sparse({{0, 1}}), sparse({{0, 1}, {1, -2}})};
  return {sparse({{0, 1}, {2, -1}}), sparse({{0, 1}, {1, -1}, {2, -1}})};
}

RationalFunction<ExactInteger> runs_below_series(Family f, int k) {
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  if (f == Family::Unrestricted)
    return {sparse({{0, 1}, {k, -1}}), sparse({{0, 1}, {1, -2}, {k + 1, 1}})};
  return {sparse({{0, 1}, {2, -1}, {k, -1}, {k + 1, 1}}),
          sparse({{0, 1}, {1, -1}, {2, -1}, {k + 1, 1}})};
}

std::vector<MeanVariance> max_part_moments_upto(Family f, int n_max) {
  check_order(n_max);
  const auto all = family_series(f).expand(n_max);

  // [z^m] (all - runs_below(k)) counts strings whose longest run is >= k.
  // Summing over k gives sum of runs; weights 2k - 1 give sum of squares.
  std::vector<ExactInteger> first(static_cast<std::size_t>(n_max) + 1);
  std::vector<ExactInteger> second(first.size());
  ExactInteger tail;
  for (int k = 1; k <= n_max; ++k) {
    const auto below = runs_below_series(f, k).expand(n_max);
    for (int m = 1; m <= n_max; ++m) {
      mpz_sub(tail.get_mpz_t(), all[m].get_mpz_t(), below[m].get_mpz_t());
      if (sgn(tail) == 0) continue;
      first[m] += tail;
      mpz_addmul_ui(second[m].get_mpz_t(), tail.get_mpz_t(), 2UL * static_cast<unsigned long>(k) - 1);
    }
  }

  std::vector<MeanVariance> out(first.size());
  for (int m = 1; m <= n_max; ++m) {
    const ExactRational mean(first[m], all[m]);
    const ExactRational raw(second[m], all[m]);
    out[m].mean = mean;
    out[m].mean.canonicalize();
    out[m].variance = raw - out[m].mean * out[m].mean;
    out[m].variance.canonicalize();
  }
  return out;
}

MeanVariance max_part_moments(Family f, int n) {
  check_order(n);
  return max_part_moments_upto(f, n)[static_cast<std::size_t>(n)];
}

std::vector<MeanVariance> parts_moments_upto(Family f, int n_max) {
  check_order(n_max);
  std::vector<MeanVariance> out(static_cast<std::size_t>(n_max) + 1);
  if (f == Family::Unrestricted) {
    for (int m = 1; m <= n_max; ++m) {
      out[m].mean = ExactRational(m, 2);
      out[m].mean.canonicalize();
      out[m].variance = ExactRational(m, 4);
      out[m].variance.canonicalize();
    }
    return out;
  }
  const IntPoly fib = sparse({{0, 1}, {1, -1}, {2, -1}});
  const IntPoly fib2 = poly_mul<ExactInteger>(fib, fib);
  const IntPoly fib3 = poly_mul<ExactInteger>(fib2, fib);
  const auto first = RationalFunction<ExactInteger>(sparse({{3, 1}}), fib2).expand(n_max);
  const auto second =
      RationalFunction<ExactInteger>(sparse({{3, 1}, {4, -1}, {5, 1}}), fib3).expand(n_max);
  for (int m = 1; m <= n_max; ++m) {
    const ExactInteger d = fibonacci_d(m);
    ExactRational mean(first[m], d);
    mean.canonicalize();
    ExactRational raw(second[m], d);
    raw.canonicalize();
    out[m].mean = mean;
    out[m].variance = raw - mean * mean;
  }
  return out;
}

MeanVariance parts_moments(Family f, int n) {
  check_order(n);
  return parts_moments_upto(f, n)[static_cast<std::size_t>(n)];
}

}  // namespace compcov
