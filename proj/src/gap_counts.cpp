#include "compcov/gap_counts.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace compcov {

BinomialTable::BinomialTable(int m_max) : m_max_(m_max) {
  if (m_max < 0) throw std::invalid_argument("negative binomial bound");
  entries_.resize(static_cast<std::size_t>(m_max + 1) * (m_max + 2) / 2);
  std::size_t row = 0;
  for (int m = 0; m <= m_max; ++m) {
    const std::size_t prev = row - static_cast<std::size_t>(m);
    entries_[row] = 1;
    entries_[row + static_cast<std::size_t>(m)] = 1;
    for (int k = 1; k < m; ++k)
      mpz_add(entries_[row + k].get_mpz_t(), entries_[prev + k - 1].get_mpz_t(),
              entries_[prev + k].get_mpz_t());
    row += static_cast<std::size_t>(m) + 1;
  }
}

const ExactInteger& BinomialTable::operator()(long m, long k) const {
  static const ExactInteger zero = 0;
  if (m < 0 || k < 0 || k > m) return zero;
  if (m > m_max_) throw std::out_of_range("binomial table too small");
  return entries_[static_cast<std::size_t>(m) * (m + 1) / 2 + static_cast<std::size_t>(k)];
}

std::shared_ptr<const BinomialTable> shared_binomials(int m_max) {
  static std::mutex mutex;
  static std::shared_ptr<const BinomialTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->m_max() < m_max) table = std::make_shared<const BinomialTable>(m_max);
  return table;
}

namespace {

// Gaps split by lower bound. A gap with bound 0 and cap y admits y + 1
// values; a gap with bound 1 admits y. After subtracting the bounds the
// shifted gaps sum to `slack`.
struct GapClasses {
  long free_gaps = 0;
  long bounded_gaps = 0;
  long slack = 0;
};

GapClasses classify(const GapProfile& gaps, int n, int p) {
  GapClasses c;
  c.bounded_gaps = gaps.bound_sum(p);
  c.free_gaps = (p == 0 ? 1 : p + 1) - c.bounded_gaps;
  c.slack = static_cast<long>(n - p) - c.bounded_gaps;
  return c;
}

// Nonnegative solutions of h_0 + ... + h_p = slack with h below the class
// widths, by inclusion-exclusion on the set of gaps that overflow. The loop
// over the larger class is outer so that its big binomial is multiplied once
// per step; the smaller class has at most two gaps for every ensemble.
void bounded_solutions(ExactInteger& out, ExactInteger& inner, const BinomialTable& binom,
                       const GapClasses& c, long p, long y) {
  out = 0;
  if (c.slack < 0) return;
  if (c.bounded_gaps > 0 && y < 1) return;
  if (c.slack > c.free_gaps * y + c.bounded_gaps * (y - 1)) return;

  long big = c.free_gaps, big_width = y + 1;
  long small = c.bounded_gaps, small_width = y;
  if (small > big) {
    std::swap(big, small);
    std::swap(big_width, small_width);
  }
  for (long a = 0; a <= big; ++a) {
    const long rest = c.slack - a * big_width;
    if (rest < 0) break;
    inner = 0;
    for (long b = 0; b <= small; ++b) {
      const long r = rest - b * small_width;
      if (r < 0) break;
      const ExactInteger& stars = binom(r + p, p);
      if (b % 2 == 0)
        mpz_addmul(inner.get_mpz_t(), binom(small, b).get_mpz_t(), stars.get_mpz_t());
      else
        mpz_submul(inner.get_mpz_t(), binom(small, b).get_mpz_t(), stars.get_mpz_t());
    }
    if (a % 2 == 0)
      mpz_addmul(out.get_mpz_t(), binom(big, a).get_mpz_t(), inner.get_mpz_t());
    else
      mpz_submul(out.get_mpz_t(), binom(big, a).get_mpz_t(), inner.get_mpz_t());
  }
}

}  // namespace

ExactInteger count_at_most(Ensemble e, int n, int p, int y) {
  if (n < 0) throw std::invalid_argument("negative string length");
  if (p < 0 || p > n || y < 0) return 0;
  const auto binom = shared_binomials(n + 1);
  ExactInteger out, scratch;
  bounded_solutions(out, scratch, *binom, classify(e.gaps(), n, p), p, y);
  return out;
}

ExactInteger joint_count(Ensemble e, int n, int x, int y) {
  if (x < 0 || y < 0 || y > x || x > n) return 0;
  const int p = n - x;
  return count_at_most(e, n, p, y) - count_at_most(e, n, p, y - 1);
}

JointCountTable gap_table(Ensemble e, int n) {
  JointCountTable table(e, n);
  const auto binom = shared_binomials(n + 1);
  ExactInteger below, current, scratch;
  for (int x = 0; x <= n; ++x) {
    const int p = n - x;
    const GapClasses c = classify(e.gaps(), n, p);
    below = 0;
    for (int y = 0; y <= x; ++y) {
      bounded_solutions(current, scratch, *binom, c, p, y);
      table.at(x, y) = current - below;
      std::swap(below, current);
    }
  }
  return table;
}

CountSums gap_sums(Ensemble e, int n) {
  if (n < 0) throw std::invalid_argument("negative string length");
  CountSums s;
  const auto binom = shared_binomials(n + 1);
  ExactInteger with_p, at_most, tail, tail_sum, weighted_tail_sum, scratch;
  for (int p = 0; p <= n; ++p) {
    const int x = n - p;
    const GapClasses c = classify(e.gaps(), n, p);
    bounded_solutions(with_p, scratch, *binom, c, p, x);
    if (sgn(with_p) == 0) continue;

    // sum_y y * #{run = y} = sum_{y >= 0} #{run > y}, and likewise with
    // weights 2y + 1 for the second moment.
    tail_sum = 0;
    weighted_tail_sum = 0;
    for (int y = 0; y < x; ++y) {
      bounded_solutions(at_most, scratch, *binom, c, p, y);
      mpz_sub(tail.get_mpz_t(), with_p.get_mpz_t(), at_most.get_mpz_t());
      if (sgn(tail) == 0) break;
      tail_sum += tail;
      mpz_addmul_ui(weighted_tail_sum.get_mpz_t(), tail.get_mpz_t(), 2UL * static_cast<unsigned long>(y) + 1);
    }

    const auto up = static_cast<unsigned long>(p);
    s.size += with_p;
    mpz_addmul_ui(s.ones.get_mpz_t(), with_p.get_mpz_t(), up);
    mpz_addmul_ui(s.ones_sq.get_mpz_t(), with_p.get_mpz_t(), up * up);
    s.run += tail_sum;
    s.run_sq += weighted_tail_sum;
    mpz_addmul_ui(s.ones_run.get_mpz_t(), tail_sum.get_mpz_t(), up);
  }
  return s;
}

}  // namespace compcov
