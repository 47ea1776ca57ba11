#include "compcov/count_tables.hpp"

#include <algorithm>
#include <string>

namespace compcov {

// ---------------------------------------------------------------------------
// JointCountTable

JointCountTable::JointCountTable(Ensemble ensemble, int n)
    : ensemble_(ensemble), n_(n), counts_(index(n + 1, 0)) {
  if (n < 0) throw std::invalid_argument("negative string length");
}

const ExactInteger& JointCountTable::count(int x, int y) const {
  static const ExactInteger zero = 0;
  if (x < 0 || y < 0 || y > x || x > n_) return zero;
  return counts_[index(x, y)];
}

ExactInteger& JointCountTable::at(int x, int y) {
  if (x < 0 || y < 0 || y > x || x > n_) throw std::out_of_range("table entry outside 0<=y<=x<=n");
  return counts_[index(x, y)];
}

std::span<const ExactInteger> JointCountTable::row(int x) const {
  if (x < 0 || x > n_) throw std::out_of_range("table row outside 0..n");
  return {counts_.data() + index(x, 0), static_cast<std::size_t>(x) + 1};
}

ExactInteger JointCountTable::total() const {
  ExactInteger t = 0;
  for (const auto& c : counts_) t += c;
  return t;
}

CountSums JointCountTable::sums() const {
  CountSums s;
  for (int x = 0; x <= n_; ++x)
    for (int y = 0; y <= x; ++y)
      if (sgn(count(x, y)) != 0) s.add(static_cast<unsigned long>(n_ - x), y, count(x, y));
  return s;
}

bool operator==(const JointCountTable& a, const JointCountTable& b) {
  return a.ensemble_ == b.ensemble_ && a.n_ == b.n_ && a.counts_ == b.counts_;
}

// ---------------------------------------------------------------------------
// Boundary data

namespace {

int single_one_count(const GapProfile& gaps, int n, int y) {
  // 0^a 1 0^b with a + b = n - 1 and max(a, b) = y.
  int count = 0;
  for (int a = 0; a <= n - 1; ++a) {
    const int b = n - 1 - a;
    if (a >= gaps.first && b >= gaps.last && std::max(a, b) == y) ++count;
  }
  return count;
}

int epsilon_unconstrained(int n, int x, int y) {
  if (y < 0 || x < y || n < x) return 0;
  return n / (n - x + 1) <= y ? 1 : 0;
}

int epsilon_pinned_solus(int n, int x, int y) {
  if (y < 0 || x < y || n < x) return 0;
  return (n / (n - x + 1) <= y && y < x) || (x == y && y == n) ? 1 : 0;
}

// Rules of the shared first-block recursion. Solus strings are not closed
// under removal of the leading block, so that ensemble is assembled from
// solus strings that start with 0 (or are empty): a solus string is either
// such a string, or a 1 followed by one.
enum class Rule { Unconstrained, Pinned, PinnedSolus, LeadingZeroSolus };

Rule rule_for(Ensemble e) {
  switch (e.tag()) {
    case EnsembleTag::Unconstrained: return Rule::Unconstrained;
    case EnsembleTag::Pinned: return Rule::Pinned;
    case EnsembleTag::PinnedSolus: return Rule::PinnedSolus;
    case EnsembleTag::Solus: return Rule::LeadingZeroSolus;
  }
  return Rule::Unconstrained;
}

constexpr GapProfile kLeadingZeroSolusGaps{1, 1, 0};

int rule_kappa(Rule r) { return r == Rule::PinnedSolus || r == Rule::LeadingZeroSolus ? 1 : 0; }

// Count at x = 0 (all ones) for length n, including the empty string.
int rule_all_ones(Rule r, int n) {
  switch (r) {
    case Rule::Unconstrained: return 1;
    case Rule::LeadingZeroSolus: return n == 0 ? 1 : 0;
    default: return 0;
  }
}

int rule_epsilon(Rule r, int n, int x, int y) {
  switch (r) {
    case Rule::Unconstrained: return epsilon_unconstrained(n, x, y);
    case Rule::PinnedSolus: return epsilon_pinned_solus(n, x, y);
    case Rule::Pinned: return gap_support(Ensemble::pinned().gaps(), n, x, y) ? 1 : 0;
    case Rule::LeadingZeroSolus: return gap_support(kLeadingZeroSolusGaps, n, x, y) ? 1 : 0;
  }
  return 0;
}

int rule_lambda(Rule r, int n, int y) {
  switch (r) {
    case Rule::Unconstrained: return lambda(Ensemble::unconstrained(), n, y);
    case Rule::PinnedSolus: return lambda(Ensemble::pinned_solus(), n, y);
    case Rule::Pinned: return lambda(Ensemble::pinned(), n, y);
    case Rule::LeadingZeroSolus: return single_one_count(kLeadingZeroSolusGaps, n, y);
  }
  return 0;
}

}  // namespace

int epsilon(Ensemble e, int n, int x, int y) {
  switch (e.tag()) {
    case EnsembleTag::Unconstrained: return epsilon_unconstrained(n, x, y);
    case EnsembleTag::PinnedSolus: return epsilon_pinned_solus(n, x, y);
    default: return gap_support(e.gaps(), n, x, y) ? 1 : 0;
  }
}

int lambda(Ensemble e, int n, int y) {
  if (n < 1 || y < 0 || y > n - 1) return 0;
  if (epsilon(e, n, n - 1, y) == 0) return 0;
  const bool odd_middle = n % 2 == 1 && y == (n - 1) / 2;
  switch (e.tag()) {
    case EnsembleTag::Unconstrained: return odd_middle ? 1 : 2;
    case EnsembleTag::PinnedSolus:
      if (odd_middle) return 1;
      return (n - 1) / 2 < y && y < n - 1 ? 2 : 0;
    default: return single_one_count(e.gaps(), n, y);
  }
}

ExactInteger ensemble_size(Ensemble e, int n) {
  if (n < 0) throw std::invalid_argument("negative string length");
  ExactInteger r;
  switch (e.tag()) {
    case EnsembleTag::Unconstrained:
      mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
      return r;
    case EnsembleTag::Pinned:
      if (n == 0) return 0;
      if (n == 1) return 1;
      mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n - 2));
      return r;
    case EnsembleTag::PinnedSolus:
      mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
      return r;
    case EnsembleTag::Solus:
      mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n) + 2);
      return r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Recursion sweep
//
// Both sums of the recursion remove a leading zero block and the 1 after it,
// so the entry with p ones depends only on entries with p - 1 ones. The
// sweep therefore holds two layers (p - 1 and p) covering every length, and
// answers both sums in O(1) from prefix sums of the previous layer:
//   sum_{i=kappa}^{y-1} F(x - i, y)   -> column prefix over x at fixed y
//   sum_{j=0}^{y}       F(x - y, j)   -> row prefix over y at fixed x

namespace {

class Layer {
 public:
  explicit Layer(int x_max)
      : x_max_(x_max), values_(size(x_max)), column_(size(x_max)), row_(size(x_max)) {}

  int x_max() const { return x_max_; }
  ExactInteger& value(int x, int y) { return values_[index(x, y)]; }
  const ExactInteger& value(int x, int y) const { return values_[index(x, y)]; }
  std::span<const ExactInteger> row(int x) const {
    return {values_.data() + index(x, 0), static_cast<std::size_t>(x) + 1};
  }

  void build_prefixes() {
    for (int x = 0; x <= x_max_; ++x) {
      for (int y = 0; y <= x; ++y) {
        const std::size_t k = index(x, y);
        if (x - 1 >= y)
          mpz_add(column_[k].get_mpz_t(), values_[k].get_mpz_t(), column_[index(x - 1, y)].get_mpz_t());
        else
          column_[k] = values_[k];
        if (y > 0)
          mpz_add(row_[k].get_mpz_t(), values_[k].get_mpz_t(), row_[k - 1].get_mpz_t());
        else
          row_[k] = values_[k];
      }
    }
  }

  // sum_{t=lo}^{hi} value(t, y); terms with t < y vanish.
  void column_sum(ExactInteger& out, int lo, int hi, int y) const {
    lo = std::max(lo, y);
    if (hi < lo) {
      out = 0;
      return;
    }
    if (lo - 1 >= y)
      mpz_sub(out.get_mpz_t(), column_[index(hi, y)].get_mpz_t(), column_[index(lo - 1, y)].get_mpz_t());
    else
      out = column_[index(hi, y)];
  }

  // sum_{j=0}^{y} value(x, j)
  const ExactInteger& row_sum(int x, int y) const { return row_[index(x, std::min(x, y))]; }

 private:
  static std::size_t size(int x_max) { return index(x_max + 1, 0); }
  static std::size_t index(int x, int y) {
    return static_cast<std::size_t>(x) * (x + 1) / 2 + static_cast<std::size_t>(y);
  }

  int x_max_;
  std::vector<ExactInteger> values_, column_, row_;
};

void fill_layer(Rule rule, int p, const Layer* prev, Layer& cur) {
  const int kappa = rule_kappa(rule);
  ExactInteger first;
  for (int x = 0; x <= cur.x_max(); ++x) {
    const int n = x + p;
    for (int y = 0; y <= x; ++y) {
      ExactInteger& v = cur.value(x, y);
      if (p == 0) {
        v = y == x ? (x == 0 ? rule_all_ones(rule, 0) : 1) : 0;
      } else if (x == 0) {
        v = rule_all_ones(rule, n);
      } else if (rule_epsilon(rule, n, x, y) == 0) {
        v = 0;
      } else if (p == 1) {
        v = rule_lambda(rule, n, y);
      } else {
        prev->column_sum(first, x - y + 1, x - kappa, y);
        mpz_add(v.get_mpz_t(), first.get_mpz_t(), prev->row_sum(x - y, y).get_mpz_t());
      }
    }
  }
  cur.build_prefixes();
}

}  // namespace

void sweep_tables(Ensemble e, int n_max, const RowVisitor& visit, int cap) {
  if (n_max < 0) throw std::invalid_argument("negative string length");
  if (n_max > cap)
    throw ResourceLimitError("recursion path capped at n = " + std::to_string(cap) +
                             ", requested " + std::to_string(n_max));
  const Rule rule = rule_for(e);
  const bool assemble_solus = rule == Rule::LeadingZeroSolus;

  std::unique_ptr<Layer> prev;
  std::vector<ExactInteger> combined;
  for (int p = 0; p <= n_max; ++p) {
    auto cur = std::make_unique<Layer>(n_max - p);
    fill_layer(rule, p, prev.get(), *cur);
    for (int x = 0; x <= cur->x_max(); ++x) {
      if (!assemble_solus || !prev) {
        visit(x + p, x, cur->row(x));
        continue;
      }
      combined.resize(static_cast<std::size_t>(x) + 1);
      for (int y = 0; y <= x; ++y)
        mpz_add(combined[y].get_mpz_t(), cur->value(x, y).get_mpz_t(), prev->value(x, y).get_mpz_t());
      visit(x + p, x, combined);
    }
    prev = std::move(cur);
  }
}

JointCountTable build_table(Ensemble e, int n, int cap) {
  JointCountTable table(e, n);
  sweep_tables(
      e, n,
      [&](int len, int x, std::span<const ExactInteger> counts) {
        if (len != n) return;
        for (int y = 0; y <= x; ++y) table.at(x, y) = counts[y];
      },
      cap);
  return table;
}

std::vector<CountSums> recursion_sums(Ensemble e, int n_max, int cap) {
  std::vector<CountSums> sums(static_cast<std::size_t>(n_max) + 1);
  ExactInteger r0, r1, r2;
  sweep_tables(
      e, n_max,
      [&](int n, int x, std::span<const ExactInteger> counts) {
        r0 = 0;
        r1 = 0;
        r2 = 0;
        for (int y = 0; y <= x; ++y) {
          const mpz_srcptr c = counts[y].get_mpz_t();
          if (mpz_sgn(c) == 0) continue;
          mpz_add(r0.get_mpz_t(), r0.get_mpz_t(), c);
          mpz_addmul_ui(r1.get_mpz_t(), c, static_cast<unsigned long>(y));
          mpz_addmul_ui(r2.get_mpz_t(), c, static_cast<unsigned long>(y) * y);
        }
        if (sgn(r0) == 0) return;
        const auto p = static_cast<unsigned long>(n - x);
        CountSums& s = sums[static_cast<std::size_t>(n)];
        s.size += r0;
        mpz_addmul_ui(s.ones.get_mpz_t(), r0.get_mpz_t(), p);
        mpz_addmul_ui(s.ones_sq.get_mpz_t(), r0.get_mpz_t(), p * p);
        s.run += r1;
        s.run_sq += r2;
        mpz_addmul_ui(s.ones_run.get_mpz_t(), r1.get_mpz_t(), p);
      },
      cap);
  return sums;
}

}  // namespace compcov
