#include "compcov/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace compcov::oracle {

namespace {

void check_length(int n) {
  if (n < 0) throw std::invalid_argument("negative string length");
  if (n > kMaxLength)
    throw CapExceeded("oracle enumerates at most n = " + std::to_string(kMaxLength) +
                      ", requested " + std::to_string(n));
}

int longest_zero_run(std::uint32_t bits, int n) {
  int best = 0, cur = 0;
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1U) {
      cur = 0;
    } else {
      best = std::max(best, ++cur);
    }
  }
  return best;
}

// Enumeration in lexicographic order of the bit string read left to right.
template <typename Fn>
void for_each_admitted(Ensemble e, int n, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i)
      if ((code >> (n - 1 - i)) & 1U) bits |= 1U << i;
    if (!e.admits(bits, n)) continue;
    fn(bits);
  }
}

}  // namespace

BitString::BitString(std::string_view bits) {
  bits_.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string must contain only 0 and 1");
    bits_.push_back(c == '1');
  }
}

BitString::BitString(unsigned long long packed, int length) {
  bits_.resize(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) bits_[static_cast<std::size_t>(i)] = (packed >> i) & 1ULL;
}

int BitString::ones() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }

int BitString::longest_zero_run() const {
  int best = 0, cur = 0;
  for (bool b : bits_) {
    cur = b ? 0 : cur + 1;
    best = std::max(best, cur);
  }
  return best;
}

bool BitString::pinned() const { return !bits_.empty() && !bits_.front() && !bits_.back(); }

bool BitString::solus() const {
  for (std::size_t i = 1; i < bits_.size(); ++i)
    if (bits_[i] && bits_[i - 1]) return false;
  return true;
}

std::string BitString::str() const {
  std::string s;
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

int Composition::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

int Composition::max_part() const { return parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end()); }

bool Composition::one_free() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 2; });
}

Composition string_to_composition(const BitString& b) {
  Composition c;
  int wait = 0;
  for (int i = 0; i <= b.length(); ++i) {
    ++wait;
    if (i == b.length() || b[i]) {
      c.parts.push_back(wait);
      wait = 0;
    }
  }
  return c;
}

BitString composition_to_string(const Composition& c) {
  std::string s;
  for (int part : c.parts) {
    if (part < 1) throw std::invalid_argument("composition parts must be positive");
    s.append(static_cast<std::size_t>(part - 1), '0');
    s.push_back('1');
  }
  if (s.empty()) throw std::invalid_argument("empty composition");
  s.pop_back();
  return BitString(s);
}

std::vector<Composition> compositions(int total, int min_part) {
  std::vector<Composition> out;
  std::vector<int> stack;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (!stack.empty()) out.push_back(Composition{stack});
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      stack.push_back(part);
      self(self, remaining - part);
      stack.pop_back();
    }
  };
  if (total > 0) rec(rec, total);
  return out;
}

JointCountTable brute_table(Ensemble e, int n) {
  check_length(n);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for_each_admitted(e, n, [&](std::uint32_t bits) {
    const int x = n - std::popcount(bits);
    counts[static_cast<std::size_t>(x) * (n + 1) + longest_zero_run(bits, n)] += 1;
  });
  JointCountTable t(e, n);
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= x; ++y) {
      const std::uint64_t c = counts[static_cast<std::size_t>(x) * (n + 1) + y];
      mpz_set_ui(t.at(x, y).get_mpz_t(), static_cast<unsigned long>(c));
    }
  return t;
}

CountSums brute_sums(Ensemble e, int n) {
  check_length(n);
  std::uint64_t size = 0, ones = 0, ones_sq = 0, run = 0, run_sq = 0, ones_run = 0;
  for_each_admitted(e, n, [&](std::uint32_t bits) {
    const std::uint64_t p = static_cast<std::uint64_t>(std::popcount(bits));
    const std::uint64_t y = static_cast<std::uint64_t>(longest_zero_run(bits, n));
    ++size;
    ones += p;
    ones_sq += p * p;
    run += y;
    run_sq += y * y;
    ones_run += p * y;
  });
  auto big = [](std::uint64_t v) {
    ExactInteger z;
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
    return z;
  };
  return CountSums{big(size), big(ones), big(ones_sq), big(run), big(run_sq), big(ones_run)};
}

}  // namespace compcov::oracle
