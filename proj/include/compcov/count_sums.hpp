#pragma once

#include "compcov/numeric.hpp"

namespace compcov {

/// Raw power sums of (ones, longest zero-run) over one ensemble at one
/// length; every moment the library reports is a ratio of these.
struct CountSums {
  ExactInteger size;      // number of strings
  ExactInteger ones;      // sum of p
  ExactInteger ones_sq;   // sum of p^2
  ExactInteger run;       // sum of y
  ExactInteger run_sq;    // sum of y^2
  ExactInteger ones_run;  // sum of p*y

  void add(unsigned long p, unsigned long y, const ExactInteger& count) {
    size += count;
    mpz_addmul_ui(ones.get_mpz_t(), count.get_mpz_t(), p);
    mpz_addmul_ui(ones_sq.get_mpz_t(), count.get_mpz_t(), p * p);
    mpz_addmul_ui(run.get_mpz_t(), count.get_mpz_t(), y);
    mpz_addmul_ui(run_sq.get_mpz_t(), count.get_mpz_t(), y * y);
    mpz_addmul_ui(ones_run.get_mpz_t(), count.get_mpz_t(), p * y);
  }

  friend bool operator==(const CountSums& a, const CountSums& b) {
    return a.size == b.size && a.ones == b.ones && a.ones_sq == b.ones_sq && a.run == b.run &&
           a.run_sq == b.run_sq && a.ones_run == b.ones_run;
  }
};

}  // namespace compcov
