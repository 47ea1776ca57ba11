#include "compcov/ensemble.hpp"
#include "compcov/oracle.hpp"

#include <doctest.h>

using namespace compcov;

TEST_SUITE("ensemble") {

TEST_CASE("kappa marks the solus ensembles") {
  for (Ensemble e : kAllEnsembles) CHECK(e.kappa() == (e.is_solus() ? 1 : 0));
  CHECK(Ensemble::pinned_solus().is_pinned());
  CHECK(Ensemble::pinned_solus().is_solus());
  CHECK_FALSE(Ensemble::unconstrained().is_pinned());
}

TEST_CASE("names parse back") {
  for (Ensemble e : kAllEnsembles) CHECK(parse_ensemble(e.name()) == e);
  CHECK_FALSE(parse_ensemble("pinned_solus").has_value());
  CHECK(parse_family("one-free") == Family::OneFree);
  CHECK(ensemble_of(Family::Unrestricted) == Ensemble::unconstrained());
  CHECK(ensemble_of(Family::OneFree) == Ensemble::pinned_solus());
}

TEST_CASE("pinned-solus is pinned and solus") {
  for (int n = 0; n <= 12; ++n)
    for (unsigned long long b = 0; b < (1ULL << n); ++b) {
      const oracle::BitString s(b, n);
      CHECK(Ensemble::pinned_solus().admits(b, n) ==
            (Ensemble::pinned().admits(b, n) && Ensemble::solus().admits(b, n)));
      CHECK(Ensemble::solus().admits(b, n) == s.solus());
      if (n > 0) CHECK(Ensemble::pinned().admits(b, n) == s.pinned());
      CHECK(Ensemble::unconstrained().admits(b, n));
    }
}

TEST_CASE("gap support matches enumeration") {
  for (Ensemble e : kAllEnsembles)
    for (int n = 1; n <= 14; ++n) {
      const auto brute = oracle::brute_table(e, n);
      for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= x; ++y) {
          CAPTURE(e.name());
          CAPTURE(n);
          CAPTURE(x);
          CAPTURE(y);
          CHECK(gap_support(e.gaps(), n, x, y) == (sgn(brute.count(x, y)) > 0));
        }
    }
}

}
