#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "golden.hpp"
#include "oracles.hpp"
#include "radii/bounds.hpp"
#include "radii/errors.hpp"

using namespace radii;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::DomainError;
}

}  // namespace

TEST_CASE("class parameters and derived coefficients", "[bounds]") {
  const ClassParams h1 = ClassParams::h1(1, 1, 2);
  CHECK(h1.d() == 2);
  CHECK(h1.s() == 2);
  CHECK(h1.q() == 2);
  const ClassParams h2 = ClassParams::h2(1, 1, 2);
  CHECK(h2.m() == 2);
  CHECK(h2.n() == 1);
  const ClassParams h3 = ClassParams::h3(1, 2);
  CHECK(h3.l() == 2);
  CHECK_FALSE(h3.has_c());

  CHECK(kind_of([&] { (void)h3.c(); }) == ErrorKind::WrongVariant);
  CHECK(kind_of([&] { (void)h1.m(); }) == ErrorKind::WrongVariant);
  CHECK(kind_of([&] { (void)h2.d(); }) == ErrorKind::WrongVariant);
  CHECK(kind_of([&] { (void)h2.l(); }) == ErrorKind::WrongVariant);

  const ClassParams signed_h1 = ClassParams::h1(0.2, 0.5, 1.0);
  CHECK_THAT(signed_h1.first_signed(), WithinAbs(-0.8, 1e-15));
  CHECK_THAT(signed_h1.second_signed(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(signed_h1.d(), WithinAbs(0.8, 1e-15));

  CHECK_THROWS_MATCHES(ClassParams::h2(0.6, 1, 0), Error, Catch::Matchers::MessageMatches(ContainsSubstring("n=|3c-q|")));
  CHECK_THROWS_MATCHES(ClassParams::h1(1, 0, 0), Error, Catch::Matchers::MessageMatches(ContainsSubstring("d=|6b-4c|")));
  CHECK_THROWS_MATCHES(ClassParams::h3(1, 0), Error, Catch::Matchers::MessageMatches(ContainsSubstring("l=|4b-q|")));
  CHECK_THROWS_MATCHES(ClassParams::h1(-0.1, 0, 0), Error, Catch::Matchers::MessageMatches(ContainsSubstring("b must lie in [0,1]")));
  CHECK(kind_of([] { ClassParams::h1(0, 0, 2.5); }) == ErrorKind::InfeasibleParams);
  CHECK(kind_of([] { ClassParams::h2(NAN, 0, 0); }) == ErrorKind::InfeasibleParams);

  CHECK(parse_class_kind("h2") == ClassKind::H2);
  CHECK_FALSE(parse_class_kind("h4"));
  CHECK(to_string(ClassKind::H3) == "h3");
}

TEST_CASE("mccarty_upper", "[bounds]") {
  CHECK_THAT(mccarty_upper(1, 0, 0.5), WithinRel(4.0 / 3, 1e-15));
  // b = 0 keeps the factor 1/(r^2+1): 4r^2/((1-r^2)(1+r^2)) = 16/15.
  CHECK_THAT(mccarty_upper(0, 0, 0.5), WithinRel(16.0 / 15, 1e-15));
  CHECK_THAT(mccarty_upper(0.3, 0.7, 1e-12), WithinAbs(0, 1e-11));
  CHECK(kind_of([] { mccarty_upper(0.5, 0, 1.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { mccarty_upper(0.5, 0, 0.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { mccarty_upper(0.5, 1.0, 0.5); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { mccarty_upper(1.5, 0, 0.5); }) == ErrorKind::DomainError);
  for (int i = 1; i < 100; ++i) {
    for (double b : {0.0, 0.25, 1.0}) {
      for (double a : {0.0, 0.5, 0.9}) CHECK(mccarty_upper(b, a, i / 100.0) >= 0.0);
    }
  }
}

TEST_CASE("mccarty_lower", "[bounds]") {
  for (double b : {0.0, 0.3, 1.0}) {
    for (double r : {0.1, 0.5, 0.8}) {
      const LowerBoundBranch lb = mccarty_lower(b, 0, r);
      CHECK(lb.branch == LowerBranch::Small);
      CHECK(lb.R_alpha == 0.0);
      CHECK_THAT(lb.value, WithinRel(-2 * r * (b * r * r + 2 * r + b) / ((1 - r * r) * (r * r + 2 * b * r + 1)), 1e-14));
    }
  }
  CHECK_THAT(mccarty_lower(1, 0, 0.5).value, WithinRel(-4.0 / 3, 1e-15));

  const LowerBoundBranch lb = mccarty_lower(0.5, 0.25, 0.1);
  CHECK_THAT(lb.C_b, WithinRel(golden::kLowerC, 1e-14));
  CHECK_THAT(lb.D_b, WithinRel(golden::kLowerD, 1e-14));
  CHECK_THAT(lb.R_b, WithinRel(golden::kLowerR, 1e-14));
  CHECK_THAT(lb.R_alpha, WithinRel(golden::kLowerRAlpha, 1e-14));
  CHECK(lb.branch == LowerBranch::Small);
  CHECK_THAT(lb.value, WithinRel(golden::kLowerSmall, 1e-14));

  // Agreement with the oracle on a grid, including large-branch points.
  bool saw_large = false;
  for (double b = 0; b <= 1.0; b += 0.125) {
    for (double a = 0; a < 0.99; a += 0.11) {
      for (double r = 0.05; r < 0.99; r += 0.1) {
        const LowerBoundBranch got = mccarty_lower(b, a, r);
        const oracle::Lower want = oracle::lower_quantities(b, a, r);
        CHECK_THAT(got.R_b, WithinAbs(double(want.R_b), 1e-12));
        CHECK_THAT(got.R_alpha, WithinAbs(double(want.R_alpha), 1e-12));
        const bool small = want.R_alpha <= want.R_b;
        CHECK((got.branch == LowerBranch::Small) == small);
        CHECK_THAT(got.value, WithinAbs(double(small ? want.small : want.large), 1e-10));
        saw_large = saw_large || !small;
      }
    }
  }
  CHECK(saw_large);
  CHECK(kind_of([] { mccarty_lower(0.5, 0, 1.0); }) == ErrorKind::DomainError);
}

TEST_CASE("lemma2_condition", "[bounds]") {
  CHECK_THAT(lemma2_condition(0, 0.1), WithinRel(golden::kCondition_b0_r01, 1e-14));
  CHECK_THAT(lemma2_condition(1, 0.3), WithinRel(golden::kCondition_b1_r03, 1e-13));
  CHECK_THAT(lemma2_condition(0.4, 1e-9), WithinAbs(0.5, 1e-8));
  CHECK(kind_of([] { lemma2_condition(0.5, 0.34); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { lemma2_condition(0.5, 0.0); }) == ErrorKind::DomainError);

  // The closed form is not identical to C_b - D_b - sqrt(C_1/2); both are
  // positive on the grid, which is what selects the small branch.
  auto closed = [](long double b, long double r) {
    return (-1 + 4 * r * r + 2 * b * b * r * r + 8 * b * r * r * r + r * r * r * r + 2 * b * b * r * r * r * r) /
           (2 * (r - 1) * (1 + r) * (1 + 2 * b * r + r * r) * (1 + 2 * b * r + r * r));
  };
  for (int i = 0; i < 100; ++i) {
    for (int j = 1; j <= 100; ++j) {
      const double b = i / 99.0;
      const double r = (1.0 / 3) * j / 101.0;
      const double value = lemma2_condition(b, r);
      CHECK(value > 0.0);
      CHECK_THAT(value, WithinRel(double(closed(b, r)), 1e-13));
      const oracle::Lower q = oracle::lower_quantities(b, 0.5L, r);
      CHECK(q.R_b - q.R_alpha > 0.0L);
    }
  }
}

TEST_CASE("disc_bound", "[bounds]") {
  const double r = 0.5;
  CHECK_THAT(disc_bound(ClassParams::h3(0, 0), r), WithinRel(32.0 / 15, 1e-15));
  CHECK_THAT(disc_bound(ClassParams::h1(1, 1, 2), 0.05), WithinRel(golden::kH1BoundCorner, 1e-14));
  CHECK_THAT(disc_bound(ClassParams::h2(0.3, 0.2, 1), 1e-12), WithinAbs(0, 1e-10));
  CHECK(kind_of([] { disc_bound(ClassParams::h1(0, 0, 0), 1.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { disc_bound(ClassParams::h1(0, 0, 0), -0.1); }) == ErrorKind::DomainError);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1), uq(0, 2);
  int params_seen = 0;
  while (params_seen < 1000) {
    const double b = u(rng), c = u(rng), q = uq(rng);
    const int kind = params_seen % 3;
    std::optional<ClassParams> p;
    try {
      p = kind == 0 ? ClassParams::h1(b, c, q) : kind == 1 ? ClassParams::h2(b, c, q) : ClassParams::h3(b, q);
    } catch (const Error&) {
      continue;
    }
    ++params_seen;
    for (int k = 1; k <= 100; ++k) {
      const double x = 0.98 * k / 101.0;
      const double here = disc_bound(*p, x);
      CHECK((disc_bound(*p, x + 1e-6) - here) > 0.0);
      if (k % 20 == 0) {
        const long double want = kind == 0   ? oracle::h1_bound(p->d(), p->s(), p->q(), x)
                                 : kind == 1 ? oracle::h2_bound(p->m(), p->n(), p->q(), x)
                                             : oracle::h3_bound(p->l(), p->q(), x);
        CHECK_THAT(here, WithinRel(double(want), 1e-13));
      }
    }
  }
}

TEST_CASE("disc_bound grows with the class coefficients", "[bounds]") {
  for (double x : {0.05, 0.2, 0.6}) {
    // H1: d grows with b for b >= 2c/3; s and q grow with q for q >= 4c.
    for (double c : {0.0, 0.2}) {
      double prev = -1;
      for (double b = 2 * c / 3; b <= (2 + 4 * c) / 6; b += 0.02) {
        const double v = disc_bound(ClassParams::h1(b, c, 1.0), x);
        CHECK(v >= prev);
        prev = v;
      }
      prev = -1;
      for (double q = 4 * c; q <= std::min(2.0, 4 * c + 2); q += 0.05) {
        const double v = disc_bound(ClassParams::h1(2 * c / 3, c, q), x);
        CHECK(v >= prev);
        prev = v;
      }
    }
    // H2: m grows with b, n and q with q.
    double prev = -1;
    for (double b = 0.0; b <= 0.4; b += 0.02) {
      const double v = disc_bound(ClassParams::h2(b, 0, 0.5), x);
      CHECK(v >= prev);
      prev = v;
    }
    prev = -1;
    for (double q = 0.3; q <= 1.3; q += 0.05) {
      const double v = disc_bound(ClassParams::h2(0.2, 0.1, q), x);
      CHECK(v >= prev);
      prev = v;
    }
    // H3: l grows with b for b >= q/4.
    prev = -1;
    for (double b = 0.25; b <= 0.75; b += 0.05) {
      const double v = disc_bound(ClassParams::h3(b, 1.0), x);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("disc_bound matches mccarty_upper for h3 with q = 0", "[bounds]") {
  for (int i = 0; i <= 20; ++i) {
    const double b = 0.5 * i / 20;  // l = 4b <= 2
    const ClassParams p = ClassParams::h3(b, 0);
    for (int k = 1; k < 100; ++k) {
      const double r = 0.99 * k / 100;
      CHECK_THAT(disc_bound(p, r), WithinAbs(mccarty_upper(p.l() / 2, 0, r) + mccarty_upper(0, 0, r),
                                             1e-12 * (1 + disc_bound(p, r))));
    }
  }
}

TEST_CASE("refined_h2_lower", "[bounds]") {
  for (double r : {0.1, 0.25, 0.6}) {
    const RefinedLowerBound lb = refined_h2_lower(ClassParams::h2(0, 0, 0), r);
    CHECK_THAT(lb.value, WithinAbs(1 - (8 * r * r + 2 * r * r * (1 - r * r)) / (1 - r * r * r * r), 1e-14));
    CHECK(lb.justified == (r < 1.0 / 3));
  }
  CHECK_THAT(refined_h2_lower(ClassParams::h2(1, 1, 2), 1e-12).value, WithinAbs(1, 1e-10));
  CHECK_THAT(refined_h2_lower(ClassParams::h2(1, 1, 2), 0.09).value, WithinRel(golden::kRefinedCorner, 1e-14));
  CHECK(kind_of([] { refined_h2_lower(ClassParams::h1(0, 0, 0), 0.1); }) == ErrorKind::WrongVariant);
  CHECK(kind_of([] { refined_h2_lower(ClassParams::h3(0, 0), 0.1); }) == ErrorKind::WrongVariant);
}

TEST_CASE("coefficient bounds hold for the extremal Caratheodory family", "[bounds]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 1), ang(0, 2 * std::numbers::pi);
  for (int i = 0; i < 20000; ++i) {
    const double tau = u(rng);
    const double rad = 0.95 * std::sqrt(u(rng)) + 1e-6;
    const std::complex<long double> z = std::polar<long double>(rad, ang(rng));
    // p = (1+w)/(1-w), zp'/p = 2zw'/((1-w)(1+w)).
    const auto w = z * (z + (long double)tau) / (1.0L + (long double)tau * z);
    const auto dw = (z * z * (long double)tau + 2.0L * z + (long double)tau) /
                    ((1.0L + (long double)tau * z) * (1.0L + (long double)tau * z));
    const auto lq = 2.0L * z * dw / ((1.0L - w) * (1.0L + w));
    CHECK(double(std::abs(lq)) <= mccarty_upper(tau, 0, rad) + 1e-12);
    CHECK(double(lq.real()) >= mccarty_lower(tau, 0, rad).value - 1e-12);
  }
}
