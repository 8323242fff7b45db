#include <doctest.h>

#include "gdalex/closed_form.hpp"
#include "gdalex/error.hpp"
#include "gdalex/oracle.hpp"

using namespace gdalex;

namespace {
constexpr FactorKind P = FactorKind::path;
constexpr FactorKind C = FactorKind::cycle;
}  // namespace

TEST_CASE("m = 3 closed forms") {
  CHECK(gamma_m3(9, C) == 12);
  CHECK(gamma_m3(20, C) == 25);
  CHECK(gamma_m3(12, C) == 15);
  CHECK(gamma_m3(8, P) == 9);
  CHECK(gamma_m3(10, P) == 10);
  CHECK_THROWS_AS(gamma_m3(7, C), UnsupportedError);
}

TEST_CASE("candidate families") {
  auto c20 = candidate_sequences(20);
  CHECK(c20[0] == PartSequence{5, 5, 5, 5});
  CHECK(c20[1] == PartSequence{5, 5, 5, 5});
  CHECK(c20[2] == PartSequence{5, 5, 5, 5});
  CHECK(c20[3] == PartSequence{3, 5, 6, 6});
  CHECK(candidate_sequences(19)[1] == PartSequence{3, 5, 5, 6});
  CHECK(candidate_sequences(18)[3] == PartSequence{6, 6, 6});
  CHECK(candidate_sequences(25)[3] == PartSequence{6, 6, 6, 7});
  CHECK_THROWS_AS(candidate_sequences(7), UnsupportedError);
  for (int n = 8; n <= 80; ++n)
    for (const auto& f : candidate_sequences(n))
      if (f) {
        CAPTURE(n);
        CHECK(f->sum() == n);
        CHECK(f->max_part() <= 7);
      }
}

TEST_CASE("threshold lookup") {
  CHECK(thresholds(12, {P, C})[0] == Threshold::at(8));
  auto row1 = [](ComboKind k) { return thresholds(25, k)[2]; };
  CHECK(row1({P, C}) == Threshold::at(18));
  CHECK(row1({C, C}) == Threshold::at(18));
  CHECK(row1({P, P}) == Threshold::at(11));
  CHECK(row1({C, P}) == Threshold::at(11));
  CHECK(thresholds(19, {C, C})[0].state != Threshold::defined);
  CHECK(thresholds(19, {P, C})[0] == Threshold::at(9));
  // 30 = 6*5 = 5*6 has two distinct 5/6 compositions; 22 and 20 have one
  CHECK(thresholds(30, {P, C})[1] == Threshold::at(13));
  CHECK(thresholds(30, {C, P})[1] == Threshold::at(8));
  CHECK(thresholds(22, {P, C})[1].state == Threshold::undefined);
  CHECK(thresholds(20, {C, P})[1].state == Threshold::undefined);
}

TEST_CASE("small orders: m = 3 constants") {
  CHECK(gamma_small(ProductSpec({P, 6}, {C, 3})) == 8);
  CHECK(gamma_small(ProductSpec({C, 7}, {P, 3})) == 9);
  CHECK(gamma_small(ProductSpec({P, 5}, {C, 3})) == 7);
  CHECK(gamma_small(ProductSpec({C, 5}, {P, 3})) == 5);
  CHECK_THROWS_AS(gamma_small(ProductSpec({P, 8}, {C, 3})), UnsupportedError);
}

TEST_CASE("small-order formulas match the oracle for m in 4..12") {
  CHECK(gamma_small(ProductSpec({P, 4}, {C, 6})) == 11);
  for (auto a : {P, C})
    for (auto b : {P, C})
      for (int m = 3; m <= 12; ++m)
        for (int n = a == C ? 3 : 2; n <= 7; ++n) {
          ProductSpec spec({a, n}, {b, m});
          CAPTURE(describe(spec));
          CHECK(gamma_small(spec) == min_gda_columns(spec).value);
        }
}

TEST_CASE("dispatcher") {
  CHECK(gamma(ProductSpec({P, 5}, {C, 3})).value == 7);
  CHECK(gamma(ProductSpec({C, 5}, {P, 3})).value == 5);
  CHECK(gamma(ProductSpec({C, 12}, {C, 3})).value == 15);
  auto r = gamma(ProductSpec({P, 20}, {C, 15}));
  CHECK(r.value == 116);
  CHECK(r.method == Method::closed_form);
  REQUIRE(r.sequence);
  CHECK(r.sequence->sum() == 20);
}

TEST_CASE("min-of-four and threshold dispatch") {
  const auto& c15 = cached_value_table({C, 15});
  CHECK(gamma_min_of_four(ProductSpec({P, 20}, {C, 15}), c15).value == 116);
  CHECK(gamma_via_thresholds(ProductSpec({P, 20}, {C, 15}), c15).value == 116);

  const auto& p15 = cached_value_table({P, 15});
  auto cp = gamma_min_of_four(ProductSpec({C, 20}, {P, 15}), p15);
  CHECK(cp.value == min_gda_columns(ProductSpec({C, 20}, {P, 15}), false).value);

  const auto& c5 = cached_value_table({C, 5});
  ProductSpec p22c5({P, 22}, {C, 5});
  auto via = gamma_via_thresholds(p22c5, c5);
  CHECK(via.family == 1);
  CHECK(via.value == gamma_min_of_four(p22c5, c5).value);
  CHECK(via.value == min_gda_columns(p22c5).value);

  CHECK_THROWS_AS(gamma_min_of_four(ProductSpec({P, 20}, {C, 15}), c5), InputError);
  CHECK_THROWS_AS(gamma_min_of_four(ProductSpec({P, 20}, {C, 3}), cached_value_table({C, 3})),
                  UnsupportedError);
}
