#include <doctest.h>

#include "gdalex/error.hpp"
#include "gdalex/oracle.hpp"
#include "gdalex/sequence.hpp"
#include "gdalex/verify.hpp"

using namespace gdalex;

namespace {
constexpr FactorKind P = FactorKind::path;
constexpr FactorKind C = FactorKind::cycle;
}  // namespace

TEST_CASE("sequence values") {
  auto c3 = make_sequence_context(C, 8, compute_value_table({C, 3}, 7));
  CHECK(sequence_value(c3, {4, 4}) == 10);

  auto p15 = make_sequence_context(C, 20, compute_value_table({P, 15}, 7));
  CHECK(sequence_value(p15, {3, 5, 6, 6}) == 122);
  CHECK(sequence_value(p15, {5, 5, 5, 5}) == 116);

  auto c15 = make_sequence_context(P, 20, compute_value_table({C, 15}, 7));
  CHECK(sequence_value(c15, {5, 5, 5, 5}) == 116);

  CHECK_THROWS_AS(sequence_value(c15, {3, 2, 15}), InputError);
  CHECK_THROWS_AS(sequence_value(c15, {10, 10}), InputError);
}

TEST_CASE("single-section paths use the direct value when smaller") {
  for (int n = 2; n <= 7; ++n) {
    auto ctx = make_sequence_context(P, n, compute_value_table({C, 4}, 7));
    CHECK(sequence_value(ctx, PartSequence{n}) ==
          min_gda_columns(ProductSpec({P, n}, {C, 4})).value);
  }
}

TEST_CASE("minimum over feasible sequences") {
  auto a = min_sequence_value(make_sequence_context(P, 20, compute_value_table({C, 15}, 7)), 7);
  CHECK(a.value == 116);
  CHECK(a.sequence == PartSequence{5, 5, 5, 5});
  CHECK(a.method == Method::sequence_dp);

  auto b = min_sequence_value(make_sequence_context(C, 20, compute_value_table({P, 15}, 7)), 7);
  CHECK(b.value == min_gda_columns(ProductSpec({C, 20}, {P, 15}), false).value);
  CHECK(b.value <= 122);

  auto c = min_sequence_value(make_sequence_context(P, 8, compute_value_table({C, 3}, 7)), 6);
  CHECK(c.value == 10);

  CHECK_THROWS_AS(min_sequence_value(make_sequence_context(P, 3, compute_value_table({C, 3}, 7)), 2),
                  InfeasibleError);
  CHECK_THROWS_AS(min_sequence_value(make_sequence_context(P, 9, compute_value_table({C, 3}, 7)), 8),
                  InputError);
  CHECK(default_max_part(3) == 6);
  CHECK(default_max_part(9) == 7);
}

TEST_CASE("sequence value never exceeds a witness built from it") {
  for (auto a : {P, C})
    for (auto b : {P, C}) {
      auto table = compute_value_table({b, 4}, 7);
      for (int n = 8; n <= 12; ++n) {
        auto ctx = make_sequence_context(a, n, table);
        ProductSpec spec({a, n}, {b, 4});
        for (PartSequence w : {PartSequence{4, 4}, PartSequence{5, 3}, PartSequence{2, 3, 3}}) {
          if (!is_feasible(w, n)) {
            std::vector<int> parts = w.parts();
            parts.back() += n - w.sum();
            if (parts.back() > 7 || parts.back() < 3) continue;
            w = PartSequence(parts);
          }
          auto s = witness_from_sequence(spec, w);
          CHECK(sequence_value(ctx, spectrum(s)) <= s.size());
        }
      }
    }
}
