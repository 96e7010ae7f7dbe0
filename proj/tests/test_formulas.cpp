#include <stdexcept>
#include <cstdint>

#include "doctest.h"
#include "qforge/formulas.hpp"

using namespace qforge::formulas;

namespace {

// Brute-force references: linear scans over exact integer comparisons.
std::int64_t scan_isqrt(std::int64_t n) {
  std::int64_t s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

std::int64_t scan_ceil_a(std::int64_t g) {
  std::int64_t p = 2;
  while ((2 * p - 3) * (2 * p - 3) < 8 * g + 1) ++p;
  return p;
}

std::int64_t scan_floor_b(std::int64_t g) {
  std::int64_t q = 2;  // 4q - 7 >= 0 from q = 2 on
  while ((4 * (q + 1) - 7) * (4 * (q + 1) - 7) <= 32 * g - 15) ++q;
  return q;
}

std::int64_t scan_lower_bound(std::int64_t g) {
  std::int64_t n = 3;
  while ((2 * n - 5) * (2 * n - 5) < 32 * g - 7) ++n;
  return n;
}

// a(g) <= p <= b(g), decided with integer squares.
bool in_interval(std::int64_t g, std::int64_t p) {
  const std::int64_t lo = 2 * p - 3;
  const std::int64_t hi = 4 * p - 7;
  return lo >= 0 && lo * lo >= 8 * g + 1 && (hi < 0 || hi * hi <= 32 * g - 15);
}

}  // namespace

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(425) == 20);
  CHECK(isqrt(1681) == 41);
  for (std::int64_t n = 0; n < 5000; ++n) CHECK(isqrt(n) == scan_isqrt(n));
  const std::int64_t big = 3037000499;  // floor(sqrt(2^63 - 1))
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(big * big - 1) == big - 1);
  CHECK(isqrt(INT64_MAX) == big);
  CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("ceiling of a(g) and floor of b(g)") {
  CHECK(ceil_a(3) == 4);
  CHECK(ceil_a(53) == 12);
  CHECK(ceil_a(4) == 5);
  CHECK(ceil_a(0) == 2);
  CHECK(floor_b(53) == 12);
  CHECK(floor_b(3) == 4);
  CHECK(floor_b(4) == 4);
  CHECK_THROWS_AS(floor_b(0), std::domain_error);
  for (std::int64_t g = 0; g <= 3000; ++g) CHECK(ceil_a(g) == scan_ceil_a(g));
  for (std::int64_t g = 1; g <= 3000; ++g) CHECK(floor_b(g) == scan_floor_b(g));
}

TEST_CASE("gate") {
  CHECK(gate(3));
  CHECK(gate(53));
  CHECK_FALSE(gate(4));
  CHECK_THROWS_AS(gate(2), std::domain_error);
  for (std::int64_t g = 3; g <= 20000; ++g) {
    bool hit = false;
    for (std::int64_t p = ceil_a(g) - 2; p <= ceil_a(g) + 2; ++p) hit = hit || in_interval(g, p);
    CHECK(gate(g) == hit);
  }
}

TEST_CASE("octahedral formula") {
  auto v55 = octahedral_value(55);
  REQUIRE(v55);
  CHECK(v55->order == 24);
  CHECK(v55->p == 12);
  auto v3 = octahedral_value(3);
  REQUIRE(v3);
  CHECK(v3->order == 8);
  CHECK(v3->p == 4);
  CHECK_FALSE(octahedral_value(4));
  CHECK_FALSE(octahedral_value(1));  // p = 3 is excluded
  for (std::int64_t p = 4; p <= 200; ++p) {
    const auto v = octahedral_value((p - 1) * (p - 2) / 2);
    REQUIRE(v);
    CHECK(v->p == p);
  }
}

TEST_CASE("lower bound") {
  CHECK(lower_bound(1) == 5);
  CHECK(lower_bound(2) == 7);
  CHECK(lower_bound(53) == 24);
  CHECK(lower_bound(4) == 8);
  CHECK_THROWS_AS(lower_bound(0), std::domain_error);
  for (std::int64_t g = 1; g <= 3000; ++g) CHECK(lower_bound(g) == scan_lower_bound(g));
}

TEST_CASE("spinal minimum order") {
  CHECK(spinal_min_order(0) == 4);
  CHECK(spinal_min_order(1) == 6);
  CHECK(spinal_min_order(2) == 8);
  for (std::int64_t g = 0; g <= 2000; ++g) {
    const auto sp = spinal_min_order(g);
    CHECK(betti_complete(sp / 2) >= g);
    if (sp > 4) CHECK(betti_complete(sp / 2 - 1) < g);
  }
}

TEST_CASE("minimality of complete-minus-m spines") {
  CHECK(deleted_edges_minimal(4, 0));
  CHECK(deleted_edges_minimal(12, 2));
  CHECK_FALSE(deleted_edges_minimal(7, 1));
  CHECK_FALSE(deleted_edges_minimal(12, 3));
  CHECK(deleted_edges_minimal(16, 3));
  CHECK_FALSE(deleted_edges_minimal(3, 0));  // p too small
  CHECK_THROWS_AS(deleted_edges_minimal(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(deleted_edges_minimal(4, -1), std::invalid_argument);
  // Minimal spinal order 2p must be at least the Euler lower bound of its genus.
  for (std::int64_t p = 2; p <= 40; ++p)
    for (std::int64_t m = 0; m <= betti_complete(p); ++m)
      if (deleted_edges_minimal(p, m)) CHECK(lower_bound(betti_complete(p) - m) == 2 * p);
}

TEST_CASE("min_order") {
  CHECK(min_order(0).value == 4);
  CHECK(min_order(1).value == 5);
  CHECK(min_order(2).value == 7);
  CHECK(min_order(2).source == Source::SmallGenusTable);
  CHECK(min_order(3).value == 8);
  CHECK(min_order(3).source == Source::OctahedralFormula);
  CHECK(min_order(53).kind == Kind::Exact);
  CHECK(min_order(53).value == 24);
  CHECK(min_order(53).source == Source::GateFormula);
  CHECK(min_order(55).value == 24);
  const auto g4 = min_order(4);
  CHECK(g4.kind == Kind::Bounds);
  CHECK(g4.lower == 8);
  CHECK(g4.upper == 10);
  CHECK(min_order(53).summary() == "exact 24 (gate formula)");
}

TEST_CASE("bound ordering") {
  for (std::int64_t g = 1; g <= 10000; ++g) {
    const auto lo = lower_bound(g);
    const auto hi = spinal_min_order(g);
    REQUIRE(lo <= hi);
    const auto r = min_order(g);
    if (r.kind == Kind::Exact) {
      CHECK(r.value >= lo);
      CHECK(r.value <= hi);
    } else {
      CHECK(r.lower == lo);
      CHECK(r.upper == hi);
    }
  }
}

TEST_CASE("spectrum") {
  CHECK(spectrum(0, 5) == std::vector<std::int64_t>{4, 6, 8, 10});
  CHECK(spectrum(5, 10) == std::vector<std::int64_t>{10, 12, 14, 16, 18, 20});
  CHECK(spectrum(55, 12) == std::vector<std::int64_t>{24});
  CHECK(spectrum(56, 12).empty());
  for (std::int64_t g = 0; g <= 200; ++g) {
    const auto s = spectrum(g, 30);
    if (!s.empty()) CHECK(s.front() == spinal_min_order(g));
  }
  CHECK_THROWS_AS(spectrum(0, 1), std::invalid_argument);
}
