#include "qforge/formulas.hpp"

#include <stdexcept>

namespace qforge::formulas {

namespace {

// 32g must stay well inside int64.
constexpr std::int64_t kMaxGenus = std::int64_t{1} << 56;

void check_genus(std::int64_t g, std::int64_t min, const char* what) {
  if (g < min)
    throw std::domain_error(std::string(what) + ": genus must be >= " + std::to_string(min));
  if (g > kMaxGenus) throw std::overflow_error(std::string(what) + ": genus too large");
}

// Smallest integer x >= 0 with x >= sqrt(n), i.e. x*x >= n.
std::int64_t ceil_sqrt(std::int64_t n) {
  const std::int64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

std::int64_t ceil_half(std::int64_t n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }

}  // namespace

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  auto x = static_cast<std::uint64_t>(n);
  std::uint64_t root = 0;
  std::uint64_t bit = std::uint64_t{1} << 62;
  while (bit > x) bit >>= 2;
  while (bit != 0) {
    if (x >= root + bit) {
      x -= root + bit;
      root = (root >> 1) + bit;
    } else {
      root >>= 1;
    }
    bit >>= 2;
  }
  return static_cast<std::int64_t>(root);
}

std::int64_t ceil_a(std::int64_t g) {
  check_genus(g, 0, "ceil_a");
  // p >= a(g)  <=>  2p - 3 >= sqrt(8g+1)  <=>  2p - 3 >= ceil_sqrt(8g+1)
  const std::int64_t p = ceil_half(ceil_sqrt(8 * g + 1) + 3);
  return p < 2 ? 2 : p;
}

std::int64_t floor_b(std::int64_t g) {
  check_genus(g, 1, "floor_b");
  // floor((7 + sqrt(x)) / 4) == floor((7 + isqrt(x)) / 4) for integer 7.
  return (7 + isqrt(32 * g - 15)) / 4;
}

bool gate(std::int64_t g) {
  check_genus(g, 3, "gate");
  return ceil_a(g) == floor_b(g);
}

std::optional<OctahedralValue> octahedral_value(std::int64_t g) {
  check_genus(g, 1, "octahedral_value");
  const std::int64_t radicand = 8 * g + 1;
  const std::int64_t r = isqrt(radicand);
  if (r * r != radicand) return std::nullopt;
  // radicand is odd, so r is odd and 3 + r is even.
  const std::int64_t p = (3 + r) / 2;
  if (p < 4) return std::nullopt;
  return OctahedralValue{2 * p, p};
}

std::int64_t lower_bound(std::int64_t g) {
  check_genus(g, 1, "lower_bound");
  // smallest n with 2n - 5 >= sqrt(32g - 7)
  return ceil_half(ceil_sqrt(32 * g - 7) + 5);
}

std::int64_t spinal_min_order(std::int64_t g) { return 2 * ceil_a(g); }

std::int64_t betti_complete(std::int64_t p) {
  if (p < 1) throw std::domain_error("betti_complete: p must be >= 1");
  return (p - 1) * (p - 2) / 2;
}

bool deleted_edges_minimal(std::int64_t p, std::int64_t m) {
  if (p < 2) throw std::invalid_argument("deleted_edges_minimal: p must be >= 2");
  const std::int64_t beta = betti_complete(p);
  if (m < 0 || m > beta)
    throw std::invalid_argument("deleted_edges_minimal: m must lie in 0.." + std::to_string(beta));
  return p >= 4 * (m + 1) && beta - m >= 1;
}

std::string to_string(Source s) {
  switch (s) {
    case Source::SmallGenusTable:
      return "small-genus table";
    case Source::OctahedralFormula:
      return "octahedral formula";
    case Source::GateFormula:
      return "gate formula";
    case Source::LowerAndSpinalBounds:
      return "Euler lower bound / spinal upper bound";
  }
  return "unknown";
}

std::string MinOrderResult::summary() const {
  if (kind == Kind::Exact) return "exact " + std::to_string(value) + " (" + to_string(source) + ")";
  return "bounds [" + std::to_string(lower) + ", " + std::to_string(upper) + "] (" +
         to_string(source) + ")";
}

MinOrderResult min_order(std::int64_t g) {
  check_genus(g, 0, "min_order");
  MinOrderResult result;
  result.genus = g;
  if (g <= 2) {
    static constexpr std::int64_t kTable[] = {4, 5, 7};
    result.value = kTable[g];
    return result;
  }
  const auto octahedral = octahedral_value(g);
  if (gate(g)) {
    result.value = 2 * ceil_a(g);
    result.source = Source::GateFormula;
    if (octahedral) {
      if (octahedral->order != result.value)
        throw std::logic_error("min_order: octahedral and gate formulas disagree at genus " +
                               std::to_string(g));
      result.source = Source::OctahedralFormula;
    }
    return result;
  }
  if (octahedral)
    throw std::logic_error("min_order: octahedral formula applies but the gate fails at genus " +
                           std::to_string(g));
  result.kind = Kind::Bounds;
  result.lower = lower_bound(g);
  result.upper = spinal_min_order(g);
  result.source = Source::LowerAndSpinalBounds;
  return result;
}

std::vector<std::int64_t> spectrum(std::int64_t g, std::int64_t p_max) {
  check_genus(g, 0, "spectrum");
  if (p_max < 2) throw std::invalid_argument("spectrum: p_max must be >= 2");
  std::vector<std::int64_t> orders;
  for (std::int64_t p = 2; p <= p_max; ++p)
    if (betti_complete(p) >= g) orders.push_back(2 * p);
  return orders;
}

}  // namespace qforge::formulas
