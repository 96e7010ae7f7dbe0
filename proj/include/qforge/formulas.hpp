#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Exact integer evaluation of the minimum-order formulas for quadrangulations
// of the orientable surface of genus g. Nothing in here touches floating point:
// every ceiling or floor of an expression with a square root is decided by
// comparing integer squares.
namespace qforge::formulas {

// Largest s with s*s <= n. Throws std::domain_error for n < 0.
std::int64_t isqrt(std::int64_t n);

// ceil((3 + sqrt(8g+1)) / 2), never below 2: the smallest spine order p
// whose complete graph reaches genus g.
std::int64_t ceil_a(std::int64_t g);

// floor((7 + sqrt(32g-15)) / 4), g >= 1.
std::int64_t floor_b(std::int64_t g);

// True iff ceil_a(g) == floor_b(g); only meaningful for g >= 3.
bool gate(std::int64_t g);

struct OctahedralValue {
  std::int64_t order = 0;
  std::int64_t p = 0;
};

// Defined when g = (p-1)(p-2)/2 for some p >= 4; order is then 2p = 3 + sqrt(8g+1).
std::optional<OctahedralValue> octahedral_value(std::int64_t g);

// Euler/simple-graph lower bound on the order: ceil((5 + sqrt(32g-7)) / 2), g >= 1.
std::int64_t lower_bound(std::int64_t g);

// Order of a minimal spinal quadrangulation: 2 * ceil_a(g).
std::int64_t spinal_min_order(std::int64_t g);

// beta(K_p) = (p-1)(p-2)/2.
std::int64_t betti_complete(std::int64_t p);

// Whether every quadrangulation with graph (K_p - mE)[:] is minimal for its
// genus: p >= 4(m+1) and genus >= 1. Throws std::invalid_argument when m is
// outside 0..beta(K_p) or p < 2.
bool deleted_edges_minimal(std::int64_t p, std::int64_t m);

enum class Kind { Exact, Bounds };

enum class Source {
  SmallGenusTable,
  OctahedralFormula,
  GateFormula,
  LowerAndSpinalBounds,
};

std::string to_string(Source s);

struct MinOrderResult {
  std::int64_t genus = 0;
  Kind kind = Kind::Exact;
  std::int64_t value = 0;  // Exact only
  std::int64_t lower = 0;  // Bounds only
  std::int64_t upper = 0;  // Bounds only
  Source source = Source::SmallGenusTable;

  std::string summary() const;
  friend bool operator==(const MinOrderResult&, const MinOrderResult&) = default;
};

// Minimum number of vertices of a quadrangulation of the genus-g surface, or
// a [lower, upper] pair when the gate does not decide it.
MinOrderResult min_order(std::int64_t g);

// All orders 2p, 2 <= p <= p_max, whose complete-graph spine reaches genus g.
std::vector<std::int64_t> spectrum(std::int64_t g, std::int64_t p_max);

}  // namespace qforge::formulas
