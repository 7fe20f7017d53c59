#pragma once
// Brute-force oracles used to cross-check the fast bitmask arithmetic:
// exhaustive variety enumeration, a dense exponent-vector polynomial
// representation that can hold squares, and a backtracking Shidoku solver.
// Everything here favors obviousness over speed.

#include "boolgb/encoders.hpp"
#include "boolgb/ring.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <vector>

namespace boolgb {

inline constexpr int variety_default_cap = 24;

struct VarietyReport {
  int nvars = 0;
  std::vector<Point> points;  // ascending by bits
};

// All points of {0,1}^n where every generator vanishes, by trying all 2^n.
inline VarietyReport enumerate_variety(std::span<const Polynomial> gens, const Ring& ring,
                                       int cap = variety_default_cap) {
  if (ring.nvars() > cap || ring.nvars() > 32)
    throw std::invalid_argument("variety enumeration: too many variables for exhaustion");
  VarietyReport report{ring.nvars(), {}};
  Mask count = Mask{1} << ring.nvars();
  for (Mask bits = 0; bits < count; ++bits) {
    Point p{bits};
    bool vanishes = true;
    for (const Polynomial& f : gens)
      if (eval(f, p)) {
        vanishes = false;
        break;
      }
    if (vanishes) report.points.push_back(p);
  }
  return report;
}

// Two generator sets cut the same variety iff they span the same ideal here,
// so this is a complete (if exponential) equality test.
inline bool varieties_equal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                            const Ring& ring, int cap = variety_default_cap) {
  return enumerate_variety(a, ring, cap).points == enumerate_variety(b, ring, cap).points;
}

// ----- Dense covering-ring arithmetic ----------------------------------------

// A polynomial over F2 with true exponents: entry k of a term is the exponent
// of x_{k+1}. A present vector has coefficient 1. Set order is lexicographic
// with x1 first, so the largest element is the leading term.
struct DensePoly {
  std::set<std::vector<std::uint8_t>> terms;

  bool is_zero() const { return terms.empty(); }
  const std::vector<std::uint8_t>& leading() const { return *terms.rbegin(); }
};

inline void dense_toggle(DensePoly& p, std::vector<std::uint8_t> term) {
  auto [it, inserted] = p.terms.insert(std::move(term));
  if (!inserted) p.terms.erase(it);
}

inline std::vector<std::uint8_t> dense_exponents(Monomial m, const Ring& ring) {
  std::vector<std::uint8_t> e(static_cast<std::size_t>(ring.nvars()), 0);
  for (int i = 1; i <= ring.nvars(); ++i)
    if ((m.mask >> ring.bit_of(i)) & 1) e[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

inline DensePoly dense_from(const Polynomial& f, const Ring& ring) {
  DensePoly out;
  for (Monomial t : f.terms) dense_toggle(out, dense_exponents(t, ring));
  return out;
}

// addition and subtraction coincide in characteristic 2
inline DensePoly dense_add(const DensePoly& a, const DensePoly& b) {
  DensePoly out = a;
  for (const auto& t : b.terms) dense_toggle(out, t);
  return out;
}

// exact product with a monomial: exponents add entrywise
inline DensePoly dense_mul_monomial(const DensePoly& p, const std::vector<std::uint8_t>& m) {
  DensePoly out;
  for (const auto& t : p.terms) {
    std::vector<std::uint8_t> prod = t;
    for (std::size_t k = 0; k < prod.size(); ++k)
      prod[k] = static_cast<std::uint8_t>(prod[k] + m[k]);
    dense_toggle(out, std::move(prod));
  }
  return out;
}

// image under xi^2 -> xi: clamp each exponent to one, collect mod 2
inline Polynomial dense_to_multilinear(const DensePoly& p, const Ring& ring) {
  std::vector<Monomial> terms;
  terms.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    Mask mask = 0;
    for (int i = 1; i <= ring.nvars(); ++i)
      if (t[static_cast<std::size_t>(i - 1)] != 0) mask |= Mask{1} << ring.bit_of(i);
    terms.push_back({mask});
  }
  return make_polynomial(std::move(terms));
}

// monomial-times-polynomial computed honestly in the covering ring and then
// clamped; must agree with the bitwise OR product
inline Polynomial dense_mono_poly_product(Monomial m, const Polynomial& f, const Ring& ring) {
  return dense_to_multilinear(dense_mul_monomial(dense_from(f, ring), dense_exponents(m, ring)),
                              ring);
}

// S-polynomial of f with x_i^2 + x_i computed in the covering ring:
//   x_i * f  -  (lt(f)/x_i) * (x_i^2 + x_i),
// then clamped back to the quotient. Requires x_i | lt(f); var_index is
// 1-based.
inline Polynomial dense_field_s_polynomial(const Polynomial& f, int var_index,
                                           const Ring& ring) {
  Monomial xi = ring.variable(var_index);
  if (f.is_zero() || !divides(xi, f.leading()))
    throw std::invalid_argument("dense_field_s_polynomial needs xi | lt(f)");

  std::vector<std::uint8_t> ei(static_cast<std::size_t>(ring.nvars()), 0);
  ei[static_cast<std::size_t>(var_index - 1)] = 1;
  DensePoly left = dense_mul_monomial(dense_from(f, ring), ei);

  DensePoly field_poly;
  std::vector<std::uint8_t> sq = ei;
  sq[static_cast<std::size_t>(var_index - 1)] = 2;
  dense_toggle(field_poly, std::move(sq));
  dense_toggle(field_poly, ei);
  DensePoly right = dense_mul_monomial(field_poly, dense_exponents(f.leading() / xi, ring));

  return dense_to_multilinear(dense_add(left, right), ring);
}

// ----- Shidoku backtracking --------------------------------------------------

namespace detail {

inline bool shidoku_placement_ok(const ShidokuGrid& grid, int row, int col, int value) {
  for (int k = 0; k < 4; ++k) {
    if (k != col && grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] == value)
      return false;
    if (k != row && grid[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] == value)
      return false;
  }
  int br = row / 2 * 2, bc = col / 2 * 2;
  for (int r = br; r < br + 2; ++r)
    for (int c = bc; c < bc + 2; ++c)
      if ((r != row || c != col) &&
          grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == value)
        return false;
  return true;
}

inline void shidoku_search(const ShidokuPuzzle& puzzle, ShidokuGrid& grid, int cell,
                           std::size_t limit, std::vector<ShidokuGrid>& out) {
  if (out.size() >= limit) return;
  if (cell == 16) {
    out.push_back(grid);
    return;
  }
  int row = cell / 4, col = cell % 4;
  int clue = puzzle.clues[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  for (int value = 1; value <= 4; ++value) {
    if (clue != 0 && value != clue) continue;
    if (!shidoku_placement_ok(grid, row, col, value)) continue;
    grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = value;
    shidoku_search(puzzle, grid, cell + 1, limit, out);
    grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
  }
}

}  // namespace detail

// All completions of the puzzle, cells filled row-major with values tried in
// ascending order, so the result order is deterministic. Stops early once
// limit grids are found.
inline std::vector<ShidokuGrid> solve_shidoku(
    const ShidokuPuzzle& puzzle,
    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  std::vector<ShidokuGrid> out;
  ShidokuGrid grid{};
  detail::shidoku_search(puzzle, grid, 0, limit, out);
  return out;
}

}  // namespace boolgb
