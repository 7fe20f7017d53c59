#pragma once
// Constraint encoders producing generator sets over the Boolean quotient ring:
// Shidoku (4x4 Sudoku) puzzles, fixed points of Boolean update maps, and
// reproducible random ideals.

#include "boolgb/ring.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boolgb {

// ----- Shidoku ---------------------------------------------------------------

// clue values 1..4, 0 for an empty cell; [row-1][col-1] with 1-based rows/cols
struct ShidokuPuzzle {
  std::array<std::array<int, 4>, 4> clues{};
};

// a completed grid, same layout, values 1..4
using ShidokuGrid = std::array<std::array<int, 4>, 4>;

// cell (row, col) holding value maps to variable x_idx; all arguments 1-based
inline int shidoku_var_index(int row, int col, int value) {
  return ((row - 1) * 4 + (col - 1)) * 4 + value;
}

// 16 cells from {1,2,3,4,.} in row-major order; whitespace is ignored
inline ShidokuPuzzle parse_clues(std::string_view text) {
  ShidokuPuzzle puzzle;
  int cell = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    int value;
    if (c == '.')
      value = 0;
    else if (c >= '1' && c <= '4')
      value = c - '0';
    else
      throw parse_error(std::string("clue character '") + c + "' is not one of 1234.", pos);
    if (cell == 16) throw parse_error("more than 16 clue characters", pos);
    puzzle.clues[cell / 4][cell % 4] = value;
    ++cell;
  }
  if (cell != 16)
    throw parse_error("expected 16 clue characters, got " + std::to_string(cell), text.size());
  return puzzle;
}

// One indicator variable per (cell, value) over a fixed 64-variable ring.
// Generators: per cell the odd-parity sum x1+x2+x3+x4+1 and all 6 in-cell
// value products; per row, column and block unit, for each value, the product
// for every cell pair. Duplicates (block pairs already forced by the pair's
// shared row or column) are emitted once. A clue v at (r, c) adds x + 1 for
// its indicator. An empty puzzle yields 336 distinct generators.
inline PolySystem encode_shidoku(const ShidokuPuzzle& puzzle) {
  Ring ring(64);
  std::vector<Polynomial> gens;
  std::set<Polynomial> seen;
  auto add = [&](Polynomial p) {
    if (seen.insert(p).second) gens.push_back(std::move(p));
  };
  auto var = [&](int r, int c, int v) { return ring.variable(shidoku_var_index(r, c, v)); };

  for (int r = 1; r <= 4; ++r) {
    for (int c = 1; c <= 4; ++c) {
      std::vector<Monomial> parity{Monomial{0}};
      for (int v = 1; v <= 4; ++v) parity.push_back(var(r, c, v));
      add(make_polynomial(std::move(parity)));
      for (int v = 1; v <= 4; ++v)
        for (int w = v + 1; w <= 4; ++w) add(Polynomial{{var(r, c, v) * var(r, c, w)}});
    }
  }

  using Cell = std::pair<int, int>;
  std::vector<std::vector<Cell>> units;
  for (int r = 1; r <= 4; ++r)
    units.push_back({{r, 1}, {r, 2}, {r, 3}, {r, 4}});
  for (int c = 1; c <= 4; ++c)
    units.push_back({{1, c}, {2, c}, {3, c}, {4, c}});
  for (int br = 0; br < 2; ++br)
    for (int bc = 0; bc < 2; ++bc)
      units.push_back({{2 * br + 1, 2 * bc + 1},
                       {2 * br + 1, 2 * bc + 2},
                       {2 * br + 2, 2 * bc + 1},
                       {2 * br + 2, 2 * bc + 2}});
  for (const auto& unit : units)
    for (int v = 1; v <= 4; ++v)
      for (std::size_t a = 0; a < unit.size(); ++a)
        for (std::size_t b = a + 1; b < unit.size(); ++b)
          add(Polynomial{{var(unit[a].first, unit[a].second, v) *
                          var(unit[b].first, unit[b].second, v)}});

  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c)
      if (int v = puzzle.clues[r - 1][c - 1]; v != 0)
        add(make_polynomial({var(r, c, v), Monomial{0}}));

  return {std::move(ring), std::move(gens)};
}

// the one-hot point of a completed grid in the encoding's 64-variable ring
inline Point shidoku_solution_point(const ShidokuGrid& grid) {
  Point p;
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c)
      p.bits |= Mask{1} << (64 - shidoku_var_index(r, c, grid[r - 1][c - 1]));
  return p;
}

// Reads a grid back from a basis of 64 linear polynomials x_i or x_i + 1 over
// the encoding ring, one per variable. Anything else, or a cell without
// exactly one set indicator, yields nullopt.
inline std::optional<ShidokuGrid> decode_shidoku_linear_basis(
    std::span<const Polynomial> basis) {
  if (basis.size() != 64) return std::nullopt;
  std::array<std::optional<bool>, 65> value;
  for (const Polynomial& f : basis) {
    if (f.is_zero() || f.leading().degree() != 1) return std::nullopt;
    if (f.terms.size() > 2 || (f.terms.size() == 2 && f.terms[1].mask != 0))
      return std::nullopt;
    int index = 64 - std::countr_zero(f.leading().mask);
    if (value[static_cast<std::size_t>(index)]) return std::nullopt;
    value[static_cast<std::size_t>(index)] = f.terms.size() == 2;
  }
  ShidokuGrid grid{};
  for (int r = 1; r <= 4; ++r) {
    for (int c = 1; c <= 4; ++c) {
      int hits = 0;
      for (int v = 1; v <= 4; ++v) {
        auto bit = value[static_cast<std::size_t>(shidoku_var_index(r, c, v))];
        if (!bit) return std::nullopt;
        if (*bit) {
          ++hits;
          grid[r - 1][c - 1] = v;
        }
      }
      if (hits != 1) return std::nullopt;
    }
  }
  return grid;
}

// ----- Boolean update maps ---------------------------------------------------

// updates[k] = (i, f) means xi is assigned f(x) on each synchronous step;
// variables without an update keep their value
struct BooleanModel {
  Ring ring;
  std::vector<std::pair<int, Polynomial>> updates;
};

// model file := ring header, then lines 'name = polynomial'; one update per
// variable at most, '#' comments and blank lines as in polynomial files
inline BooleanModel parse_model(std::string_view text) {
  std::optional<Ring> ring;
  std::vector<std::pair<int, Polynomial>> updates;
  std::vector<bool> seen;
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::size_t len = (eol == std::string_view::npos ? text.size() : eol) - line_start;
    std::string_view line = text.substr(line_start, len);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      try {
        if (!ring) {
          ring = parse_ring_header(line);
          seen.assign(static_cast<std::size_t>(ring->nvars()) + 1, false);
        } else {
          std::size_t eq = line.find('=');
          if (eq == std::string_view::npos)
            throw parse_error("expected 'name = polynomial'", first);
          std::size_t name_end = line.find_last_not_of(" \t", eq - 1);
          if (name_end == std::string_view::npos || name_end < first)
            throw parse_error("missing variable name before '='", eq);
          std::string_view name = line.substr(first, name_end - first + 1);
          auto idx = ring->index_of(name);
          if (!idx)
            throw parse_error("unknown variable '" + std::string(name) + "'", first);
          if (seen[static_cast<std::size_t>(*idx)])
            throw parse_error("duplicate update for '" + std::string(name) + "'", first);
          seen[static_cast<std::size_t>(*idx)] = true;
          Polynomial f;
          try {
            f = parse_polynomial(line.substr(eq + 1), *ring);
          } catch (const parse_error& e) {
            throw parse_error(e.what(), eq + 1 + e.position);
          }
          updates.emplace_back(*idx, std::move(f));
        }
      } catch (const parse_error& e) {
        throw parse_error("line " + std::to_string(line_no) + ": " + e.what(),
                          line_start + e.position);
      }
    }
    if (eol == std::string_view::npos) break;
    line_start = eol + 1;
  }
  if (!ring) throw parse_error("missing ring header", 0);
  return {*std::move(ring), std::move(updates)};
}

// Fixed points of the synchronous map are the zeros of { f + x : (x, f) }.
// Identity updates contribute nothing; equal generators are emitted once.
inline std::vector<Polynomial> fixed_point_ideal(const BooleanModel& model) {
  std::vector<Polynomial> gens;
  std::set<Polynomial> seen;
  for (const auto& [index, f] : model.updates) {
    Polynomial g = f + Polynomial{{model.ring.variable(index)}};
    if (!g.is_zero() && seen.insert(g).second) gens.push_back(std::move(g));
  }
  return gens;
}

// ----- Random ideals ---------------------------------------------------------

// The splitmix64 generator (Vigna's constants): state advances by
// 0x9e3779b97f4b7c15; output mixes with shifts 30/27/31 and multipliers
// 0xbf58476d1ce4e5b9, 0x94d049bb133111eb. Chosen for a tiny, portable,
// exactly reproducible stream.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4b7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

struct RandomIdealParams {
  int nvars = 0;
  int npolys = 0;
  int max_terms = 0;
  int max_degree = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// number of monomials of degree <= dmax in n variables, saturated at cap
inline std::uint64_t monomial_count_capped(int n, int dmax, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (int d = 0; d <= dmax; ++d) {
    if (total >= cap - binom || total + binom >= cap) return cap;
    total += binom;
    binom = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(binom) * static_cast<std::uint64_t>(n - d)) /
        static_cast<std::uint64_t>(d + 1));
  }
  return total;
}

}  // namespace detail

// Reproducible random generators, all draws from one splitmix64 stream seeded
// with params.seed, in this exact order. Per polynomial: a term count
// t = 1 + next() % min(max_terms, #monomials of degree <= max_degree), then
// monomials until t are distinct. Per monomial: a degree d = next() %
// (max_degree + 1), then variable indices 1 + next() % nvars, repeated until
// d distinct variables accumulate. Duplicate monomials are redrawn, so no
// polynomial is zero and each has between 1 and max_terms terms.
inline PolySystem random_ideal(const RandomIdealParams& params) {
  if (params.nvars < 1 || params.nvars > max_variables)
    throw std::invalid_argument("random_ideal: nvars must be between 1 and 64");
  if (params.npolys < 1) throw std::invalid_argument("random_ideal: npolys must be positive");
  if (params.max_terms < 1)
    throw std::invalid_argument("random_ideal: max_terms must be positive");
  if (params.max_degree < 1 || params.max_degree > params.nvars)
    throw std::invalid_argument("random_ideal: max_degree must be between 1 and nvars");

  Ring ring(params.nvars);
  SplitMix64 rng{params.seed};
  std::uint64_t term_cap = detail::monomial_count_capped(
      params.nvars, params.max_degree, static_cast<std::uint64_t>(params.max_terms));

  std::vector<Polynomial> polys;
  polys.reserve(static_cast<std::size_t>(params.npolys));
  for (int p = 0; p < params.npolys; ++p) {
    std::uint64_t t = 1 + rng.next() % term_cap;
    std::set<Mask> terms;
    while (terms.size() < t) {
      int degree = static_cast<int>(rng.next() % (static_cast<std::uint64_t>(params.max_degree) + 1));
      Mask mask = 0;
      while (std::popcount(mask) < degree) {
        int index = static_cast<int>(1 + rng.next() % static_cast<std::uint64_t>(params.nvars));
        mask |= Mask{1} << ring.bit_of(index);
      }
      terms.insert(mask);
    }
    std::vector<Monomial> list;
    list.reserve(terms.size());
    for (Mask m : terms) list.push_back({m});
    polys.push_back(make_polynomial(std::move(list)));
  }
  return {std::move(ring), std::move(polys)};
}

}  // namespace boolgb
