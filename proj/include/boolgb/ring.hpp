#pragma once
// Bitmask arithmetic for multilinear polynomials over F2[x1..xn] / <xi^2 + xi>.
//
// A monomial is one machine word: bit (nvars - i) is set iff variable xi
// divides it, so x1 sits in the highest used bit and lexicographic comparison
// with x1 > x2 > ... > xn coincides with unsigned comparison of masks.
// The zero mask is the constant monomial 1.
//
// A polynomial is its strictly descending list of monomials; coefficients live
// in F2, so a term is simply present or absent. The empty list is the zero
// polynomial. All operations preserve this canonical form.
//
// Everything here is a value type and every function is pure; nothing is
// shared, so concurrent use needs no synchronization.

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolgb {

using Mask = std::uint64_t;

inline constexpr int max_variables = 64;

struct Monomial {
  Mask mask = 0;

  int degree() const { return std::popcount(mask); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// xi^2 = xi collapses product and lcm into the same bitwise OR
inline Monomial operator*(Monomial a, Monomial b) { return {a.mask | b.mask}; }
inline Monomial lcm(Monomial a, Monomial b) { return {a.mask | b.mask}; }

inline bool divides(Monomial d, Monomial m) { return (d.mask & ~m.mask) == 0; }
inline bool coprime(Monomial a, Monomial b) { return (a.mask & b.mask) == 0; }

inline Monomial operator/(Monomial m, Monomial d) {
  if (!divides(d, m))
    throw std::invalid_argument("monomial quotient: divisor does not divide");
  return {m.mask ^ d.mask};
}

// A point of {0,1}^n, in the same bit layout as Monomial.
struct Point {
  Mask bits = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline bool eval(Monomial m, Point p) { return (m.mask & p.bits) == m.mask; }

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto body = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), body);
}

}  // namespace detail

class Ring {
 public:
  explicit Ring(int nvars) : Ring(default_names(nvars)) {}

  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_.size() > static_cast<std::size_t>(max_variables))
      throw std::invalid_argument("ring needs between 1 and 64 variables");
    for (std::size_t k = 0; k < names_.size(); ++k) {
      if (!detail::is_identifier(names_[k]))
        throw std::invalid_argument("invalid variable name '" + names_[k] + "'");
      if (!index_.emplace(names_[k], static_cast<int>(k) + 1).second)
        throw std::invalid_argument("duplicate variable name '" + names_[k] + "'");
    }
  }

  int nvars() const { return static_cast<int>(names_.size()); }

  // 1-based throughout: variable i occupies bit (nvars - i)
  int bit_of(int i) const { return nvars() - i; }

  const std::string& name(int i) const {
    check_index(i);
    return names_[i - 1];
  }

  Monomial variable(int i) const {
    check_index(i);
    return {Mask{1} << bit_of(i)};
  }

  std::optional<int> index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // all bits a monomial of this ring may use
  Mask used_mask() const {
    return nvars() == max_variables ? ~Mask{0} : (Mask{1} << nvars()) - 1;
  }

  bool operator==(const Ring& other) const { return names_ == other.names_; }

  static std::vector<std::string> default_names(int nvars) {
    if (nvars < 1 || nvars > max_variables)
      throw std::invalid_argument("ring needs between 1 and 64 variables");
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > nvars()) throw std::out_of_range("variable index out of range");
  }

  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

struct Polynomial {
  std::vector<Monomial> terms;  // strictly descending

  bool is_zero() const { return terms.empty(); }
  bool is_one() const { return terms.size() == 1 && terms.front().mask == 0; }

  const Monomial& leading() const {
    assert(!terms.empty());
    return terms.front();
  }

  static Polynomial one() { return {{Monomial{0}}}; }

  friend auto operator<=>(const Polynomial&, const Polynomial&) = default;
};

// canonical form from an arbitrary term list: sort, then cancel mod 2
inline Polynomial make_polynomial(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>{});
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 != 0) out.push_back(terms[i]);
    i = j;
  }
  return {std::move(out)};
}

// addition = symmetric difference of term lists (merge of descending inputs)
inline Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  Polynomial out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  auto a = f.terms.begin(), ae = f.terms.end();
  auto b = g.terms.begin(), be = g.terms.end();
  while (a != ae && b != be) {
    if (*a == *b) {
      ++a;
      ++b;
    } else if (*a > *b) {
      out.terms.push_back(*a++);
    } else {
      out.terms.push_back(*b++);
    }
  }
  out.terms.insert(out.terms.end(), a, ae);
  out.terms.insert(out.terms.end(), b, be);
  return out;
}

// absorption can merge distinct terms, so the product needs recanonicalizing
inline Polynomial operator*(Monomial m, const Polynomial& f) {
  std::vector<Monomial> terms;
  terms.reserve(f.terms.size());
  for (Monomial t : f.terms) terms.push_back(m * t);
  return make_polynomial(std::move(terms));
}

inline Polynomial tail(const Polynomial& f) {
  if (f.is_zero()) return {};
  return {{f.terms.begin() + 1, f.terms.end()}};
}

inline bool eval(const Polynomial& f, Point p) {
  bool acc = false;
  for (Monomial t : f.terms) acc ^= eval(t, p);
  return acc;
}

struct parse_error : std::runtime_error {
  std::size_t position;  // byte offset into the parsed text

  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (offset " + std::to_string(pos) + ")"), position(pos) {}
};

// polynomial := term ('+' term)* ; term := '1' | var ('*' var)*
// Accepts repeated variables and repeated terms, normalizing both (x*x -> x,
// 1+1 -> 0), so any sum of monomial products parses to its canonical image.
inline Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto parse_name = [&]() -> Mask {
    std::size_t start = pos;
    while (pos < text.size() &&
           (text[pos] == '_' || std::isalnum(static_cast<unsigned char>(text[pos]))))
      ++pos;
    std::string_view name = text.substr(start, pos - start);
    if (name.empty() || !detail::is_identifier(name))
      throw parse_error("expected a variable name", start);
    auto idx = ring.index_of(name);
    if (!idx) throw parse_error("unknown variable '" + std::string(name) + "'", start);
    return Mask{1} << ring.bit_of(*idx);
  };
  auto parse_term = [&]() -> Monomial {
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
      return {0};
    }
    Monomial m{parse_name()};
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      m.mask |= parse_name();
      skip_ws();
    }
    return m;
  };

  std::vector<Monomial> terms;
  skip_ws();
  if (pos == text.size()) throw parse_error("empty polynomial", pos);
  for (;;) {
    terms.push_back(parse_term());
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw parse_error("expected '+'", pos);
    ++pos;
    skip_ws();
  }
  return make_polynomial(std::move(terms));
}

inline std::string to_string(Monomial m, const Ring& ring) {
  if (m.mask == 0) return "1";
  std::string out;
  for (int i = 1; i <= ring.nvars(); ++i) {
    if ((m.mask >> ring.bit_of(i)) & 1) {
      if (!out.empty()) out += '*';
      out += ring.name(i);
    }
  }
  return out;
}

inline std::string to_string(const Polynomial& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Monomial& t : f.terms) {
    if (!out.empty()) out += " + ";
    out += to_string(t, ring);
  }
  return out;
}

struct PolySystem {
  Ring ring;
  std::vector<Polynomial> polys;
};

// header := 'ring' INT (':' name+)? ; without names the ring is x1..xn
inline Ring parse_ring_header(std::string_view line) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  };
  auto next_token = [&]() -> std::string_view {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    return line.substr(start, pos - start);
  };

  skip_ws();
  std::size_t kw_at = pos;
  if (next_token() != "ring") throw parse_error("expected 'ring' header", kw_at);
  skip_ws();
  std::size_t num_at = pos;
  std::string_view num = next_token();
  if (num.empty() || !std::all_of(num.begin(), num.end(),
                                  [](char c) { return c >= '0' && c <= '9'; }))
    throw parse_error("expected a variable count", num_at);
  if (num.size() > 3) throw parse_error("variable count out of range", num_at);
  int nvars = 0;
  for (char c : num) nvars = nvars * 10 + (c - '0');

  skip_ws();
  try {
    if (pos == line.size()) return Ring(nvars);
    if (line[pos] != ':') throw parse_error("expected ':' before variable names", pos);
    ++pos;
    std::vector<std::string> names;
    for (;;) {
      skip_ws();
      if (pos == line.size()) break;
      std::size_t name_at = pos;
      std::string_view name = next_token();
      if (!detail::is_identifier(name))
        throw parse_error("invalid variable name '" + std::string(name) + "'", name_at);
      names.emplace_back(name);
    }
    if (static_cast<int>(names.size()) != nvars)
      throw parse_error("expected " + std::to_string(nvars) + " variable names, got " +
                            std::to_string(names.size()),
                        num_at);
    return Ring(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), num_at);
  }
}

// file := header poly-line* ; '#' starts a comment line, blank lines are
// skipped, and comments before the header are tolerated
inline PolySystem parse_poly_file(std::string_view text) {
  std::optional<Ring> ring;
  std::vector<Polynomial> polys;
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
        if (!ring)
          ring = parse_ring_header(line);
        else
          polys.push_back(parse_polynomial(line, *ring));
      } catch (const parse_error& e) {
        throw parse_error("line " + std::to_string(line_no) + ": " + e.what(),
                          line_start + e.position);
      }
    }
    if (eol == std::string_view::npos) break;
    line_start = eol + 1;
  }
  if (!ring) throw parse_error("missing ring header", 0);
  return {*std::move(ring), std::move(polys)};
}

inline bool has_default_names(const Ring& ring) {
  for (int i = 1; i <= ring.nvars(); ++i)
    if (ring.name(i) != "x" + std::to_string(i)) return false;
  return true;
}

inline std::string render_ring_header(const Ring& ring) {
  std::string out = "ring " + std::to_string(ring.nvars());
  if (!has_default_names(ring)) {
    out += " :";
    for (int i = 1; i <= ring.nvars(); ++i) out += " " + ring.name(i);
  }
  return out;
}

inline std::string render_poly_system(const PolySystem& sys) {
  std::string out = render_ring_header(sys.ring) + "\n";
  for (const Polynomial& f : sys.polys) out += to_string(f, sys.ring) + "\n";
  return out;
}

}  // namespace boolgb
