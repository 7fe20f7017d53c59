#pragma once
// Buchberger's algorithm over the Boolean quotient ring.
//
// The field relations xi^2 + xi are never stored. Their S-polynomials with a
// basis element g stay multilinear and are generated directly as
//   xi * tail(g) + lt(g)        for each variable xi dividing lt(g);
// variables outside lt(g) give coprime leading terms and contribute nothing.
//
// Pair selection follows the normal strategy: lowest lcm degree first, then
// lexicographically smallest lcm, then creation order. Basis pairs may be
// pruned by the coprime (first) criterion and the chain (second) criterion;
// field pairs are never pruned.
//
// When a new element makes an older leading term reducible, the older element
// is retired and its full reduction re-enters the basis, so the working basis
// stays close to interreduced. Queued pairs that mention a retired element are
// dropped when popped.

#include "boolgb/ring.hpp"

#include <cstdint>
#include <queue>
#include <unordered_set>
#include <utility>

namespace boolgb {

struct BuchbergerOptions {
  bool use_coprime_criterion = true;  // skip pairs with coprime leading terms
  bool use_chain_criterion = true;    // skip pairs covered by a third element
  bool retire_redundant = true;       // re-reduce elements with newly reducible leading terms
};

struct BuchbergerStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_popped = 0;
  std::uint64_t pairs_dropped_dead = 0;
  std::uint64_t coprime_skips = 0;
  std::uint64_t chain_skips = 0;
  std::uint64_t reductions_to_zero = 0;
  std::uint64_t elements_inserted = 0;
  std::uint64_t elements_retired = 0;
};

struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> elements;  // reduced basis, descending leading monomials
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of the zero polynomial");
  Mask l = f.leading().mask | g.leading().mask;
  return Monomial{l ^ f.leading().mask} * f + Monomial{l ^ g.leading().mask} * g;
}

// S-polynomial of g with var^2 + var, taken modulo that relation.
inline Polynomial field_s_polynomial(const Polynomial& g, Monomial var) {
  if (g.is_zero() || var.degree() != 1 || !divides(var, g.leading()))
    throw std::invalid_argument("field_s_polynomial needs a variable dividing the leading term");
  return var * tail(g) + Polynomial{{g.leading()}};
}

namespace detail {

// Full reduction. find_reducer(t) returns a basis element whose leading term
// divides t, or nullptr. Each rewrite cancels the current head monomial and
// introduces only strictly smaller ones, so the head monomial of the pending
// part strictly decreases and the loop terminates.
template <class FindReducer>
Polynomial normal_form_impl(Polynomial f, FindReducer&& find_reducer) {
  std::vector<Monomial> done;
  std::vector<Monomial> work = std::move(f.terms);
  std::size_t head = 0;
  while (head < work.size()) {
    Monomial t = work[head];
    const Polynomial* g = find_reducer(t);
    if (g == nullptr) {
      done.push_back(t);
      ++head;
      continue;
    }
    Polynomial prod = Monomial{t.mask ^ g->leading().mask} * *g;
    std::vector<Monomial> next;
    next.reserve(work.size() - head + prod.terms.size());
    std::size_t a = head;
    auto b = prod.terms.begin();
    while (a < work.size() && b != prod.terms.end()) {
      if (work[a] == *b) {
        ++a;
        ++b;
      } else if (work[a] > *b) {
        next.push_back(work[a++]);
      } else {
        next.push_back(*b++);
      }
    }
    next.insert(next.end(), work.begin() + a, work.end());
    next.insert(next.end(), b, prod.terms.end());
    work = std::move(next);
    head = 0;
  }
  return Polynomial{std::move(done)};
}

}  // namespace detail

// Remainder of f under full reduction by basis, scanned in order; zero
// elements are skipped. The result has no monomial divisible by any leading
// term of the basis.
inline Polynomial normal_form(Polynomial f, std::span<const Polynomial> basis) {
  return detail::normal_form_impl(std::move(f), [basis](Monomial t) -> const Polynomial* {
    for (const Polynomial& g : basis)
      if (!g.is_zero() && divides(g.leading(), t)) return &g;
    return nullptr;
  });
}

inline bool coprime_criterion_applies(Monomial lt_f, Monomial lt_g) {
  return coprime(lt_f, lt_g);
}

// Chain criterion: the pair (i, j) is redundant if some other element k has
// lt(k) | lcm(i, j) and both pairs {i, k} and {j, k} are already settled.
template <class PairDone>
bool chain_criterion_applies(int i, int j, Monomial pair_lcm,
                             std::span<const Mask> lead_masks,
                             std::span<const int> candidates, PairDone&& pair_done) {
  for (int k : candidates) {
    if (k == i || k == j) continue;
    if ((lead_masks[static_cast<std::size_t>(k)] & ~pair_lcm.mask) != 0) continue;
    if (pair_done(i, k) && pair_done(j, k)) return true;
  }
  return false;
}

// Repeated full reduction of each element by the others until stable. Zeros
// are dropped; the survivors have pairwise indivisible leading terms and no
// reducible monomial anywhere, and come back sorted by descending leading
// monomial. Every rewrite replaces a monomial by strictly smaller ones, so
// the passes terminate.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> polys) {
  std::erase_if(polys, [](const Polynomial& p) { return p.is_zero(); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < polys.size();) {
      Polynomial h = detail::normal_form_impl(
          polys[i], [&](Monomial t) -> const Polynomial* {
            for (std::size_t j = 0; j < polys.size(); ++j)
              if (j != i && divides(polys[j].leading(), t)) return &polys[j];
            return nullptr;
          });
      if (h == polys[i]) {
        ++i;
        continue;
      }
      changed = true;
      if (h.is_zero())
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(i));
      else
        polys[i++] = std::move(h);
    }
  }
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading() > b.leading();
  });
  return polys;
}

// Direct check of the Buchberger criterion, with no pair pruning: every
// basis-pair and field-pair S-polynomial must reduce to zero. Zero elements
// are ignored; a basis containing 1 passes (every remainder dies against it).
inline bool is_groebner_basis(std::span<const Polynomial> basis) {
  std::vector<Polynomial> g;
  for (const Polynomial& p : basis)
    if (!p.is_zero()) g.push_back(p);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (Mask m = g[i].leading().mask; m != 0; m &= m - 1)
      if (!normal_form(field_s_polynomial(g[i], Monomial{m & (~m + 1)}), g).is_zero())
        return false;
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
  }
  return true;
}

namespace detail {

class GbEngine {
 public:
  GbEngine(BuchbergerOptions opts, BuchbergerStats& stats) : opts_(opts), stats_(stats) {}

  // false once the ideal is known to be the whole ring
  bool add_generator(Polynomial g) {
    if (g.is_zero()) return true;
    return settle(reduce(std::move(g)));
  }

  bool run() {
    while (!queue_.empty()) {
      Pair p = queue_.top();
      queue_.pop();
      if (!alive_[static_cast<std::size_t>(p.i)] ||
          (p.j >= 0 && !alive_[static_cast<std::size_t>(p.j)])) {
        ++stats_.pairs_dropped_dead;
        continue;
      }
      ++stats_.pairs_popped;
      Polynomial s;
      if (p.j >= 0) {
        if (opts_.use_coprime_criterion &&
            coprime_criterion_applies(Monomial{lt_[static_cast<std::size_t>(p.i)]},
                                      Monomial{lt_[static_cast<std::size_t>(p.j)]})) {
          mark_done(p.i, p.j);
          ++stats_.coprime_skips;
          continue;
        }
        if (opts_.use_chain_criterion &&
            chain_criterion_applies(p.i, p.j, Monomial{p.lcm}, lt_, alive_list_,
                                    [this](int a, int b) { return is_done(a, b); })) {
          mark_done(p.i, p.j);
          ++stats_.chain_skips;
          continue;
        }
        s = s_polynomial(elems_[static_cast<std::size_t>(p.i)],
                         elems_[static_cast<std::size_t>(p.j)]);
        mark_done(p.i, p.j);
      } else {
        s = field_s_polynomial(elems_[static_cast<std::size_t>(p.i)],
                               Monomial{Mask{1} << p.field_bit});
      }
      Polynomial h = reduce(std::move(s));
      if (h.is_zero()) {
        ++stats_.reductions_to_zero;
        continue;
      }
      if (!settle(std::move(h))) return false;
    }
    return true;
  }

  std::vector<Polynomial> reduced_result() const {
    std::vector<Polynomial> out;
    out.reserve(alive_list_.size());
    for (int k : alive_list_) out.push_back(elems_[static_cast<std::size_t>(k)]);
    return interreduce(std::move(out));
  }

 private:
  struct Pair {
    int degree;  // popcount of the lcm key, +1 for field pairs
    Mask lcm;
    std::uint64_t seq;
    int i;
    int j;          // second basis index, -1 for field pairs
    int field_bit;  // bit of the field variable, -1 for basis pairs
  };

  struct PairLater {  // strict-weak order putting the smallest key on top
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.degree != b.degree) return a.degree > b.degree;
      if (a.lcm != b.lcm) return a.lcm > b.lcm;
      return a.seq > b.seq;
    }
  };

  static std::uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  void mark_done(int a, int b) { done_.insert(pair_key(a, b)); }
  bool is_done(int a, int b) const { return done_.contains(pair_key(a, b)); }

  Polynomial reduce(Polynomial f) const {
    return normal_form_impl(std::move(f), [this](Monomial t) -> const Polynomial* {
      for (int k : alive_list_)
        if ((lt_[static_cast<std::size_t>(k)] & ~t.mask) == 0)
          return &elems_[static_cast<std::size_t>(k)];
      return nullptr;
    });
  }

  // Install a fully reduced polynomial, then keep re-reducing and installing
  // whatever retirement displaced. false on reaching the constant 1.
  bool settle(Polynomial reduced) {
    std::vector<Polynomial> displaced;
    Polynomial h = std::move(reduced);
    for (;;) {
      if (h.is_one()) return false;
      if (!h.is_zero()) place(std::move(h), displaced);
      if (displaced.empty()) return true;
      h = reduce(std::move(displaced.back()));
      displaced.pop_back();
    }
  }

  void place(Polynomial p, std::vector<Polynomial>& displaced) {
    int idx = static_cast<int>(elems_.size());
    Mask plt = p.leading().mask;
    elems_.push_back(std::move(p));
    lt_.push_back(plt);
    alive_.push_back(1);
    ++stats_.elements_inserted;

    if (opts_.retire_redundant) {
      // p is fully reduced, so divisibility of an older leading term is strict
      for (auto it = alive_list_.begin(); it != alive_list_.end();) {
        int k = *it;
        if ((plt & ~lt_[static_cast<std::size_t>(k)]) == 0) {
          alive_[static_cast<std::size_t>(k)] = 0;
          ++stats_.elements_retired;
          displaced.push_back(std::move(elems_[static_cast<std::size_t>(k)]));
          it = alive_list_.erase(it);
        } else {
          ++it;
        }
      }
    }

    for (int k : alive_list_) {
      Mask l = lt_[static_cast<std::size_t>(k)] | plt;
      queue_.push({std::popcount(l), l, seq_++, k, idx, -1});
      ++stats_.pairs_created;
    }
    for (int b = max_variables - 1; b >= 0; --b) {
      if ((plt >> b) & 1) {
        queue_.push({std::popcount(plt) + 1, plt, seq_++, idx, -1, b});
        ++stats_.pairs_created;
      }
    }
    alive_list_.push_back(idx);
  }

  BuchbergerOptions opts_;
  BuchbergerStats& stats_;
  std::vector<Polynomial> elems_;
  std::vector<Mask> lt_;
  std::vector<char> alive_;
  std::vector<int> alive_list_;  // alive indices in insertion order
  std::priority_queue<Pair, std::vector<Pair>, PairLater> queue_;
  std::unordered_set<std::uint64_t> done_;
  std::uint64_t seq_ = 0;
};

}  // namespace detail

// Reduced Groebner basis of the ideal spanned by the generators together with
// all field relations xi^2 + xi. Zero generators are ignored; the unit ideal
// yields exactly {1}; no generators yield the empty basis. The reduced basis
// is unique, so the result does not depend on generator order or repetition.
inline GroebnerBasis groebner_basis(std::vector<Polynomial> generators, Ring ring,
                                    BuchbergerOptions opts = {},
                                    BuchbergerStats* stats = nullptr) {
  BuchbergerStats local;
  if (stats) *stats = {};
  BuchbergerStats& st = stats ? *stats : local;
  Mask ring_mask = ring.used_mask();
  detail::GbEngine engine(opts, st);
  bool proper = true;
  for (Polynomial& g : generators) {
    Polynomial cg = make_polynomial(std::move(g.terms));
    for (Monomial t : cg.terms)
      if ((t.mask & ~ring_mask) != 0)
        throw std::invalid_argument("generator uses variables outside the ring");
    if (!engine.add_generator(std::move(cg))) {
      proper = false;
      break;
    }
  }
  if (proper) proper = engine.run();
  if (!proper) return {std::move(ring), {Polynomial::one()}};
  return {std::move(ring), engine.reduced_result()};
}

}  // namespace boolgb
