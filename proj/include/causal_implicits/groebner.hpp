#pragma once

// Buchberger's algorithm over Q with Gebauer-Moeller pair pruning, producing
// reduced (hence canonical) Groebner bases. Public entry points take and
// return ParamId polynomials; the work happens on an indexed representation
// (engine::Poly) whose variable numbering realizes the requested order.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "causal_implicits/errors.hpp"
#include "causal_implicits/polynomial.hpp"
#include "causal_implicits/rational.hpp"

namespace causal_implicits {

struct GroebnerOptions {
  enum class Selection { automatic, normal, sugar };

  std::size_t max_pairs = 200000;
  unsigned max_degree = 40;
  /// Number of S-pairs reduced concurrently. Results are committed in pair
  /// order, and the final reduced basis does not depend on this value.
  unsigned threads = 1;
  /// Wall-clock limit in seconds; 0 disables it.
  double max_seconds = 0;
  /// automatic: normal strategy for degree-compatible orders, sugar otherwise.
  Selection selection = Selection::automatic;
};

/// Counters from the last run, for diagnostics.
struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_pruned = 0;
  std::size_t basis_size = 0;
};

namespace engine {

constexpr unsigned kExpBits = 12;
constexpr std::uint32_t kExpMask = (1u << kExpBits) - 1;

inline std::uint32_t var_of(std::uint32_t x) noexcept { return x >> kExpBits; }
inline std::uint32_t exp_of(std::uint32_t x) noexcept { return x & kExpMask; }
inline std::uint32_t pack(std::uint32_t var, std::uint32_t e) noexcept {
  return (var << kExpBits) | e;
}

/// Sparse monomial: packed (variable, exponent) entries, increasing variable
/// index. Index 0 is the most significant variable.
struct Mono {
  std::vector<std::uint32_t> f;
  std::uint32_t deg = 0;
  std::uint64_t mask = 0;

  bool operator==(const Mono& o) const { return f == o.f; }
};

inline void finish(Mono& m) {
  m.deg = 0;
  m.mask = 0;
  for (auto x : m.f) {
    m.deg += exp_of(x);
    m.mask |= std::uint64_t{1} << (var_of(x) & 63);
  }
}

inline Mono mul(const Mono& a, const Mono& b) {
  Mono m;
  m.f.reserve(a.f.size() + b.f.size());
  std::size_t i = 0, j = 0;
  while (i < a.f.size() || j < b.f.size()) {
    if (j == b.f.size() || (i < a.f.size() && var_of(a.f[i]) < var_of(b.f[j]))) {
      m.f.push_back(a.f[i++]);
    } else if (i == a.f.size() || var_of(b.f[j]) < var_of(a.f[i])) {
      m.f.push_back(b.f[j++]);
    } else {
      std::uint32_t e = exp_of(a.f[i]) + exp_of(b.f[j]);
      if (e > kExpMask) throw IntractableError(IntractableError::Reason::max_degree,
                                               "exponent overflow in monomial product");
      m.f.push_back(pack(var_of(a.f[i]), e));
      ++i;
      ++j;
    }
  }
  m.deg = a.deg + b.deg;
  m.mask = a.mask | b.mask;
  return m;
}

/// a | b
inline bool divides(const Mono& a, const Mono& b) {
  if ((a.mask & ~b.mask) != 0 || a.deg > b.deg) return false;
  std::size_t j = 0;
  for (auto x : a.f) {
    while (j < b.f.size() && var_of(b.f[j]) < var_of(x)) ++j;
    if (j == b.f.size() || var_of(b.f[j]) != var_of(x) || exp_of(b.f[j]) < exp_of(x))
      return false;
    ++j;
  }
  return true;
}

/// b / a, assuming a | b.
inline Mono quotient(const Mono& b, const Mono& a) {
  Mono m;
  m.f.reserve(b.f.size());
  std::size_t i = 0;
  for (auto y : b.f) {
    std::uint32_t e = exp_of(y);
    if (i < a.f.size() && var_of(a.f[i]) == var_of(y)) e -= exp_of(a.f[i++]);
    if (e) m.f.push_back(pack(var_of(y), e));
  }
  finish(m);
  return m;
}

inline Mono lcm(const Mono& a, const Mono& b) {
  Mono m;
  m.f.reserve(a.f.size() + b.f.size());
  std::size_t i = 0, j = 0;
  while (i < a.f.size() || j < b.f.size()) {
    if (j == b.f.size() || (i < a.f.size() && var_of(a.f[i]) < var_of(b.f[j]))) {
      m.f.push_back(a.f[i++]);
    } else if (i == a.f.size() || var_of(b.f[j]) < var_of(a.f[i])) {
      m.f.push_back(b.f[j++]);
    } else {
      m.f.push_back(pack(var_of(a.f[i]), std::max(exp_of(a.f[i]), exp_of(b.f[j]))));
      ++i;
      ++j;
    }
  }
  finish(m);
  return m;
}

inline bool coprime(const Mono& a, const Mono& b) {
  if ((a.mask & b.mask) == 0) return true;
  std::size_t i = 0, j = 0;
  while (i < a.f.size() && j < b.f.size()) {
    auto va = var_of(a.f[i]), vb = var_of(b.f[j]);
    if (va == vb) return false;
    if (va < vb)
      ++i;
    else
      ++j;
  }
  return true;
}

struct Order {
  enum class Kind : std::uint8_t { lex, grevlex, block };

  Kind kind = Kind::grevlex;
  Kind inner = Kind::grevlex;
  Kind outer = Kind::grevlex;
  /// Block only: variables with index < split form the first block.
  std::uint32_t split = 0;

  bool degree_compatible() const noexcept {
    return kind == Kind::grevlex || (kind == Kind::block && split == 0 && outer == Kind::grevlex);
  }

  /// >0 if a > b.
  int cmp(const Mono& a, const Mono& b) const {
    switch (kind) {
      case Kind::lex:
        return lex(a.f.data(), a.f.size(), b.f.data(), b.f.size());
      case Kind::grevlex:
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        return revlex(a.f.data(), a.f.size(), b.f.data(), b.f.size());
      case Kind::block: {
        std::size_t ka = prefix(a), kb = prefix(b);
        if (int c = part(inner, a.f.data(), ka, b.f.data(), kb)) return c;
        return part(outer, a.f.data() + ka, a.f.size() - ka, b.f.data() + kb, b.f.size() - kb);
      }
    }
    return 0;
  }

 private:
  std::size_t prefix(const Mono& m) const {
    std::size_t k = 0;
    while (k < m.f.size() && var_of(m.f[k]) < split) ++k;
    return k;
  }
  static int part(Kind k, const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                  std::size_t nb) {
    if (k == Kind::lex) return lex(a, na, b, nb);
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = 0; i < na; ++i) da += exp_of(a[i]);
    for (std::size_t i = 0; i < nb; ++i) db += exp_of(b[i]);
    if (da != db) return da > db ? 1 : -1;
    return revlex(a, na, b, nb);
  }
  static int lex(const std::uint32_t* a, std::size_t na, const std::uint32_t* b, std::size_t nb) {
    std::size_t i = 0;
    for (; i < na && i < nb; ++i) {
      if (a[i] == b[i]) continue;
      auto va = var_of(a[i]), vb = var_of(b[i]);
      if (va != vb) return va < vb ? 1 : -1;
      return exp_of(a[i]) > exp_of(b[i]) ? 1 : -1;
    }
    if (i < na) return 1;
    if (i < nb) return -1;
    return 0;
  }
  /// Tie-break of grevlex for equal degrees: the monomial with the smaller
  /// exponent in the least significant differing variable is larger.
  static int revlex(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                    std::size_t nb) {
    while (na > 0 && nb > 0) {
      auto x = a[na - 1], y = b[nb - 1];
      if (x == y) {
        --na;
        --nb;
        continue;
      }
      auto vx = var_of(x), vy = var_of(y);
      if (vx == vy) return exp_of(x) < exp_of(y) ? 1 : -1;
      return vx > vy ? -1 : 1;
    }
    if (na > 0) return -1;
    if (nb > 0) return 1;
    return 0;
  }
};

struct Term {
  Mono m;
  Rational c;
};

/// Terms in increasing order; the leading term is back().
using Poly = std::vector<Term>;

inline std::uint32_t degree(const Poly& p) {
  std::uint32_t d = 0;
  for (const auto& t : p) d = std::max(d, t.m.deg);
  return d;
}

inline void make_monic(Poly& p) {
  if (p.empty() || p.back().c == 1) return;
  Rational inv = 1 / p.back().c;
  for (auto& t : p) t.c *= inv;
}

/// f[0 .. fend) - c * m * g[0 .. gend), both ascending.
inline Poly sub_mul(const Order& ord, const Poly& f, std::size_t fend, const Rational& c,
                    const Mono& m, const Poly& g, std::size_t gend) {
  Poly out;
  out.reserve(fend + gend);
  std::size_t i = 0, j = 0;
  std::optional<Term> pending;
  auto next_g = [&]() {
    Term t{mul(m, g[j].m), Rational(-c * g[j].c)};
    ++j;
    return t;
  };
  Term gt;
  bool have_g = false;
  while (i < fend || j < gend || have_g) {
    if (!have_g && j < gend) {
      gt = next_g();
      have_g = true;
    }
    if (!have_g) {
      out.push_back(f[i++]);
      continue;
    }
    if (i == fend) {
      out.push_back(std::move(gt));
      have_g = false;
      continue;
    }
    int cmpv = ord.cmp(f[i].m, gt.m);
    if (cmpv < 0) {
      out.push_back(f[i++]);
    } else if (cmpv > 0) {
      out.push_back(std::move(gt));
      have_g = false;
    } else {
      Rational s = f[i].c + gt.c;
      if (s != 0) out.push_back({f[i].m, std::move(s)});
      ++i;
      have_g = false;
    }
  }
  return out;
}

/// Reducer lookup over a list of monic polynomials.
class ReducerSet {
 public:
  ReducerSet() = default;
  explicit ReducerSet(std::vector<const Poly*> polys) : polys_(std::move(polys)) {}
  void add(const Poly* p) { polys_.push_back(p); }
  const std::vector<const Poly*>& polys() const noexcept { return polys_; }

  const Poly* find(const Mono& m) const {
    for (const Poly* p : polys_)
      if (divides(p->back().m, m)) return p;
    return nullptr;
  }

 private:
  std::vector<const Poly*> polys_;
};

/// Full reduction of f (every term irreducible), using the first reducer in
/// list order whose leading monomial divides. Reducers must be monic.
inline Poly reduce(const Order& ord, Poly f, const ReducerSet& reducers,
                   const std::chrono::steady_clock::time_point* deadline = nullptr) {
  Poly rem;  // collected in decreasing order
  std::size_t steps = 0;
  while (!f.empty()) {
    const Term& lt = f.back();
    const Poly* r = reducers.find(lt.m);
    if (!r) {
      rem.push_back(std::move(f.back()));
      f.pop_back();
      continue;
    }
    Mono q = quotient(lt.m, r->back().m);
    Rational c = lt.c;
    f = sub_mul(ord, f, f.size() - 1, c, q, *r, r->size() - 1);
    if (deadline && (++steps & 255) == 0 && std::chrono::steady_clock::now() > *deadline)
      throw IntractableError(IntractableError::Reason::max_seconds,
                             "Groebner basis computation exceeded its time budget");
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

inline Poly spoly(const Order& ord, const Poly& f, const Poly& g, const Mono& l) {
  // Both monic: (l/LT f) f - (l/LT g) g, leading terms cancel.
  Mono qf = quotient(l, f.back().m);
  Mono qg = quotient(l, g.back().m);
  Poly a;
  a.reserve(f.size());
  for (std::size_t k = 0; k + 1 < f.size(); ++k) a.push_back({mul(qf, f[k].m), f[k].c});
  return sub_mul(ord, a, a.size(), Rational(1), qg, g, g.size() - 1);
}

/// Sort key for basis output: ascending leading monomial.
inline void sort_basis(const Order& ord, std::vector<Poly>& basis) {
  std::sort(basis.begin(), basis.end(), [&ord](const Poly& a, const Poly& b) {
    int c = ord.cmp(a.back().m, b.back().m);
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });
}

/// Interreduces a set whose leading monomials are pairwise non-divisible.
inline std::vector<Poly> interreduce(const Order& ord, std::vector<Poly> g) {
  sort_basis(ord, g);
  std::vector<Poly> out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<const Poly*> others;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) others.push_back(&g[j]);
    ReducerSet rs(std::move(others));
    Poly tail(g[i].begin(), g[i].end() - 1);
    Poly red = reduce(ord, std::move(tail), rs);
    red.push_back(g[i].back());
    make_monic(red);
    out.push_back(std::move(red));
  }
  return out;
}

class Buchberger {
 public:
  Buchberger(Order order, GroebnerOptions options) : ord_(order), opt_(options) {
    use_sugar_ = opt_.selection == GroebnerOptions::Selection::sugar ||
                 (opt_.selection == GroebnerOptions::Selection::automatic &&
                  !ord_.degree_compatible());
    if (opt_.threads == 0) opt_.threads = 1;
  }

  std::vector<Poly> run(std::vector<Poly> input) {
    start_ = std::chrono::steady_clock::now();
    if (opt_.max_seconds > 0)
      deadline_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(opt_.max_seconds));
    for (auto& p : input) {
      if (p.empty()) continue;
      make_monic(p);
    }
    input.erase(std::remove_if(input.begin(), input.end(), [](const Poly& p) { return p.empty(); }),
                input.end());
    sort_basis(ord_, input);
    for (auto& p : input) {
      check_degree(p);
      Poly h = reduce(ord_, std::move(p), active_reducers(), deadline_ptr());
      if (h.empty()) continue;
      if (insert(std::move(h))) return unit();
    }
    while (true) {
      std::vector<std::uint32_t> batch;
      while (batch.size() < opt_.threads && !queue_.empty()) {
        std::uint32_t k = queue_.top();
        queue_.pop();
        if (pairs_[k].alive) batch.push_back(k);
      }
      if (batch.empty()) break;
      if (stats_.pairs_reduced + batch.size() > opt_.max_pairs)
        throw IntractableError(IntractableError::Reason::max_pairs,
                               "Groebner basis computation exceeded " +
                                   std::to_string(opt_.max_pairs) + " S-pairs");
      stats_.pairs_reduced += batch.size();
      std::vector<Poly> results = reduce_batch(batch);
      for (auto& h : results) {
        if (batch.size() > 1 && !h.empty()) h = reduce(ord_, std::move(h), active_reducers());
        if (h.empty()) {
          ++stats_.zero_reductions;
          continue;
        }
        if (insert(std::move(h))) return unit();
      }
    }
    std::vector<Poly> g;
    for (auto k : active_) g.push_back(store_[k].p);
    std::vector<Poly> out = interreduce(ord_, std::move(g));
    stats_.basis_size = out.size();
    return out;
  }

  const GroebnerStats& stats() const noexcept { return stats_; }

 private:
  struct Entry {
    Poly p;
    std::uint32_t sugar = 0;
  };
  struct Pair {
    std::uint32_t i = 0, j = 0;
    Mono lcm;
    std::uint32_t sugar = 0;
    bool alive = true;
  };
  struct PairLess {
    const Buchberger* self;
    // priority_queue pops the greatest; "greater" here means selected later.
    bool operator()(std::uint32_t x, std::uint32_t y) const {
      const Pair& a = self->pairs_[x];
      const Pair& b = self->pairs_[y];
      if (self->use_sugar_ && a.sugar != b.sugar) return a.sugar > b.sugar;
      int c = self->ord_.cmp(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      if (a.sugar != b.sugar) return a.sugar > b.sugar;
      return x > y;
    }
  };

  const std::chrono::steady_clock::time_point* deadline_ptr() const {
    return deadline_ ? &*deadline_ : nullptr;
  }

  std::vector<Poly> unit() {
    Poly one;
    one.push_back({Mono{}, Rational(1)});
    stats_.basis_size = 1;
    return {one};
  }

  void check_degree(const Poly& p) const {
    if (degree(p) > opt_.max_degree)
      throw IntractableError(IntractableError::Reason::max_degree,
                             "Groebner basis element exceeds degree " +
                                 std::to_string(opt_.max_degree));
  }

  ReducerSet active_reducers() const {
    std::vector<const Poly*> ps;
    ps.reserve(active_.size());
    for (auto k : active_) ps.push_back(&store_[k].p);
    return ReducerSet(std::move(ps));
  }

  std::vector<Poly> reduce_batch(const std::vector<std::uint32_t>& batch) {
    std::vector<Poly> results(batch.size());
    ReducerSet rs = active_reducers();
    auto work = [&](std::size_t k) {
      const Pair& pr = pairs_[batch[k]];
      Poly s = spoly(ord_, store_[pr.i].p, store_[pr.j].p, pr.lcm);
      results[k] = reduce(ord_, std::move(s), rs, deadline_ptr());
    };
    if (batch.size() == 1) {
      work(0);
      return results;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(batch.size());
    for (std::size_t k = 0; k < batch.size(); ++k)
      pool.emplace_back([&, k] {
        try {
          work(k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    return results;
  }

  /// Adds h (reduced, nonzero) and updates pairs. Returns true if h is a
  /// nonzero constant.
  bool insert(Poly h) {
    make_monic(h);
    if (h.size() == 1 && h.back().m.f.empty()) return true;
    check_degree(h);
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw IntractableError(IntractableError::Reason::max_seconds,
                             "Groebner basis computation exceeded its time budget");
    std::uint32_t hk = static_cast<std::uint32_t>(store_.size());
    std::uint32_t sugar = degree(h);
    store_.push_back({std::move(h), sugar});
    const Mono& lth = store_[hk].p.back().m;

    // Gebauer-Moeller: candidate pairs (g, h).
    struct Cand {
      std::uint32_t g;
      Mono lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    cands.reserve(active_.size());
    for (auto g : active_) {
      const Mono& ltg = store_[g].p.back().m;
      cands.push_back({g, lcm(ltg, lth), coprime(ltg, lth)});
    }
    // Criterion M: drop (g1,h) when some other (g2,h) has lcm dividing it
    // (among equal lcms keep the last one examined).
    std::vector<bool> in_d(cands.size(), false);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      if (!cands[a].coprime) {
        for (std::size_t b = 0; b < cands.size() && !drop; ++b) {
          if (b == a) continue;
          bool later_or_kept = b > a || in_d[b];
          if (later_or_kept && divides(cands[b].lcm, cands[a].lcm)) drop = true;
        }
      }
      if (!drop) in_d[a] = true;
    }
    // Criterion B on existing pairs.
    for (auto& p : pairs_) {
      if (!p.alive) continue;
      if (!divides(lth, p.lcm)) continue;
      Mono l1 = lcm(store_[p.i].p.back().m, lth);
      Mono l2 = lcm(store_[p.j].p.back().m, lth);
      if (!(l1 == p.lcm) && !(l2 == p.lcm)) {
        p.alive = false;
        ++stats_.pairs_pruned;
      }
    }
    // Product criterion on the survivors, then enqueue.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!in_d[a]) {
        ++stats_.pairs_pruned;
        continue;
      }
      if (cands[a].coprime) {
        ++stats_.pairs_pruned;
        continue;
      }
      const Entry& eg = store_[cands[a].g];
      const Entry& eh = store_[hk];
      std::uint32_t s = std::max(eg.sugar - eg.p.back().m.deg, eh.sugar - eh.p.back().m.deg) +
                        cands[a].lcm.deg;
      pairs_.push_back({cands[a].g, hk, std::move(cands[a].lcm), s, true});
      queue_.push(static_cast<std::uint32_t>(pairs_.size() - 1));
    }
    // Drop reducers made redundant by h.
    active_.erase(std::remove_if(active_.begin(), active_.end(),
                                 [&](std::uint32_t g) { return divides(lth, store_[g].p.back().m); }),
                  active_.end());
    active_.push_back(hk);
    return false;
  }

  Order ord_;
  GroebnerOptions opt_;
  bool use_sugar_ = false;
  std::vector<Entry> store_;
  std::vector<std::uint32_t> active_;
  std::vector<Pair> pairs_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, PairLess> queue_{PairLess{this}};
  GroebnerStats stats_;
  std::chrono::steady_clock::time_point start_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Maps ParamIds to engine indices so that the requested MonomialOrder
/// becomes an engine::Order.
class Ring {
 public:
  Ring(const std::vector<const Polynomial*>& polys, const MonomialOrder& order) {
    std::set<ParamId> all;
    for (const Polynomial* p : polys)
      for (const auto& t : p->terms())
        for (const auto& f : t.mono.factors()) all.insert(f.first);
    using K = MonomialOrder::Kind;
    auto kind = [](K k) {
      return k == K::lex ? Order::Kind::lex : Order::Kind::grevlex;
    };
    if (order.kind == K::block) {
      for (const auto& v : all)
        if (order.eliminate.count(v)) vars_.push_back(v);
      ord_.split = static_cast<std::uint32_t>(vars_.size());
      for (const auto& v : all)
        if (!order.eliminate.count(v)) vars_.push_back(v);
      ord_.kind = Order::Kind::block;
      ord_.inner = kind(order.inner);
      ord_.outer = kind(order.outer);
    } else {
      vars_.assign(all.begin(), all.end());
      ord_.kind = kind(order.kind);
    }
    if (vars_.size() >= (1u << (32 - kExpBits)))
      throw IntractableError(IntractableError::Reason::max_pairs, "too many ring variables");
    for (std::uint32_t i = 0; i < vars_.size(); ++i) index_.emplace(vars_[i], i);
  }

  const Order& order() const noexcept { return ord_; }
  const std::vector<ParamId>& variables() const noexcept { return vars_; }
  std::uint32_t index(const ParamId& p) const { return index_.at(p); }

  Poly to_engine(const Polynomial& p) const {
    Poly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Mono m;
      for (const auto& [v, e] : t.mono.factors()) {
        if (e > kExpMask)
          throw IntractableError(IntractableError::Reason::max_degree, "exponent too large");
        m.f.push_back(pack(index(v), e));
      }
      std::sort(m.f.begin(), m.f.end());
      finish(m);
      out.push_back({std::move(m), t.coef});
    }
    std::sort(out.begin(), out.end(),
              [this](const Term& a, const Term& b) { return ord_.cmp(a.m, b.m) < 0; });
    return out;
  }

  Polynomial from_engine(const Poly& p) const {
    std::vector<causal_implicits::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) {
      std::vector<Monomial::Factor> f;
      for (auto x : t.m.f) f.emplace_back(vars_[var_of(x)], exp_of(x));
      terms.push_back({t.c, Monomial::from_factors(std::move(f))});
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  std::vector<ParamId> vars_;
  std::map<ParamId, std::uint32_t> index_;
  Order ord_;
};

}  // namespace engine

// ---------------------------------------------------------------------------
// Public operations on ParamId polynomials

/// Remainder of f on division by `basis` (full reduction, first divisor in
/// list order). Basis elements are used as given; they need not be monic.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const MonomialOrder& order) {
  std::vector<const Polynomial*> all{&f};
  for (const auto& b : basis) {
    if (b.is_zero()) throw PreconditionError("normal_form: zero polynomial in basis");
    all.push_back(&b);
  }
  engine::Ring ring(all, order);
  std::vector<engine::Poly> g;
  g.reserve(basis.size());
  for (const auto& b : basis) {
    g.push_back(ring.to_engine(b));
    engine::make_monic(g.back());
  }
  std::vector<const engine::Poly*> ptrs;
  for (const auto& p : g) ptrs.push_back(&p);
  return ring.from_engine(
      engine::reduce(ring.order(), ring.to_engine(f), engine::ReducerSet(std::move(ptrs))));
}

/// Reduced Groebner basis of the ideal generated by `generators`, sorted by
/// increasing leading monomial, every element monic.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                              const MonomialOrder& order,
                                              const GroebnerOptions& options = {},
                                              GroebnerStats* stats = nullptr) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& p : generators) ptrs.push_back(&p);
  engine::Ring ring(ptrs, order);
  std::vector<engine::Poly> in;
  in.reserve(generators.size());
  for (const auto& p : generators) in.push_back(ring.to_engine(p));
  engine::Buchberger bb(ring.order(), options);
  std::vector<engine::Poly> out = bb.run(std::move(in));
  if (stats) *stats = bb.stats();
  std::vector<Polynomial> result;
  result.reserve(out.size());
  for (const auto& p : out) result.push_back(ring.from_engine(p));
  return result;
}

/// S-polynomial of f and g (made monic first) under `order`.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
  engine::Ring ring({&f, &g}, order);
  engine::Poly a = ring.to_engine(f), b = ring.to_engine(g);
  engine::make_monic(a);
  engine::make_monic(b);
  engine::Mono l = engine::lcm(a.back().m, b.back().m);
  return ring.from_engine(engine::spoly(ring.order(), a, b, l));
}

/// Leading monomial under `order` (the zero polynomial has none).
inline Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw PreconditionError("leading_monomial of zero");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms())
    if (compare(order, t.mono, *best) > 0) best = &t.mono;
  return *best;
}

/// Buchberger certificate: every S-polynomial of `basis` reduces to zero.
inline bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero())
        return false;
  return true;
}

/// Reduced: monic, no leading monomial divides another, and no term of any
/// element is divisible by another element's leading monomial.
inline bool is_reduced_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& p : basis) ptrs.push_back(&p);
  engine::Ring ring(ptrs, order);
  std::vector<engine::Poly> g;
  for (const auto& p : basis) {
    g.push_back(ring.to_engine(p));
    if (g.back().empty() || g.back().back().c != 1) return false;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i])
        if (engine::divides(g[j].back().m, t.m)) return false;
    }
  return true;
}

}  // namespace causal_implicits
