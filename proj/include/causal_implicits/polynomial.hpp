#pragma once

// Sparse multivariate polynomials over ParamId with exact rational
// coefficients. Terms are stored largest first under Lex on the canonical
// ParamId order; the Groebner engine converts to an indexed representation
// for any other monomial order.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "causal_implicits/params.hpp"
#include "causal_implicits/rational.hpp"

namespace causal_implicits {

class Monomial {
 public:
  using Factor = std::pair<ParamId, unsigned>;

  Monomial() = default;
  explicit Monomial(ParamId p, unsigned exponent = 1) {
    if (exponent > 0) factors_.emplace_back(std::move(p), exponent);
  }
  /// Sorts factors, merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& f : factors) {
      if (f.second == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == f.first)
        m.factors_.back().second += f.second;
      else
        m.factors_.push_back(std::move(f));
    }
    return m;
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }
  unsigned exponent(const ParamId& p) const {
    for (const auto& f : factors_)
      if (f.first == p) return f.second;
    return 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
      if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
        m.factors_.push_back(*a++);
      } else if (a == factors_.end() || b->first < a->first) {
        m.factors_.push_back(*b++);
      } else {
        m.factors_.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    return m;
  }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += '*';
      s += factors_[i].first.to_string();
      if (factors_[i].second != 1) s += "^" + std::to_string(factors_[i].second);
    }
    return s;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Lex on the canonical variable order: >0 if a > b.
inline int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first ? 1 : -1;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second ? 1 : -1;
  }
  if (i < fa.size()) return 1;
  if (i < fb.size()) return -1;
  return 0;
}

struct Term {
  Rational coef;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) : Polynomial(Monomial{}, c) {}
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(const ParamId& p) { terms_.push_back({Rational(1), Monomial(p)}); }
  Polynomial(const Monomial& m, const Rational& c = 1) {
    Rational k(c);
    k.canonicalize();
    if (k != 0) terms_.push_back({std::move(k), m});
  }

  /// Combines like terms, drops zeros, sorts largest first.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto& t : terms) {
      t.coef.canonicalize();
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coef += t.coef;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  std::size_t size() const noexcept { return terms_.size(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Sorted, distinct.
  std::vector<ParamId> variables() const {
    std::set<ParamId> s;
    for (const auto& t : terms_)
      for (const auto& f : t.mono.factors()) s.insert(f.first);
    return {s.begin(), s.end()};
  }

  bool mentions_any(const std::function<bool(const ParamId&)>& pred) const {
    for (const auto& t : terms_)
      for (const auto& f : t.mono.factors())
        if (pred(f.first)) return true;
    return false;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = add(*this, o, 1); }
  Polynomial& operator-=(const Polynomial& o) { return *this = add(*this, o, -1); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add(a, b, -1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({x.coef * y.coef, x.mono * y.mono});
    return from_terms(std::move(out));
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Rational k(c);
    k.canonicalize();
    if (k == 0) return {};
    Polynomial r = p;
    for (auto& t : r.terms_) t.coef *= k;
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Leading coefficient scaled to one (zero stays zero).
  Polynomial monic() const {
    if (terms_.empty() || terms_[0].coef == 1) return *this;
    Rational inv = 1 / terms_[0].coef;
    return inv * *this;
  }

  /// Canonical text: `p[..]*p[..] - 3/4*p[..]^2 + 1`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      Rational c = t.coef;
      if (i == 0) {
        if (c < 0) {
          s += "-";
          c = -c;
        }
      } else {
        s += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      if (t.mono.is_one()) {
        s += c.get_str();
      } else {
        if (c != 1) s += c.get_str() + "*";
        s += t.mono.to_string();
      }
    }
    return s;
  }

  bool operator==(const Polynomial&) const = default;

 private:
  static Polynomial add(const Polynomial& a, const Polynomial& b, int sign) {
    Polynomial r;
    r.terms_.reserve(a.size() + b.size());
    auto x = a.terms_.begin(), y = b.terms_.begin();
    while (x != a.terms_.end() || y != b.terms_.end()) {
      int c = x == a.terms_.end()   ? -1
              : y == b.terms_.end() ? 1
                                    : lex_compare(x->mono, y->mono);
      if (c > 0) {
        r.terms_.push_back(*x++);
      } else if (c < 0) {
        r.terms_.push_back(*y++);
        if (sign < 0) r.terms_.back().coef = -r.terms_.back().coef;
      } else {
        Rational s = sign > 0 ? Rational(x->coef + y->coef) : Rational(x->coef - y->coef);
        if (s != 0) r.terms_.push_back({s, x->mono});
        ++x;
        ++y;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// Σ of the given variables.
inline Polynomial sum_of(const std::vector<ParamId>& vars) {
  std::vector<Term> t;
  t.reserve(vars.size());
  for (const auto& v : vars) t.push_back({Rational(1), Monomial(v)});
  return Polynomial::from_terms(std::move(t));
}

/// Π of the given variables (repeats become powers).
inline Polynomial product_of(const std::vector<ParamId>& vars) {
  std::vector<Monomial::Factor> f;
  for (const auto& v : vars) f.emplace_back(v, 1);
  return Polynomial(Monomial::from_factors(std::move(f)));
}

/// Parses the canonical text form (and anything close to it: arbitrary
/// spacing, explicit `1*`, repeated factors).
inline Polynomial parse_polynomial(std::string_view text) {
  detail::TextCursor c(text);
  std::vector<Term> terms;
  c.skip_space();
  if (c.done()) throw InputError("empty polynomial");
  bool first = true;
  while (true) {
    c.skip_space();
    if (c.done()) break;
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (c.accept('+'))
      sign = 1;
    else if (!first)
      c.fail("expected '+' or '-'");
    first = false;
    Rational coef(sign);
    std::vector<Monomial::Factor> factors;
    while (true) {
      c.skip_space();
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        std::size_t start = c.pos();
        c.integer();
        if (c.accept('/')) c.integer();
        coef *= parse_rational(c.slice(start, c.pos()));
      } else {
        ParamId p = detail::parse_param(c);
        unsigned e = 1;
        if (c.accept('^')) e = static_cast<unsigned>(c.integer());
        factors.emplace_back(std::move(p), e);
      }
      c.skip_space();
      if (!c.accept('*')) break;
    }
    terms.push_back({coef, Monomial::from_factors(std::move(factors))});
  }
  return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Monomial orders

struct MonomialOrder {
  enum class Kind { lex, grevlex, block };

  Kind kind = Kind::grevlex;
  /// Block only: variables compared first (with `inner`); the remaining
  /// variables break ties (with `outer`). Inner and outer are lex or grevlex.
  std::set<ParamId> eliminate;
  Kind inner = Kind::grevlex;
  Kind outer = Kind::grevlex;

  static MonomialOrder lex() { return {Kind::lex, {}, Kind::grevlex, Kind::grevlex}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, {}, Kind::grevlex, Kind::grevlex}; }
  static MonomialOrder block(std::set<ParamId> eliminate, Kind inner = Kind::grevlex,
                             Kind outer = Kind::grevlex) {
    if (inner == Kind::block || outer == Kind::block)
      throw PreconditionError("block orders nest only lex or grevlex");
    return {Kind::block, std::move(eliminate), inner, outer};
  }

  bool operator==(const MonomialOrder&) const = default;
};

namespace detail {

inline int lex_factors(const std::vector<Monomial::Factor>& a,
                       const std::vector<Monomial::Factor>& b) {
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? 1 : -1;
    if (a[i].second != b[i].second) return a[i].second > b[i].second ? 1 : -1;
  }
  if (i < a.size()) return 1;
  if (i < b.size()) return -1;
  return 0;
}

inline int grevlex_factors(const std::vector<Monomial::Factor>& a,
                           const std::vector<Monomial::Factor>& b) {
  unsigned da = 0, db = 0;
  for (const auto& f : a) da += f.second;
  for (const auto& f : b) db += f.second;
  if (da != db) return da > db ? 1 : -1;
  std::size_t i = a.size(), j = b.size();
  while (i > 0 && j > 0) {
    const auto& x = a[i - 1];
    const auto& y = b[j - 1];
    if (x.first == y.first) {
      if (x.second != y.second) return x.second < y.second ? 1 : -1;
      --i;
      --j;
    } else {
      // The smaller variable appears only in the monomial whose entry sorts later.
      return y.first < x.first ? -1 : 1;
    }
  }
  return 0;
}

inline int compare_kind(MonomialOrder::Kind k, const std::vector<Monomial::Factor>& a,
                        const std::vector<Monomial::Factor>& b) {
  return k == MonomialOrder::Kind::lex ? lex_factors(a, b) : grevlex_factors(a, b);
}

}  // namespace detail

/// >0 if a > b under `order`.
inline int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (order.kind != MonomialOrder::Kind::block)
    return detail::compare_kind(order.kind, a.factors(), b.factors());
  auto split = [&](const Monomial& m) {
    std::pair<std::vector<Monomial::Factor>, std::vector<Monomial::Factor>> parts;
    for (const auto& f : m.factors())
      (order.eliminate.count(f.first) ? parts.first : parts.second).push_back(f);
    return parts;
  };
  auto [ea, ra] = split(a);
  auto [eb, rb] = split(b);
  if (int c = detail::compare_kind(order.inner, ea, eb)) return c;
  return detail::compare_kind(order.outer, ra, rb);
}

}  // namespace causal_implicits
