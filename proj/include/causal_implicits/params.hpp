#pragma once

// Polynomial-ring variables: joint-space parameters p^t_v, model parameters
// q^i_{v_i,pa_i,u^i} and r^j_{u_j}, and auxiliary variables introduced by
// saturation. The total order on ParamId is the variable order used by every
// monomial order: smaller ParamId = more significant variable, so
// Aux > ModelQ > ModelR > JointSpace.

#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "causal_implicits/errors.hpp"
#include "causal_implicits/model.hpp"

namespace causal_implicits {

struct AuxId {
  std::string tag;
  auto operator<=>(const AuxId&) const = default;
  bool operator==(const AuxId&) const = default;
};

/// q^i_{v_i, pa_i, u^i}
struct ModelQId {
  std::string var;
  int value = 1;
  Assignment pa;
  HiddenAssignment u;
  auto operator<=>(const ModelQId&) const = default;
  bool operator==(const ModelQId&) const = default;
};

/// r^j_{u_j}
struct ModelRId {
  std::string var;
  int value = 1;
  auto operator<=>(const ModelRId&) const = default;
  bool operator==(const ModelRId&) const = default;
};

/// p^t_v. Only the free part v\t is stored next to t; the full v is
/// recovered with full_assignment().
struct JointSpaceId {
  Assignment t;
  Assignment free;
  auto operator<=>(const JointSpaceId&) const = default;
  bool operator==(const JointSpaceId&) const = default;
};

class ParamId {
 public:
  enum class Kind { aux = 0, model_q = 1, model_r = 2, joint = 3 };
  using Storage = std::variant<AuxId, ModelQId, ModelRId, JointSpaceId>;

  ParamId() : data_(AuxId{}) {}
  ParamId(AuxId a) : data_(std::move(a)) {}
  ParamId(ModelQId q) : data_(std::move(q)) {}
  ParamId(ModelRId r) : data_(std::move(r)) {}
  ParamId(JointSpaceId p) : data_(std::move(p)) {}

  static ParamId aux(std::string tag) { return ParamId(AuxId{std::move(tag)}); }
  static ParamId joint(Assignment t, Assignment free) {
    return ParamId(JointSpaceId{std::move(t), std::move(free)});
  }

  Kind kind() const noexcept { return static_cast<Kind>(data_.index()); }
  bool is_joint() const noexcept { return kind() == Kind::joint; }
  bool is_model() const noexcept {
    return kind() == Kind::model_q || kind() == Kind::model_r;
  }
  bool is_aux() const noexcept { return kind() == Kind::aux; }

  const JointSpaceId& as_joint() const { return std::get<JointSpaceId>(data_); }
  const ModelQId& as_q() const { return std::get<ModelQId>(data_); }
  const ModelRId& as_r() const { return std::get<ModelRId>(data_); }
  const AuxId& as_aux() const { return std::get<AuxId>(data_); }
  const Storage& storage() const noexcept { return data_; }

  /// p[V2=1|V1=2,V3=1], q[V1=1|V3=2;U1=1], r[U1=2], aux[sat]
  std::string to_string() const {
    switch (kind()) {
      case Kind::joint: {
        const auto& p = as_joint();
        return "p[" + p.t.to_string() + "|" + p.free.to_string() + "]";
      }
      case Kind::model_q: {
        const auto& q = as_q();
        std::string s = "q[" + q.var + "=" + std::to_string(q.value) + "|" + q.pa.to_string();
        if (!q.u.empty()) s += ";" + q.u.to_string();
        return s + "]";
      }
      case Kind::model_r: {
        const auto& r = as_r();
        return "r[" + r.var + "=" + std::to_string(r.value) + "]";
      }
      case Kind::aux:
        return "aux[" + as_aux().tag + "]";
    }
    return {};
  }

  auto operator<=>(const ParamId&) const = default;
  bool operator==(const ParamId&) const = default;

 private:
  Storage data_;
};

/// p^t_v for a total observed assignment `v` consistent with `t`.
inline ParamId joint_param(const Assignment& t, const Assignment& v) {
  if (!t.agrees_with(v))
    throw PreconditionError("assignment " + v.to_string() + " inconsistent with " + t.to_string());
  return ParamId::joint(t, v.without(t.names()));
}

inline Assignment full_assignment(const CausalGraph& g, const JointSpaceId& p) {
  return merge(g, p.t, p.free);
}

/// One interventional distribution P_t(v); the empty t is the observational
/// distribution.
struct DistributionRequest {
  Assignment t;

  NameList intervened() const { return t.names(); }
  std::string to_string() const { return t.to_string(); }
  auto operator<=>(const DistributionRequest&) const = default;
  bool operator==(const DistributionRequest&) const = default;
};

// ---------------------------------------------------------------------------
// Parsing of the text rendering. Graph-free: names are taken as written.

namespace detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view s, std::size_t pos = 0) : s_(s), pos_(pos) {}

  std::size_t pos() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ >= s_.size(); }
  char peek() const noexcept { return done() ? '\0' : s_[pos_]; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    std::size_t start = pos_;
    if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected identifier");
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  long integer() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  std::string_view rest() const { return s_.substr(pos_); }
  std::string_view slice(std::size_t from, std::size_t to) const {
    return s_.substr(from, to - from);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at column " + std::to_string(pos_ + 1) + " in '" +
                     std::string(s_) + "': " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_;
};

/// NAME=VAL{,NAME=VAL}, possibly empty (stops at any of `stops`).
inline Assignment parse_entries(TextCursor& c, std::string_view stops) {
  std::vector<Assignment::Entry> e;
  if (stops.find(c.peek()) != std::string_view::npos) return Assignment{};
  while (true) {
    std::string name = c.identifier();
    c.expect('=');
    e.emplace_back(std::move(name), static_cast<int>(c.integer()));
    if (!c.accept(',')) break;
  }
  return Assignment(std::move(e));
}

inline ParamId parse_param(TextCursor& c) {
  std::string head = c.identifier();
  c.expect('[');
  ParamId out;
  if (head == "p") {
    Assignment t = parse_entries(c, "|");
    c.expect('|');
    Assignment free = parse_entries(c, "]");
    out = ParamId::joint(std::move(t), std::move(free));
  } else if (head == "q") {
    ModelQId q;
    q.var = c.identifier();
    c.expect('=');
    q.value = static_cast<int>(c.integer());
    c.expect('|');
    q.pa = parse_entries(c, ";]");
    if (c.accept(';')) q.u = parse_entries(c, "]");
    out = ParamId(std::move(q));
  } else if (head == "r") {
    ModelRId r;
    r.var = c.identifier();
    c.expect('=');
    r.value = static_cast<int>(c.integer());
    out = ParamId(std::move(r));
  } else if (head == "aux") {
    std::size_t start = c.pos();
    while (!c.done() && c.peek() != ']') c.accept(c.peek());
    out = ParamId::aux(std::string(c.slice(start, c.pos())));
  } else {
    c.fail("unknown parameter kind '" + head + "'");
  }
  c.expect(']');
  return out;
}

}  // namespace detail

inline ParamId parse_param(std::string_view text) {
  detail::TextCursor c(text);
  c.skip_space();
  ParamId p = detail::parse_param(c);
  c.skip_space();
  if (!c.done()) c.fail("trailing characters");
  return p;
}

/// "V1=1,V2=2" (or "" for the observational request) against graph `g`.
inline DistributionRequest parse_request(const CausalGraph& g, std::string_view spec) {
  detail::TextCursor c(spec);
  c.skip_space();
  std::vector<Assignment::Entry> e;
  if (!c.done()) {
    while (true) {
      c.skip_space();
      std::string name = c.identifier();
      c.skip_space();
      c.expect('=');
      c.skip_space();
      e.emplace_back(std::move(name), static_cast<int>(c.integer()));
      c.skip_space();
      if (!c.accept(',')) break;
    }
    if (!c.done()) c.fail("trailing characters");
  }
  return DistributionRequest{g.make_assignment(std::move(e))};
}

/// Sorted, deduplicated, validated (T must be a proper subset of V).
inline std::vector<DistributionRequest> normalize_requests(
    const CausalGraph& g, std::vector<DistributionRequest> requests) {
  const std::size_t n = g.observed().size();
  for (auto& r : requests) {
    std::vector<Assignment::Entry> e = r.t.entries();
    r.t = g.make_assignment(std::move(e));
    if (r.t.size() >= n)
      throw PreconditionError("request " + r.to_string() + " intervenes on every observed variable");
  }
  std::sort(requests.begin(), requests.end());
  requests.erase(std::unique(requests.begin(), requests.end()), requests.end());
  return requests;
}

/// Every interventional distribution over a proper subset T ⊂ V (P_*).
inline std::vector<DistributionRequest> all_interventions(const CausalGraph& g) {
  NameList obs = g.observed();
  const std::size_t n = obs.size();
  std::vector<DistributionRequest> out;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
    NameList t;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) t.push_back(obs[k]);
    for (auto& a : all_assignments(g, t)) out.push_back({std::move(a)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every request with intervened set exactly `t_vars`.
inline std::vector<DistributionRequest> family(const CausalGraph& g, const NameList& t_vars) {
  std::vector<DistributionRequest> out;
  for (auto& a : all_assignments(g, t_vars)) out.push_back({std::move(a)});
  return out;
}

}  // namespace causal_implicits
