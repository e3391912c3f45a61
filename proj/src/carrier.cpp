#include "hemi/carrier.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <mutex>

namespace hemi {

namespace {

using Flat = std::vector<Element>;

std::size_t validate_shape(const Table& t, std::string_view which, std::size_t n) {
  if (t.size() != n) {
    throw StructuralError(std::string(which) + " table has " +
                          std::to_string(t.size()) + " rows, expected " +
                          std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) {
      throw StructuralError(std::string(which) + " table row " + std::to_string(i) +
                            " has " + std::to_string(t[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] >= n) {
        throw StructuralError(std::string(which) + " table entry (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ") = " + std::to_string(t[i][j]) + " out of range");
      }
    }
  }
  return n;
}

Flat flatten(const Table& t) {
  Flat out;
  out.reserve(t.size() * t.size());
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

std::string AxiomReport::to_string() const {
  if (passed) return "axioms: PASS";
  std::string out = "axioms: FAIL";
  for (const auto& v : violations) {
    out += "\n  " + v.axiom + " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v.witness[i]);
    }
    out += ')';
  }
  return out;
}

AxiomReport check_axioms(const Table& add, const Table& mul) {
  const std::size_t n = add.size();
  if (n == 0) throw StructuralError("empty carrier");
  validate_shape(add, "add", n);
  validate_shape(mul, "mul", n);

  for (Element x = 0; x < n; ++x) {
    if (add[0][x] != x || add[x][0] != x) {
      throw StructuralError("element 0 is not an additive identity at " +
                            std::to_string(x));
    }
    if (mul[0][x] != 0 || mul[x][0] != 0) {
      throw StructuralError("element 0 is not multiplicatively absorbing at " +
                            std::to_string(x));
    }
  }

  AxiomReport report;
  auto record = [&](std::string axiom, std::vector<Element> w) {
    report.passed = false;
    report.violations.push_back({std::move(axiom), std::move(w)});
  };

  auto first_pair = [&](auto&& pred) -> std::optional<std::vector<Element>> {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (!pred(a, b)) return std::vector<Element>{a, b};
    return std::nullopt;
  };
  auto first_triple = [&](auto&& pred) -> std::optional<std::vector<Element>> {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!pred(a, b, c)) return std::vector<Element>{a, b, c};
    return std::nullopt;
  };

  if (auto w = first_pair([&](Element a, Element b) { return add[a][b] == add[b][a]; }))
    record("add-commutativity", *w);
  if (auto w = first_triple([&](Element a, Element b, Element c) {
        return add[add[a][b]][c] == add[a][add[b][c]];
      }))
    record("add-associativity", *w);
  if (auto w = first_triple([&](Element a, Element b, Element c) {
        return mul[mul[a][b]][c] == mul[a][mul[b][c]];
      }))
    record("mul-associativity", *w);
  if (auto w = first_triple([&](Element a, Element b, Element c) {
        return mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]];
      }))
    record("left-distributivity", *w);
  if (auto w = first_triple([&](Element a, Element b, Element c) {
        return mul[add[a][b]][c] == add[mul[a][c]][mul[b][c]];
      }))
    record("right-distributivity", *w);
  return report;
}

AxiomError::AxiomError(AxiomReport report)
    : Error("not a hemiring: " + report.to_string()), report_(std::move(report)) {}

struct FiniteHemiring::Data {
  std::string name;
  std::size_t order = 0;
  Flat add;
  Flat mul;

  // cancel[(x*n + a)*n + b] = least z with x+a+z = b+z, or -1.
  mutable std::once_flag cancel_once;
  mutable std::vector<std::int32_t> cancel;

  void build_cancel() const {
    const std::size_t n = order;
    cancel.assign(n * n * n, -1);
    for (Element x = 0; x < n; ++x)
      for (Element a = 0; a < n; ++a) {
        const Element xa = add[x * n + a];
        for (Element b = 0; b < n; ++b)
          for (Element z = 0; z < n; ++z)
            if (add[xa * n + z] == add[b * n + z]) {
              cancel[(x * n + a) * n + b] = static_cast<std::int32_t>(z);
              break;
            }
      }
  }
};

FiniteHemiring::FiniteHemiring(std::string name, const Table& add, const Table& mul) {
  auto report = check_axioms(add, mul);
  if (!report.passed) throw AxiomError(std::move(report));
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->order = add.size();
  d->add = flatten(add);
  d->mul = flatten(mul);
  order_ = d->order;
  add_ = d->add.data();
  mul_ = d->mul.data();
  data_ = std::move(d);
}

const std::string& FiniteHemiring::name() const noexcept { return data_->name; }

Table FiniteHemiring::add_table() const {
  Table t(order(), std::vector<Element>(order()));
  for (Element i = 0; i < order(); ++i)
    for (Element j = 0; j < order(); ++j) t[i][j] = add(i, j);
  return t;
}

Table FiniteHemiring::mul_table() const {
  Table t(order(), std::vector<Element>(order()));
  for (Element i = 0; i < order(); ++i)
    for (Element j = 0; j < order(); ++j) t[i][j] = mul(i, j);
  return t;
}

std::optional<Element> FiniteHemiring::cancel_witness(Element x, Element a,
                                                      Element b) const {
  std::call_once(data_->cancel_once, [this] { data_->build_cancel(); });
  const std::size_t n = order();
  auto z = data_->cancel[(x * n + a) * n + b];
  if (z < 0) return std::nullopt;
  return static_cast<Element>(z);
}

bool FiniteHemiring::same_structure(const FiniteHemiring& other) const noexcept {
  return data_ == other.data_ ||
         (data_->add == other.data_->add && data_->mul == other.data_->mul);
}

FiniteHemiring FiniteHemiring::renamed(std::string name) const {
  return FiniteHemiring(std::move(name), add_table(), mul_table());
}

BoundedN0Carrier::BoundedN0Carrier(std::uint64_t bound) : bound_(bound) {
  if (bound < 1) throw PreconditionError("bound must be positive");
}

namespace builtins {

namespace {

void require_positive(std::size_t n, std::string_view what) {
  if (n < 1) throw PreconditionError(std::string(what) + ": n must be >= 1");
}

template <class Add, class Mul>
FiniteHemiring from_ops(std::string name, std::size_t n, Add&& add, Mul&& mul) {
  Table a(n, std::vector<Element>(n)), m(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      a[i][j] = add(i, j);
      m[i][j] = mul(i, j);
    }
  return FiniteHemiring(std::move(name), a, m);
}

}  // namespace

FiniteHemiring example21() {
  Table add{{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 2, 2, 3}, {3, 3, 3, 2}};
  Table mul{{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}};
  return FiniteHemiring("example21", add, mul);
}

FiniteHemiring chain(std::size_t n) {
  require_positive(n, "chain");
  return from_ops("chain(" + std::to_string(n) + ")", n + 1,
                  [](Element a, Element b) { return std::max(a, b); },
                  [](Element a, Element b) { return std::min(a, b); });
}

FiniteHemiring boolean() { return chain(1).renamed("boolean"); }

FiniteHemiring zmod(std::size_t n) {
  require_positive(n, "zmod");
  return from_ops("zmod(" + std::to_string(n) + ")", n,
                  [n](Element a, Element b) { return (a + b) % n; },
                  [n](Element a, Element b) { return (a * b) % n; });
}

FiniteHemiring zero_mul(std::size_t n) {
  require_positive(n, "zero_mul");
  return from_ops("zero_mul(" + std::to_string(n) + ")", n,
                  [n](Element a, Element b) { return (a + b) % n; },
                  [](Element, Element) { return Element{0}; });
}

FiniteHemiring product(const FiniteHemiring& h1, const FiniteHemiring& h2) {
  const std::size_t n2 = h2.order();
  auto split = [n2](Element e) { return std::pair{e / n2, e % n2}; };
  return from_ops(
      "product(" + h1.name() + "," + h2.name() + ")", h1.order() * n2,
      [&](Element a, Element b) {
        auto [a1, a2] = split(a);
        auto [b1, b2] = split(b);
        return h1.add(a1, b1) * n2 + h2.add(a2, b2);
      },
      [&](Element a, Element b) {
        auto [a1, a2] = split(a);
        auto [b1, b2] = split(b);
        return h1.mul(a1, b1) * n2 + h2.mul(a2, b2);
      });
}

}  // namespace builtins

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "f(a,b)" into head "f" and top-level comma-separated arguments.
std::pair<std::string_view, std::vector<std::string_view>> split_call(std::string_view s) {
  s = trim(s);
  auto open = s.find('(');
  if (open == std::string_view::npos) return {s, {}};
  if (s.back() != ')') throw PreconditionError("malformed builtin '" + std::string(s) + "'");
  auto head = trim(s.substr(0, open));
  auto inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string_view> args;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) {
      args.push_back(trim(inner.substr(start, i - start)));
      start = i + 1;
    }
  }
  args.push_back(trim(inner.substr(start)));
  return {head, args};
}

std::size_t parse_param(std::string_view s, std::string_view name) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw PreconditionError("invalid parameter '" + std::string(s) + "' for " +
                            std::string(name));
  }
  if (v < 1) throw PreconditionError(std::string(name) + ": n must be >= 1");
  return static_cast<std::size_t>(v);
}

}  // namespace

FiniteHemiring builtin(std::string_view name) {
  auto [head, args] = split_call(name);
  auto arity = [&, head = head](std::size_t k) {
    if (args.size() != k) {
      throw PreconditionError("builtin " + std::string(head) + " takes " +
                              std::to_string(k) + " argument(s)");
    }
  };
  if (head == "example21") return arity(0), builtins::example21();
  if (head == "boolean") return arity(0), builtins::boolean();
  if (head == "chain") return arity(1), builtins::chain(parse_param(args[0], head));
  if (head == "zmod") return arity(1), builtins::zmod(parse_param(args[0], head));
  if (head == "zero_mul") return arity(1), builtins::zero_mul(parse_param(args[0], head));
  if (head == "product") {
    arity(2);
    return builtins::product(builtin(args[0]), builtin(args[1]));
  }
  throw PreconditionError("unknown builtin '" + std::string(name) + "'");
}

std::vector<std::string> default_builtin_names() {
  return {"boolean", "chain(2)",    "chain(3)",    "example21",
          "zmod(2)", "zmod(3)",     "zmod(4)",     "zmod(6)",
          "zero_mul(2)", "zero_mul(3)", "product(boolean,zmod(2))"};
}

}  // namespace hemi
