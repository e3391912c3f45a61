#include "hemi/model_finder.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <thread>

#include "hemi/carrier_io.hpp"
#include "hemi/ideals.hpp"

namespace hemi {

namespace {

constexpr std::uint8_t unset = 0xff;

using Flat = std::vector<std::uint8_t>;
using Perm = std::vector<std::uint8_t>;

// Permutations of {0..n-1} fixing 0.
std::vector<Perm> zero_fixing_perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

// Compares the image of `t` under `p` with `t` itself, row-major, stopping at
// the first cell where either side is still unset. Returns <0, 0 or >0.
int compare_image(const Flat& t, const Perm& p, const Perm& inverse, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto cur = t[r * n + c];
      const auto pre = t[inverse[r] * n + inverse[c]];
      if (cur == unset || pre == unset) return 0;
      const auto img = p[pre];
      if (img != cur) return img < cur ? -1 : 1;
    }
  return 0;
}

Perm invert(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

struct Group {
  std::vector<Perm> perms;
  std::vector<Perm> inverses;
};

// Is some image of the partial table already smaller on its defined prefix?
bool beaten(const Flat& t, const Group& g, std::size_t n) {
  for (std::size_t i = 1; i < g.perms.size(); ++i)
    if (compare_image(t, g.perms[i], g.inverses[i], n) < 0) return true;
  return false;
}

bool associative_so_far(const Flat& t, std::size_t n) {
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      const auto ab = t[a * n + b];
      if (ab == unset) continue;
      for (std::size_t c = 1; c < n; ++c) {
        const auto bc = t[b * n + c];
        if (bc == unset) continue;
        const auto l = t[ab * n + c], r = t[a * n + bc];
        if (l != unset && r != unset && l != r) return false;
      }
    }
  return true;
}

// Commutative monoids with identity 0, lex-least in their orbit.
std::vector<Flat> canonical_additions(std::size_t n, const Group& sym) {
  Flat t(n * n, unset);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<std::uint8_t>(i);
    t[i * n] = static_cast<std::uint8_t>(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);

  std::vector<Flat> out;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    const auto [i, j] = cells[k];
    for (std::size_t v = 0; v < n; ++v) {
      t[i * n + j] = t[j * n + i] = static_cast<std::uint8_t>(v);
      if (associative_so_far(t, n) && !beaten(t, sym, n)) self(self, k + 1);
    }
    t[i * n + j] = t[j * n + i] = unset;
  };
  rec(rec, 0);
  return out;
}

Group automorphisms(const Flat& add, std::size_t n, const Group& sym) {
  Group aut;
  for (std::size_t i = 0; i < sym.perms.size(); ++i) {
    const auto& p = sym.perms[i];
    bool keeps = true;
    for (std::size_t a = 0; a < n && keeps; ++a)
      for (std::size_t b = 0; b < n && keeps; ++b)
        keeps = p[add[a * n + b]] == add[p[a] * n + p[b]];
    if (keeps) {
      aut.perms.push_back(p);
      aut.inverses.push_back(sym.inverses[i]);
    }
  }
  return aut;
}

bool multiplication_consistent(const Flat& add, const Flat& mul, std::size_t n) {
  if (!associative_so_far(mul, n)) return false;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      for (std::size_t c = 1; c < n; ++c) {
        const auto s = add[b * n + c];
        // a(b+c) = ab + ac
        const auto ab = mul[a * n + b], ac = mul[a * n + c], as = mul[a * n + s];
        if (ab != unset && ac != unset && as != unset && as != add[ab * n + ac]) return false;
        // (b+c)a = ba + ca
        const auto ba = mul[b * n + a], ca = mul[c * n + a], sa = mul[s * n + a];
        if (ba != unset && ca != unset && sa != unset && sa != add[ba * n + ca]) return false;
      }
  return true;
}

template <class Emit>
void canonical_multiplications(const Flat& add, std::size_t n, const Group& aut, Emit&& emit) {
  Flat t(n * n, unset);
  for (std::size_t i = 0; i < n; ++i) t[i] = t[i * n] = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == (n - 1) * (n - 1)) {
      emit(t);
      return;
    }
    const std::size_t i = 1 + k / (n - 1), j = 1 + k % (n - 1);
    for (std::size_t v = 0; v < n; ++v) {
      t[i * n + j] = static_cast<std::uint8_t>(v);
      if (multiplication_consistent(add, t, n) && !beaten(t, aut, n)) self(self, k + 1);
    }
    t[i * n + j] = unset;
  };
  rec(rec, 0);
}

Group symmetric(std::size_t n) {
  Group g;
  g.perms = zero_fixing_perms(n);
  for (const auto& p : g.perms) g.inverses.push_back(invert(p));
  return g;
}

void check_order(std::size_t order) {
  if (order == 0) throw PreconditionError("order must be at least 1");
  if (order > max_search_order) {
    throw CapExceeded("search order is capped at " + std::to_string(max_search_order) + ", got " +
                      std::to_string(order));
  }
}

// Runs `per_add(index, add, aut)` for every canonical addition table, spread
// over `jobs` threads. Work units are whole addition tables.
template <class PerAdd>
std::size_t for_each_addition(std::size_t n, unsigned jobs, PerAdd&& per_add) {
  const auto sym = symmetric(n);
  const auto adds = canonical_additions(n, sym);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < adds.size();) {
      per_add(i, adds[i], automorphisms(adds[i], n, sym));
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, adds.size()));
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return adds.size();
}

Table to_table(const Flat& t, std::size_t n) {
  Table out(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = t[i * n + j];
  return out;
}

std::string set_text(const CrispSubset& s) { return "{" + s.to_string() + "}"; }

std::string elements_text(const std::vector<Element>& e) {
  std::string out;
  for (auto x : e) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::optional<std::string> certify(const FiniteHemiring& c, SearchFilter filter) {
  switch (filter) {
    case SearchFilter::h_hemiregular: {
      const auto r = is_h_hemiregular(c);
      if (!r.verdict.is_holds()) return std::nullopt;
      std::string out = "(a: x1,x2,z)";
      for (std::size_t a = 0; a < r.witness->triples.size(); ++a) {
        const auto& t = r.witness->triples[a];
        out += " " + std::to_string(a) + ": " + std::to_string(t[0]) + "," +
               std::to_string(t[1]) + "," + std::to_string(t[2]);
      }
      return out;
    }
    case SearchFilter::not_h_hemiregular: {
      const auto r = is_h_hemiregular(c);
      if (r.verdict.is_holds()) return std::nullopt;
      return r.verdict.witness()->to_string();
    }
    case SearchFilter::has_proper_h_ideal:
      for (const auto& a : enumerate_ideals(c, IdealKind::h, Side::left))
        if (!a.is_whole()) return "left h-ideal " + set_text(a);
      return std::nullopt;
    case SearchFilter::has_k_ideal_not_h_ideal:
      for (Side side : {Side::left, Side::right})
        for (const auto& a : enumerate_ideals(c, IdealKind::k, side)) {
          const auto v = is_h_ideal(a, side);
          if (v) continue;
          return std::string(to_string(side)) + " k-ideal " + set_text(a) +
                 " not an h-ideal, (x,a,b,z) = (" + elements_text(v.witness()->elements) + ")";
        }
      return std::nullopt;
    case SearchFilter::has_prime_h_ideal:
      for (const auto& a : enumerate_ideals(c, IdealKind::h, Side::left))
        if (!a.is_whole() && is_prime_h_ideal(a, Side::left)) return "left prime h-ideal " + set_text(a);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<FiniteHemiring> enumerate_hemirings(std::size_t order, unsigned jobs) {
  check_order(order);
  const std::size_t n = order;
  if (n == 1) return {FiniteHemiring("o1-1", {{0}}, {{0}})};
  std::vector<std::vector<std::pair<Flat, Flat>>> per_add;
  const auto sym = symmetric(n);
  per_add.resize(canonical_additions(n, sym).size());
  for_each_addition(n, jobs, [&](std::size_t i, const Flat& add, const Group& aut) {
    canonical_multiplications(add, n, aut, [&](const Flat& mul) { per_add[i].emplace_back(add, mul); });
  });
  std::vector<FiniteHemiring> out;
  for (const auto& group : per_add)
    for (const auto& [add, mul] : group) {
      out.emplace_back("o" + std::to_string(n) + "-" + std::to_string(out.size() + 1),
                       to_table(add, n), to_table(mul, n));
    }
  return out;
}

std::size_t count_hemirings(std::size_t order, unsigned jobs) {
  check_order(order);
  if (order == 1) return 1;
  std::atomic<std::size_t> total{0};
  for_each_addition(order, jobs, [&](std::size_t, const Flat& add, const Group& aut) {
    std::size_t local = 0;
    canonical_multiplications(add, order, aut, [&](const Flat&) { ++local; });
    total += local;
  });
  return total;
}

std::string_view to_string(SearchFilter filter) {
  switch (filter) {
    case SearchFilter::h_hemiregular: return "h-hemiregular";
    case SearchFilter::not_h_hemiregular: return "not-h-hemiregular";
    case SearchFilter::has_proper_h_ideal: return "has-proper-h-ideal";
    case SearchFilter::has_k_ideal_not_h_ideal: return "has-k-ideal-not-h-ideal";
    case SearchFilter::has_prime_h_ideal: return "has-prime-h-ideal";
  }
  return "?";
}

SearchFilter parse_search_filter(std::string_view text) {
  for (auto f : {SearchFilter::h_hemiregular, SearchFilter::not_h_hemiregular,
                 SearchFilter::has_proper_h_ideal, SearchFilter::has_k_ideal_not_h_ideal,
                 SearchFilter::has_prime_h_ideal})
    if (to_string(f) == text) return f;
  throw PreconditionError("unknown filter '" + std::string(text) + "'");
}

std::vector<SearchFilter> parse_search_filters(std::string_view text) {
  std::vector<SearchFilter> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (!item.empty()) out.push_back(parse_search_filter(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<SearchHit> find(const SearchQuery& query) {
  check_order(query.order);
  std::vector<SearchHit> hits;
  for (std::size_t n = query.exact ? query.order : 1; n <= query.order; ++n) {
    for (const auto& c : enumerate_hemirings(n, query.jobs)) {
      std::vector<std::string> witnesses;
      for (auto f : query.filters) {
        auto w = certify(c, f);
        if (!w) break;
        witnesses.push_back(std::string(to_string(f)) + ": " + *w);
      }
      if (witnesses.size() != query.filters.size()) continue;
      hits.push_back({c, std::move(witnesses)});
      if (query.limit != 0 && hits.size() == query.limit) return hits;
    }
  }
  return hits;
}

std::string write_hits(const std::vector<SearchHit>& hits, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  const auto index_path = (fs::path(directory) / "index.tsv").string();
  std::ofstream index(index_path);
  if (!index) throw Error("cannot write " + index_path);
  index << "file\torder\twitnesses\n";
  for (const auto& hit : hits) {
    const auto file = hit.carrier.name() + ".hemiring";
    std::ofstream out(fs::path(directory) / file);
    if (!out) throw Error("cannot write " + file);
    out << write_carrier(hit.carrier);
    std::string joined;
    for (const auto& w : hit.witnesses) joined += (joined.empty() ? "" : " | ") + w;
    index << file << '\t' << hit.carrier.order() << '\t' << (joined.empty() ? "-" : joined) << '\n';
  }
  return index_path;
}

}  // namespace hemi
