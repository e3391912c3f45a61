#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hemi/carrier.hpp"

namespace hemi {

/// Largest order the enumerator accepts.
inline constexpr std::size_t max_search_order = 5;

/// One representative per isomorphism class (isomorphisms fix 0), in a
/// deterministic order: by addition table, then multiplication table, both
/// compared row-major. Representatives are the lexicographically least
/// (add, mul) pair of their class and are named `o<order>-<k>`, k from 1.
/// Throws CapExceeded for order > max_search_order, PreconditionError for 0.
std::vector<FiniteHemiring> enumerate_hemirings(std::size_t order, unsigned jobs = 1);

/// Number of isomorphism classes without materializing carriers.
std::size_t count_hemirings(std::size_t order, unsigned jobs = 1);

enum class SearchFilter {
  h_hemiregular,
  not_h_hemiregular,
  has_proper_h_ideal,
  has_k_ideal_not_h_ideal,
  has_prime_h_ideal,
};

std::string_view to_string(SearchFilter filter);
/// Throws PreconditionError on an unknown name.
SearchFilter parse_search_filter(std::string_view text);
/// Comma-separated list.
std::vector<SearchFilter> parse_search_filters(std::string_view text);

struct SearchQuery {
  /// Searches orders 1..order, or only `order` when `exact`.
  std::size_t order = 3;
  bool exact = false;
  std::vector<SearchFilter> filters;
  /// 0 means unlimited.
  std::size_t limit = 0;
  unsigned jobs = 1;
};

struct SearchHit {
  FiniteHemiring carrier;
  /// One certificate per filter, in filter order.
  std::vector<std::string> witnesses;
};

/// Carriers passing every filter, in enumeration order. Throws CapExceeded
/// when the order exceeds max_search_order.
std::vector<SearchHit> find(const SearchQuery& query);

/// Writes `<name>.hemiring` per hit plus `index.tsv` (file, order, witnesses)
/// into `directory`, creating it if needed. Returns the index path.
std::string write_hits(const std::vector<SearchHit>& hits, const std::string& directory);

}  // namespace hemi
