#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include "hemi/carrier_io.hpp"
#include "hemi/ideals.hpp"
#include "hemi/model_finder.hpp"
#include "oracles.hpp"

using namespace hemi;

namespace {

std::map<std::size_t, std::size_t> golden_counts() {
  std::ifstream in(std::string(HEMI_GOLDEN_DIR) + "/hemiring_counts.txt");
  std::map<std::size_t, std::size_t> out;
  std::string word;
  std::size_t order = 0, count = 0;
  while (in >> word) {
    if (word == "order" && in >> order >> count) out[order] = count;
  }
  return out;
}

}  // namespace

TEST_SUITE("model-finder") {

TEST_CASE("pruned and naive enumeration agree with the frozen counts") {
  const auto golden = golden_counts();
  REQUIRE(golden.size() >= 3);
  for (std::size_t order = 1; order <= 3; ++order) {
    CAPTURE(order);
    const auto naive = order == 1 ? 1 : oracle::naive_classes(order).size();
    CHECK(naive == golden.at(order));
    CHECK(enumerate_hemirings(order).size() == golden.at(order));
    CHECK(count_hemirings(order) == golden.at(order));
  }
}

TEST_CASE("representatives are canonical, valid and pairwise non-isomorphic") {
  for (std::size_t order = 1; order <= 3; ++order) {
    const auto reps = enumerate_hemirings(order);
    const auto classes = order == 1 ? std::set<std::pair<oracle::Flat, oracle::Flat>>{}
                                    : oracle::naive_classes(order);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(check_axioms(reps[i].add_table(), reps[i].mul_table()).passed);
      if (order > 1) {
        oracle::Flat a, m;
        for (const auto& row : reps[i].add_table()) a.insert(a.end(), row.begin(), row.end());
        for (const auto& row : reps[i].mul_table()) m.insert(m.end(), row.begin(), row.end());
        // The representative is the orbit minimum itself.
        CHECK(classes.count({a, m}) == 1);
      }
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphic(reps[i], reps[j]));
    }
  }
}

TEST_CASE("enumeration is deterministic across thread counts") {
  const auto one = enumerate_hemirings(4, 1);
  const auto many = enumerate_hemirings(4, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].same_structure(many[i]));
    CHECK(one[i].name() == many[i].name());
  }
}

TEST_CASE("search filters") {
  SearchQuery q;
  q.order = 2;
  q.exact = true;
  q.filters = {SearchFilter::h_hemiregular};
  bool boolean_found = false;
  for (const auto& hit : find(q)) {
    boolean_found = boolean_found || oracle::isomorphic(hit.carrier, builtins::boolean());
    CHECK(oracle::h_hemiregular(hit.carrier));
  }
  CHECK(boolean_found);

  q.order = 3;
  bool chain_found = false;
  for (const auto& hit : find(q)) chain_found = chain_found || oracle::isomorphic(hit.carrier, builtins::chain(2));
  CHECK(chain_found);

  q.filters = {SearchFilter::h_hemiregular, SearchFilter::not_h_hemiregular};
  CHECK(find(q).empty());

  q.exact = false;
  q.order = 4;
  q.filters = {SearchFilter::has_k_ideal_not_h_ideal};
  const auto hits = find(q);
  REQUIRE_FALSE(hits.empty());
  for (const auto& hit : hits) {
    REQUIRE(hit.witnesses.size() == 1);
    CHECK(hit.witnesses[0].find("(x,a,b,z)") != std::string::npos);
  }
  const auto& first = hits.front().carrier;
  CHECK(first.order() == 2);
  // {0} in ({0,1}, max, zero product): 1 + 0 + 1 = 0 + 1.
  CHECK(is_k_ideal(CrispSubset(first, std::vector<Element>{0}), Side::left));
  CHECK(is_h_ideal(CrispSubset(first, std::vector<Element>{0}), Side::left).is_fails());

  q.limit = 3;
  CHECK(find(q).size() == 3);
  CHECK_THROWS_AS(parse_search_filter("regular"), PreconditionError);
  CHECK(parse_search_filters("h-hemiregular,has-prime-h-ideal").size() == 2);
}

TEST_CASE("hits are written as carrier files with an index") {
  SearchQuery q;
  q.order = 3;
  q.filters = {SearchFilter::has_proper_h_ideal};
  const auto hits = find(q);
  const auto dir = std::filesystem::temp_directory_path() / "hemi_find_test";
  std::filesystem::remove_all(dir);
  const auto index = write_hits(hits, dir.string());
  std::ifstream in(index);
  std::string line;
  std::getline(in, line);
  CHECK(line == "file\torder\twitnesses");
  std::size_t rows = 0;
  for (; std::getline(in, line); ++rows) {
    const auto file = line.substr(0, line.find('\t'));
    const auto parsed = parse_carrier_file((dir / file).string());
    CHECK(parsed.same_structure(hits[rows].carrier));
  }
  CHECK(rows == hits.size());
  std::filesystem::remove_all(dir);
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(enumerate_hemirings(6), CapExceeded);
  CHECK_THROWS_AS(enumerate_hemirings(0), PreconditionError);
  CHECK(enumerate_hemirings(1).size() == 1);
}

}  // TEST_SUITE
