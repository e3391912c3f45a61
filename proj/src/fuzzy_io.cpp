#include "hemi/fuzzy_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <optional>
#include <sstream>
#include <vector>

namespace hemi {

namespace {

struct Header {
  std::string name;
  std::string carrier;
};

bool blank_or_comment(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

Header read_header(std::istream& in, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    std::string kw, name, over, carrier;
    ss >> kw >> name >> over;
    std::getline(ss >> std::ws, carrier);
    while (!carrier.empty() && std::isspace(static_cast<unsigned char>(carrier.back()))) {
      carrier.pop_back();
    }
    if (kw != "fuzzy" || name.empty() || over != "over" || carrier.empty()) {
      throw ParseError(line_no, "expected 'fuzzy <name> over <carrier-name>'");
    }
    return {name, carrier};
  }
  throw ParseError(line_no + 1, "missing 'fuzzy' header");
}

template <class F>
auto rethrow_at(std::size_t line_no, F&& f) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

FuzzySet parse_fuzzy(std::istream& in, const FiniteHemiring& carrier) {
  std::size_t line_no = 0;
  const Header header = read_header(in, line_no);
  if (header.carrier != carrier.name()) {
    throw ParseError(line_no, "fuzzy set is over '" + header.carrier + "', expected '" +
                                  carrier.name() + "'");
  }
  std::vector<std::optional<Grade>> grades(carrier.order());
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    std::string index_tok, grade_tok, extra;
    ss >> index_tok >> grade_tok;
    if (grade_tok.empty() || (ss >> extra && extra[0] != '#')) {
      throw ParseError(line_no, "expected '<element-index> <grade>'");
    }
    Element x = 0;
    try {
      std::size_t used = 0;
      x = std::stoull(index_tok, &used);
      if (used != index_tok.size()) throw std::invalid_argument(index_tok);
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "invalid element index '" + index_tok + "'");
    }
    if (x >= carrier.order()) {
      throw ParseError(line_no, "element " + index_tok + " not in carrier");
    }
    if (grades[x]) throw ParseError(line_no, "element " + index_tok + " graded twice");
    grades[x] = rethrow_at(line_no, [&] { return Grade::parse(grade_tok); });
  }
  std::vector<Grade> out;
  for (Element x = 0; x < grades.size(); ++x) {
    if (!grades[x]) {
      throw ParseError(line_no, "element " + std::to_string(x) + " has no grade");
    }
    out.push_back(*grades[x]);
  }
  return FuzzySet(carrier, std::move(out), header.name);
}

FuzzySet parse_fuzzy_text(std::string_view text, const FiniteHemiring& carrier) {
  std::istringstream in{std::string(text)};
  return parse_fuzzy(in, carrier);
}

N0FuzzySet parse_fuzzy_n0(std::istream& in) {
  std::size_t line_no = 0;
  const Header header = read_header(in, line_no);
  if (header.carrier != "N0") {
    throw ParseError(line_no, "rule-based sets must be 'over N0'");
  }
  std::optional<N0FuzzySet> result;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    if (result) throw ParseError(line_no, "only one rule line is allowed");
    result = rethrow_at(line_no, [&] { return N0FuzzySet::parse_rule(header.name, line); });
  }
  if (!result) throw ParseError(line_no + 1, "missing rule line");
  return *result;
}

N0FuzzySet parse_fuzzy_n0_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fuzzy_n0(in);
}

bool is_n0_fuzzy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::size_t line_no = 0;
  return read_header(in, line_no).carrier == "N0";
}

std::string write_fuzzy(const FuzzySet& mu) {
  std::string out = "fuzzy " + (mu.name().empty() ? std::string("mu") : mu.name()) +
                    " over " + mu.carrier().name() + "\n";
  for (Element x = 0; x < mu.grades().size(); ++x) {
    out += std::to_string(x) + " " + mu(x).to_string() + "\n";
  }
  return out;
}

std::string write_fuzzy(const N0FuzzySet& mu) {
  if (mu.clauses().empty()) throw PreconditionError("computed N0 sets have no rule text");
  return "fuzzy " + mu.name() + " over N0\n" + mu.rule_text() + "\n";
}

}  // namespace hemi
