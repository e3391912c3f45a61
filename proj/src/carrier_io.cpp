#include "hemi/carrier_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hemi {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Element parse_index(const std::string& tok, std::size_t line) {
  Element v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected element index, got '" + tok + "'");
  }
  return v;
}

}  // namespace

FiniteHemiring parse_carrier(std::istream& in) {
  auto lines = tokenize(in);
  std::size_t pos = 0;
  auto next = [&](std::string_view what) -> const Line& {
    if (pos >= lines.size()) {
      throw ParseError(lines.empty() ? 1 : lines.back().number + 1,
                       "unexpected end of input, expected " + std::string(what));
    }
    return lines[pos++];
  };

  const Line& header = next("'hemiring <name>'");
  if (header.tokens[0] != "hemiring" || header.tokens.size() < 2) {
    throw ParseError(header.number, "expected 'hemiring <name>'");
  }
  std::string name = header.tokens[1];
  for (std::size_t i = 2; i < header.tokens.size(); ++i) name += " " + header.tokens[i];

  const Line& order_line = next("'order <n>'");
  if (order_line.tokens.size() != 2 || order_line.tokens[0] != "order") {
    throw ParseError(order_line.number, "expected 'order <n>'");
  }
  const Element n = parse_index(order_line.tokens[1], order_line.number);
  if (n < 1) throw ParseError(order_line.number, "order must be positive");

  auto read_table = [&](std::string_view label) {
    const Line& tag = next(std::string(label) + ":");
    if (tag.tokens.size() != 1 || tag.tokens[0] != std::string(label) + ":") {
      throw ParseError(tag.number, "expected '" + std::string(label) + ":'");
    }
    // Rows are read as a flat stream of n*n indices so line breaks are free.
    std::vector<Element> cells;
    std::size_t last_line = tag.number;
    while (cells.size() < n * n) {
      const Line& row = next(std::to_string(n) + " rows for " + std::string(label));
      for (const auto& tok : row.tokens) {
        if (cells.size() == n * n) {
          throw ParseError(row.number, "too many entries in " + std::string(label) + " table");
        }
        cells.push_back(parse_index(tok, row.number));
      }
      last_line = row.number;
    }
    Table t(n, std::vector<Element>(n));
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) {
        t[i][j] = cells[i * n + j];
        if (t[i][j] >= n) {
          throw ParseError(last_line, std::string(label) + " entry " +
                                          std::to_string(t[i][j]) + " out of range");
        }
      }
    return t;
  };

  Table add = read_table("add");
  Table mul = read_table("mul");
  if (pos != lines.size()) {
    throw ParseError(lines[pos].number, "trailing content after mul table");
  }
  return FiniteHemiring(std::move(name), add, mul);
}

FiniteHemiring parse_carrier_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_carrier(in);
}

FiniteHemiring parse_carrier_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return parse_carrier(in);
}

std::string write_carrier(const FiniteHemiring& h) {
  std::string out = "hemiring " + h.name() + "\norder " + std::to_string(h.order()) + "\n";
  auto table = [&](std::string_view label, auto op) {
    out += std::string(label) + ":\n";
    for (Element i = 0; i < h.order(); ++i) {
      for (Element j = 0; j < h.order(); ++j) {
        if (j) out += ' ';
        out += std::to_string(op(i, j));
      }
      out += '\n';
    }
  };
  table("add", [&](Element a, Element b) { return h.add(a, b); });
  table("mul", [&](Element a, Element b) { return h.mul(a, b); });
  return out;
}

}  // namespace hemi
