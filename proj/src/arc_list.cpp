#include "digspec/arc_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace digspec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses exactly `count` whitespace-separated non-negative integers.
std::optional<std::vector<int>> parse_ints(std::string_view s, std::size_t count) {
  std::vector<int> values;
  while (!s.empty()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || value < 0) return std::nullopt;
    values.push_back(value);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    if (!s.empty() && s.front() != ' ' && s.front() != '\t') return std::nullopt;
    s = trim(s);
  }
  if (values.size() != count) return std::nullopt;
  return values;
}

Error at_line(int line, const Error& e) {
  return Error(e.code(), "line " + std::to_string(line) + ": " + e.detail());
}

}  // namespace

Digraph read_arc_list(std::istream& in) {
  std::optional<int> order;
  std::vector<Arc> arcs;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!order) {
      auto values = parse_ints(text, 1);
      if (!values) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected vertex count");
      order = (*values)[0];
      continue;
    }
    auto values = parse_ints(text, 2);
    if (!values) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected \"tail head\"");
    const Arc arc{(*values)[0], (*values)[1]};
    // Validate per line so errors can cite the line number.
    try {
      make_digraph(*order, {arc});
    } catch (const Error& e) {
      throw at_line(line, e);
    }
    for (const Arc& prior : arcs) {
      if (prior == arc) {
        throw Error(ErrorCode::DuplicateArc, "line " + std::to_string(line) + ": arc " + to_string(arc) + " appears twice");
      }
    }
    arcs.push_back(arc);
  }
  if (!order) throw Error(ErrorCode::ParseError, "missing vertex count");
  return make_digraph(*order, std::move(arcs));
}

Digraph read_arc_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_arc_list(in);
}

void write_arc_list(std::ostream& out, const Digraph& d) {
  out << d.order() << '\n';
  for (const Arc& arc : d.arcs()) out << arc.tail << ' ' << arc.head << '\n';
}

void write_arc_list(const std::filesystem::path& path, const Digraph& d) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  write_arc_list(out, d);
}

}  // namespace digspec
