#include "icover/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "icover/errors.hpp"

namespace icover {

namespace {

std::vector<std::string> content_tokens(const std::string& raw_line) {
  std::string line = raw_line;
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  std::vector<std::string> tokens;
  std::istringstream ts(line);
  std::string tok;
  while (ts >> tok) tokens.push_back(tok);
  return tokens;
}

std::int64_t to_i64(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error(line_no, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw parse_error(line_no, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

Instance load_instance(std::istream& in) {
  std::vector<std::int64_t> points;
  std::vector<Interval> intervals;
  bool saw_points = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = content_tokens(line);
    if (tokens.empty()) continue;
    if (!saw_points) {
      if (tokens[0] != "points:")
        throw parse_error(line_no, "expected 'points:', got '" + tokens[0] + "'");
      for (std::size_t i = 1; i < tokens.size(); ++i)
        points.push_back(to_i64(tokens[i], line_no));
      saw_points = true;
      continue;
    }
    if (tokens[0] != "interval:")
      throw parse_error(line_no, "expected 'interval:', got '" + tokens[0] + "'");
    if (tokens.size() != 3)
      throw parse_error(line_no, "interval needs exactly two endpoints");
    const std::int64_t lo = to_i64(tokens[1], line_no);
    const std::int64_t hi = to_i64(tokens[2], line_no);
    if (hi < lo) throw parse_error(line_no, "interval has hi < lo");
    intervals.push_back({static_cast<int>(intervals.size()), lo, hi});
  }
  if (!saw_points) throw parse_error(1, "missing 'points:' line");
  return Instance::normalize(std::move(points), std::move(intervals));
}

void save_instance(std::ostream& out, const Instance& inst) {
  out << "points:";
  for (std::int64_t p : inst.points()) out << ' ' << p;
  out << '\n';
  std::vector<Interval> by_id(inst.intervals());
  std::sort(by_id.begin(), by_id.end(),
            [](const Interval& a, const Interval& b) { return a.id < b.id; });
  for (const Interval& iv : by_id)
    out << "interval: " << iv.lo << ' ' << iv.hi << '\n';
}

SetSystem load_set_system(std::istream& in) {
  SetSystem sys;
  bool saw_elements = false;
  std::unordered_set<std::string> names;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = content_tokens(line);
    if (tokens.empty()) continue;
    if (!saw_elements) {
      if (tokens[0] != "elements:")
        throw parse_error(line_no, "expected 'elements:', got '" + tokens[0] + "'");
      if (tokens.size() != 2)
        throw parse_error(line_no, "'elements:' needs exactly one count");
      sys.ground_size = to_i64(tokens[1], line_no);
      if (sys.ground_size < 0)
        throw parse_error(line_no, "negative element count");
      saw_elements = true;
      continue;
    }
    if (tokens[0] != "set:")
      throw parse_error(line_no, "expected 'set:', got '" + tokens[0] + "'");
    if (tokens.size() < 2) throw parse_error(line_no, "set needs a name");
    const std::string& name = tokens[1];
    if (!names.insert(name).second)
      throw parse_error(line_no, "duplicate set name '" + name + "'");
    std::vector<int> elems;
    std::unordered_set<std::int64_t> seen;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const std::int64_t e = to_i64(tokens[i], line_no);
      if (e < 0 || e >= sys.ground_size)
        throw parse_error(line_no, "element " + std::to_string(e) +
                                       " outside [0, " +
                                       std::to_string(sys.ground_size) + ")");
      if (!seen.insert(e).second)
        throw parse_error(line_no,
                          "duplicate element " + std::to_string(e) + " in set '" +
                              name + "'");
      elems.push_back(static_cast<int>(e));
    }
    sys.sets.emplace_back(name, std::move(elems));
  }
  if (!saw_elements) throw parse_error(1, "missing 'elements:' line");
  return sys;
}

void save_set_system(std::ostream& out, const SetSystem& sys) {
  out << "elements: " << sys.ground_size << '\n';
  for (const auto& [name, elems] : sys.sets) {
    out << "set: " << name;
    for (int e : elems) out << ' ' << e;
    out << '\n';
  }
}

InputKind detect_kind(std::string_view text) {
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string line(
        text.substr(start, end == std::string_view::npos ? end : end - start));
    ++line_no;
    const auto tokens = content_tokens(line);
    if (!tokens.empty()) {
      if (tokens[0] == "points:") return InputKind::instance;
      if (tokens[0] == "elements:") return InputKind::set_system;
      throw parse_error(line_no,
                        "expected 'points:' or 'elements:', got '" + tokens[0] + "'");
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  throw parse_error(1, "empty input");
}

}  // namespace icover
