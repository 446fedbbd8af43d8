#include "sunit/instance.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sunit/error.hpp"
#include "sunit/expr.hpp"

namespace sunit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class Int>
Int parse_int(std::string_view key, std::string_view v, int line) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    fail(ErrorKind::InvalidArgument,
         "line " + std::to_string(line) + ": '" + std::string(key) + "' needs an integer, got '" + std::string(v) + "'");
  return out;
}

}  // namespace

InstanceSpec parse_instance(std::string_view text) {
  InstanceSpec spec;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) fail(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": repeated key '" + key + "'");
    if (key == "p") spec.p = parse_int<std::uint32_t>(key, value, line_no);
    else if (key == "s") spec.s = parse_int<std::uint32_t>(key, value, line_no);
    else if (key == "modulus") spec.modulus = std::string(value);
    else if (key == "gens") spec.gens = std::string(value);
    else if (key == "b") spec.b = std::string(value);
    else if (key == "rhs") spec.rhs = parse_int<int>(key, value, line_no);
    else if (key == "m") spec.m = parse_int<unsigned>(key, value, line_no);
    else if (key == "m_max") spec.m_max = parse_int<unsigned>(key, value, line_no);
    else if (key == "word_bound") spec.word_bound = parse_int<std::int64_t>(key, value, line_no);
    else if (key == "deg_bound") spec.deg_bound = parse_int<int>(key, value, line_no);
    else if (key == "e_bound") spec.e_bound = parse_int<unsigned>(key, value, line_no);
    else if (key == "seed") spec.seed = parse_int<std::uint64_t>(key, value, line_no);
    else fail(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  return spec;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

const Field& instance_field(const InstanceSpec& spec) {
  if (!spec.p) fail(ErrorKind::InvalidArgument, "the characteristic p is required");
  const std::uint32_t s = spec.s.value_or(1);
  if (s == 1) return Field::get(*spec.p);
  if (!spec.modulus) fail(ErrorKind::InvalidArgument, "s > 1 needs a modulus polynomial");
  const Field& fp = Field::get(*spec.p);
  const RatFunc m = parse_value(*spec.modulus, fp);
  if (!m.den().is_one()) fail(ErrorKind::InvalidArgument, "the field modulus must be a polynomial");
  return Field::get(*spec.p, s, m.num().coeffs());
}

}  // namespace sunit
