#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sunit/field.hpp"

namespace sunit {

/// An instance file: `key = value` lines, `#` starts a comment. Values stay
/// as text until the field is known.
struct InstanceSpec {
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> s;
  std::optional<std::string> modulus;  // polynomial in T over F_p defining F_q
  std::optional<std::string> gens;
  std::optional<std::string> b;
  std::optional<int> rhs;
  std::optional<unsigned> m;
  std::optional<unsigned> m_max;
  std::optional<std::int64_t> word_bound;
  std::optional<int> deg_bound;
  std::optional<unsigned> e_bound;
  std::optional<std::uint64_t> seed;
};

/// Throws InvalidArgument for unknown or repeated keys and malformed numbers.
InstanceSpec parse_instance(std::string_view text);
InstanceSpec load_instance(const std::string& path);

/// F_p, or F_{p^s} with the given modulus. Throws InvalidArgument when p is
/// missing.
const Field& instance_field(const InstanceSpec& spec);

}  // namespace sunit
