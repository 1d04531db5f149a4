#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "fock2/partition.hpp"

namespace fock2 {

// Canonical text forms: a partition is "(a1,a2,...)" or "-" for the empty
// partition; a bipartition is "<partition>|<partition>", e.g. "(3,3)|(1)"
// and "-|-".

inline std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out = "(";
  for (int i = 1; i <= p.rows(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.part(i));
  }
  out += ')';
  return out;
}

inline std::string format_bipartition(const Bipartition& bp) {
  return format_partition(bp.comp1) + "|" + format_partition(bp.comp2);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline int parse_part(std::string_view tok, std::string_view whole) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("malformed partition text: \"" + std::string(whole) + "\"");
  return value;  // Partition rejects non-positive parts
}

}  // namespace detail

inline Partition parse_partition(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s == "-") return {};
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("malformed partition text: \"" + std::string(text) + "\"");
  s.remove_prefix(1);
  s.remove_suffix(1);
  std::vector<int> parts;
  while (true) {
    auto comma = s.find(',');
    if (comma == std::string_view::npos) {
      parts.push_back(detail::parse_part(s, text));
      break;
    }
    parts.push_back(detail::parse_part(s.substr(0, comma), text));
    s.remove_prefix(comma + 1);
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid partition: \"" + std::string(text) + "\"");
  }
}

inline Bipartition parse_bipartition(std::string_view text) {
  std::string_view s = detail::trim(text);
  auto bar = s.find('|');
  if (bar == std::string_view::npos || s.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("bipartition text needs exactly one '|': \"" + std::string(text) +
                                "\"");
  return {parse_partition(s.substr(0, bar)), parse_partition(s.substr(bar + 1))};
}

}  // namespace fock2
