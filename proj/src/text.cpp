#include "akb/text.hpp"

#include <charconv>

namespace akb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Int parse_int(std::string_view token) {
  token = trim(token);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("not an integer: '" + std::string(token) + "'");
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "0" || text == "-") return Partition{};
  std::vector<Int> parts;
  for (std::string_view token : split(text, ',')) {
    Int p = parse_int(token);
    if (p <= 0) throw ParseError("partition parts must be positive");
    if (!parts.empty() && parts.back() < p)
      throw ParseError("partition parts must be weakly decreasing");
    parts.push_back(p);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> parse_multipartition(std::string_view text) {
  std::vector<Partition> out;
  for (std::string_view token : split(text, '|'))
    out.push_back(parse_partition(token));
  return out;
}

Multicharge parse_multicharge(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("multicharge must be nonempty");
  std::vector<Int> entries;
  for (std::string_view token : split(text, ','))
    entries.push_back(parse_int(token));
  return Multicharge{std::move(entries)};
}

std::string render_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (Int a = 1; a <= p.length(); ++a) {
    if (a > 1) out += ',';
    out += std::to_string(p.part(a));
  }
  return out;
}

std::string render_multipartition(std::span<const Partition> mp) {
  std::string out;
  for (std::size_t j = 0; j < mp.size(); ++j) {
    if (j > 0) out += '|';
    out += render_partition(mp[j]);
  }
  return out;
}

std::string render_multicharge(const Multicharge& t) {
  std::string out;
  for (Int j = 1; j <= t.length(); ++j) {
    if (j > 1) out += ',';
    out += std::to_string(t.entry(j));
  }
  return out;
}

}  // namespace akb
