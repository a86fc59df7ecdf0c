#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "akb/multipartition.hpp"
#include "akb/partition.hpp"

namespace akb {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grammar: parts are comma-separated decimal integers, weakly decreasing and
// positive; the empty partition is written "", "0" or "-".
Partition parse_partition(std::string_view text);

// Components separated by '|'; e.g. "3,2|" is ((3,2), empty).
std::vector<Partition> parse_multipartition(std::string_view text);

// Comma-separated integers, negatives allowed; must be nonempty.
Multicharge parse_multicharge(std::string_view text);

std::string render_partition(const Partition& p);  // "4,2", empty as "-"
std::string render_multipartition(std::span<const Partition> mp);
std::string render_multicharge(const Multicharge& t);

}  // namespace akb
