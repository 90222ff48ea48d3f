#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "epg/group.hpp"

namespace epg {

struct ParseError : std::runtime_error {
    std::size_t offset;  // byte position in the input
    ParseError(const std::string& message, std::size_t at)
        : std::runtime_error(message + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

// Grammar: atoms separated by "x"; whitespace insignificant.
//   Z<n>                     cyclic of order n >= 1
//   Q<m>                     generalized quaternion, m a power of two >= 8
//   D<m>                     dihedral of order m, even m >= 2
//   Ab(<p>;<t1>,...,<tk>)    Z_{p^t1} x ... x Z_{p^tk}, p prime, t nondecreasing
//   Table(<path>)            explicit Cayley table file
GroupSpec parse_group_spec(std::string_view text);

}  // namespace epg
