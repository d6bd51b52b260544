#ifndef COMPCAT_IDS_HPP
#define COMPCAT_IDS_HPP

#include <string>
#include <vector>

namespace compcat {

using ObjId = std::string;
using MorId = std::string;
using ElemId = std::string;

// Derived structures name their parts from the input ids. The join is
// prefix(p1,p2,...) with '(' ')' ',' '\' backslash-escaped inside parts, so
// distinct tuples never collide even after repeated derivation.
std::string esc_part(const std::string& s);
std::string join_ids(const std::string& prefix, const std::vector<std::string>& parts);

inline std::string pair_id(const std::string& a, const std::string& b) {
  return join_ids("", {a, b});
}

}  // namespace compcat

#endif
