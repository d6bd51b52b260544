#include "compcat/ids.hpp"

namespace compcat {

std::string esc_part(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '(' || c == ')' || c == ',' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string join_ids(const std::string& prefix, const std::vector<std::string>& parts) {
  std::string out = prefix;
  out.push_back('(');
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += esc_part(parts[i]);
  }
  out.push_back(')');
  return out;
}

}  // namespace compcat
