#include "rectchar/multivar_poly.hpp"

namespace rectchar {

std::vector<std::string> rect_variable_names(int m) {
  if (m == 1) return {"p", "q"};
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("q" + std::to_string(i));
  return names;
}

}  // namespace rectchar
