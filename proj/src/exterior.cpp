#include "cartan/exterior.hpp"

#include <sstream>

namespace cartan {

GrassmannPoly partial(int i, const GrassmannPoly& p) {
  if (i < 1 || i > p.generators())
    throw std::invalid_argument("derivation index out of range");
  GrassmannPoly r(p.generators());
  const std::uint32_t bit = std::uint32_t(1) << (i - 1);
  for (const auto& [bits, c] : p.terms()) {
    if (!(bits & bit)) continue;
    int below = std::popcount(bits & (bit - 1));
    r.add_term(bits & ~bit, (below & 1) ? -c : c);
  }
  return r;
}

std::string GrassmannPoly::str() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [bits, c] : coef_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    std::uint32_t rest = bits;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      os << "*x" << (i + 1);
    }
  }
  return os.str();
}

}  // namespace cartan
