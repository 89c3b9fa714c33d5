#include "cubepaths/rat.hpp"

#include <stdexcept>

namespace cubepaths {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(Int(text), 1);
      r.canonicalize();
      return r;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("bad rational");
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal '" + text + "'");
  }
}

std::string rat_str(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string int_str(const Int& x) { return x.get_str(); }

}  // namespace cubepaths
