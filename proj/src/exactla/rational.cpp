#include "outfn/rational.hpp"

#include <stdexcept>

namespace outfn {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  Integer p;
  Integer q;
  if (num.empty() || den.empty() || p.set_str(num, 10) != 0 || q.set_str(den, 10) != 0) {
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  }
  if (q == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace outfn
