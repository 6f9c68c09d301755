#include "regproj/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace regproj {

LaurentPoly::LaurentPoly(long long constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(long long coefficient, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

long long LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, long long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return *this = std::move(out);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(int n) const {
  LaurentPoly out(1);
  for (int i = 0; i < n; ++i) out *= *this;
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const long long mag = std::llabs(c);
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << "A";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace regproj
