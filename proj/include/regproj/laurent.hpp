#pragma once

#include <map>
#include <string>

namespace regproj {

// Integer Laurent polynomial in one variable A.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit by design
  static LaurentPoly monomial(long long coefficient, int exponent);

  const std::map<int, long long>& terms() const { return terms_; }
  long long coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  LaurentPoly pow(int n) const;  // n >= 0
  // A -> A^-1
  LaurentPoly reflected() const;

  bool operator==(const LaurentPoly&) const = default;

  // e.g. "-A^-16 + A^-12 + A^-4"
  std::string to_string() const;

 private:
  void add_term(int exponent, long long coefficient);
  std::map<int, long long> terms_;
};

}  // namespace regproj
