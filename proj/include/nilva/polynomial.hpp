#ifndef NILVA_POLYNOMIAL_HPP
#define NILVA_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilva/scalar.hpp"

namespace nilva {

inline constexpr int kPolyVars = 24;
using Exponent = std::array<std::uint8_t, kPolyVars>;

/// Sparse multivariate polynomial with exact rational coefficients in up to
/// kPolyVars indeterminates.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Scalar& c);
  Polynomial(int c) : Polynomial(Scalar(c)) {}

  static Polynomial variable(int i);
  static Polynomial monomial(const Exponent& e, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int total_degree() const;
  int degree_in(int var) const;
  const std::map<Exponent, Scalar>& terms() const { return terms_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial derivative(int var) const;
  /// Replaces each listed variable by a polynomial; others are kept.
  Polynomial substitute(const std::map<int, Polynomial>& values) const;
  /// Replaces each listed variable by a scalar; others are kept.
  Polynomial partial_evaluate(const std::map<int, Scalar>& values) const;
  /// Full evaluation; every variable that occurs must be listed.
  Scalar evaluate(const std::map<int, Scalar>& values) const;

  /// Human-readable form, variables named by `names` (x0, x1, ... if absent).
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Exponent& e, const Scalar& c);
  std::map<Exponent, Scalar> terms_;
};

}  // namespace nilva

#endif
