#ifndef NILVA_DIFF_FORMS_HPP
#define NILVA_DIFF_FORMS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilva/lie_structure.hpp"
#include "nilva/nil_group.hpp"
#include "nilva/polynomial.hpp"
#include "nilva/report.hpp"

namespace nilva::forms {

/// Number of coordinates a form lives on: x1, x2, x3, y1, y2, y3 are
/// polynomial variables 0..5.  Higher variables are treated as constants.
inline constexpr int kDim = 6;

/// Polynomial differential form; each basis differential is a bitmask over
/// the six coordinates, taken in increasing order.
class PolyForm {
 public:
  PolyForm() = default;
  /// 0-form.
  PolyForm(const Polynomial& f);
  static PolyForm differential(int coord);
  static PolyForm term(std::uint8_t mask, const Polynomial& f);

  const std::map<std::uint8_t, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous form; -1 for zero, throws if mixed.
  int degree() const;
  Polynomial coefficient(std::uint8_t mask) const;

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Polynomial& f, const PolyForm& a);
  friend bool operator==(const PolyForm& a, const PolyForm& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add(std::uint8_t mask, const Polynomial& f);
  std::map<std::uint8_t, Polynomial> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& a);
/// Pulls back along a polynomial map whose components are given in the
/// coordinates 0..5 (other variables are parameters).
PolyForm pullback(const group::CoordinateMap& m, const PolyForm& a);

/// (alpha1, alpha2, alpha3, beta1, beta2, beta3) as left-invariant 1-forms.
std::array<PolyForm, 6> invariant_coframe(const Params& p);

/// The Lie basis element a coframe form is dual to under the pairing:
/// the form alpha_i pairs with beta_i and the form beta_i with alpha_i.
lie::BasisIndex dual_lie_element(int coframe_index);

/// Coefficient matrix M with coframe[r] = sum_c M[r][c] dq_c.
using Matrix = std::array<std::array<Polynomial, kDim>, kDim>;
Matrix coframe_matrix(const Params& p);
Polynomial determinant(const Matrix& m);
/// Inverse of a unipotent matrix as the finite Neumann series.
Matrix unipotent_inverse(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);

VerificationReport check_left_invariance(const Params& p, int samples = 0, std::uint64_t seed = 1,
                                         group::GroupLaw law = group::GroupLaw::Corrected);
VerificationReport check_maurer_cartan(const Params& p);
VerificationReport check_d_squared(const Params& p, int random_forms = 100, std::uint64_t seed = 1);
VerificationReport check_unipotent(const Params& p);

/// Random polynomial form of the given degree (small coefficients).
PolyForm random_form(std::mt19937_64& rng, int degree);

}  // namespace nilva::forms

#endif
