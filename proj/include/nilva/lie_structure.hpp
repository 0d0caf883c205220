#ifndef NILVA_LIE_STRUCTURE_HPP
#define NILVA_LIE_STRUCTURE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "nilva/polynomial.hpp"
#include "nilva/report.hpp"
#include "nilva/scalar.hpp"

namespace nilva {

/// Integer parameters (k, j) of the algebra h_{k,j} and its double.
struct Params {
  std::int64_t k = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const Params&, const Params&) = default;
};

namespace lie {

enum class Kind : std::uint8_t { Alpha, Beta };

struct BasisIndex {
  Kind kind;
  int index;  // 1..3
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

inline BasisIndex alpha(int i) { return {Kind::Alpha, i}; }
inline BasisIndex beta(int i) { return {Kind::Beta, i}; }

/// The six basis elements in the order alpha1..3, beta1..3.
std::array<BasisIndex, 6> basis();
std::string name(const BasisIndex& b);

/// Element of h_{k,j} in canonical sparse form.
class LieElement {
 public:
  LieElement() = default;
  LieElement(const BasisIndex& b, const Scalar& c = Scalar(1));

  const std::map<BasisIndex, Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(const BasisIndex& b) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(const BasisIndex& b, const Scalar& c);

  LieElement operator-() const;
  LieElement& operator+=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a += -b; }
  friend LieElement operator*(const Scalar& c, const LieElement& a);
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

 private:
  std::map<BasisIndex, Scalar> coeffs_;
};

LieElement bracket_basis(const BasisIndex& a, const BasisIndex& b, const Params& p);
LieElement bracket(const LieElement& a, const LieElement& b, const Params& p);
Scalar pairing(const LieElement& a, const LieElement& b);

VerificationReport check_jacobi_finite(const Params& p);
VerificationReport check_pairing_invariance(const Params& p);
VerificationReport check_skew_finite(const Params& p);

/// Polynomial section X + xi of TN + T*N on coordinates (x, y, z), which are
/// polynomial variables 0, 1, 2.
struct Section {
  std::array<Polynomial, 3> vec;
  std::array<Polynomial, 3> form;
  friend bool operator==(const Section&, const Section&) = default;
};

/// Twisted Dorfman bracket with flux h dx^dy^dz:
///   [X+xi, Y+eta] = [X,Y] + L_X eta - i_Y dxi + i_Y i_X H.
Section dorfman_bracket(const Section& a, const Section& b, const Polynomial& h);

/// Coefficient h of dx^dy^dz for the flux class j, oriented so that the
/// frame below closes onto the structure constants of h_{k,j}.
Polynomial flux_coefficient(const Params& p);

/// Global frame section realizing a basis element on N(k).
Section frame_section(const BasisIndex& b, const Params& p);

/// Expands a section in the global frame; throws if a coefficient is not
/// constant.
LieElement read_in_frame(const Section& s, const Params& p);

VerificationReport check_dorfman_frame(const Params& p);

}  // namespace lie
}  // namespace nilva

#endif
