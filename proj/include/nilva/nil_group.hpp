#ifndef NILVA_NIL_GROUP_HPP
#define NILVA_NIL_GROUP_HPP

#include <array>
#include <cstdint>
#include <random>

#include "nilva/lie_structure.hpp"
#include "nilva/polynomial.hpp"
#include "nilva/report.hpp"
#include "nilva/scalar.hpp"

namespace nilva::group {

/// Which y2 component to use in the product of the double group.
///
/// AsPrinted uses the correction (j/2)(x3 x1* - x1* x3), which vanishes
/// identically; Corrected uses (j/2)(x3 x1* - x1 x3*).
enum class GroupLaw { AsPrinted, Corrected };

/// Coordinate order: x1, x2, x3, y1, y2, y3.
struct GroupElement {
  std::array<Scalar, 6> coords{};
  Params params;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct HeisenbergElement {
  std::array<Scalar, 3> coords{};
  std::int64_t k = 0;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

HeisenbergElement heisenberg_multiply(const HeisenbergElement& g, const HeisenbergElement& h);

/// Product in the double group over any commutative ring R constructible
/// from Scalar.
template <class R>
std::array<R, 6> product(const std::array<R, 6>& a, const std::array<R, 6>& b, const R& k,
                         const R& j, GroupLaw law = GroupLaw::Corrected) {
  const R half = R(Scalar(1, 2));
  const R sixth = R(Scalar(1, 6));
  const R &x1 = a[0], &x2 = a[1], &x3 = a[2], &y2 = a[4];
  const R &u1 = b[0], &u2 = b[1], &u3 = b[2], &v2 = b[4];
  const R kj = k * j;
  const R cross = x3 * u1 - x1 * u3;
  std::array<R, 6> c;
  c[0] = x1 + u1;
  c[1] = x2 + u2 + half * k * cross;
  c[2] = x3 + u3;
  c[3] = a[3] + b[3] + half * k * (y2 * u3 - v2 * x3) + half * j * (x2 * u3 - u2 * x3) +
         sixth * kj * (u3 - x3) * cross;
  if (law == GroupLaw::Corrected) {
    c[4] = y2 + v2 + half * j * cross;
  } else {
    c[4] = y2 + v2 + half * j * (x3 * u1 - u1 * x3);
  }
  c[5] = a[5] + b[5] + half * k * (x1 * v2 - u1 * y2) + half * j * (x1 * u2 - u1 * x2) +
         sixth * kj * (x1 - u1) * cross;
  return c;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h,
                      GroupLaw law = GroupLaw::Corrected);
GroupElement identity(const Params& p);
GroupElement inverse(const GroupElement& g, GroupLaw law = GroupLaw::Corrected);

/// h -> g h as six polynomials in the coordinates of h (polynomial
/// variables 0..5).
using CoordinateMap = std::array<Polynomial, 6>;
CoordinateMap left_translation(const GroupElement& g, GroupLaw law = GroupLaw::Corrected);
/// Left translation by a symbolic element whose coordinates are polynomial
/// variables 6..11; k, j are numeric.
CoordinateMap symbolic_left_translation(const Params& p, GroupLaw law = GroupLaw::Corrected);

enum class AssocMode { Symbolic, Sampled };

VerificationReport check_associativity(const Params& p, AssocMode mode, int samples = 100,
                                       std::uint64_t seed = 1,
                                       GroupLaw law = GroupLaw::Corrected);
/// Associativity with k and j as indeterminates as well (one pass for all
/// parameter values).
VerificationReport check_associativity_generic(GroupLaw law = GroupLaw::Corrected);
VerificationReport check_identity_inverse(const Params& p, int samples, std::uint64_t seed,
                                          GroupLaw law = GroupLaw::Corrected);
/// The Heisenberg product embeds into the (x1, x2, x3) block.
VerificationReport check_heisenberg_embedding(const Params& p, int samples, std::uint64_t seed);

/// Deterministic pseudo-random rational in [-bound, bound] with small
/// denominators.
Scalar sample_rational(std::mt19937_64& rng, int bound = 5);

}  // namespace nilva::group

#endif
