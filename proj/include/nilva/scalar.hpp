#ifndef NILVA_SCALAR_HPP
#define NILVA_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace nilva {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are kept
/// inline; anything larger is promoted to a shared, immutable GMP rational.
/// The representation is always canonical: denominator positive, gcd 1, and
/// a value that fits inline is never stored in the big form.
class Scalar {
 public:
  Scalar() noexcept = default;
  Scalar(int n) noexcept : num_(n) {}
  Scalar(long n) noexcept : num_(n) {}
  Scalar(long long n) noexcept : num_(n) {}
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& q);

  /// Parses "n" or "n/d" (optional leading '-').
  static Scalar parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept;
  int sign() const noexcept;

  mpq_class to_mpq() const;
  /// The value as an int64 if it is an integer in range.
  std::optional<std::int64_t> to_int64() const noexcept;

  /// "n/d" with d >= 1 always present; the canonical serialized form.
  std::string fraction() const;
  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept;
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(int e) const;

 private:
  static Scalar from_wide(__int128 num, __int128 den);
  void assign_big(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nilva

#endif
