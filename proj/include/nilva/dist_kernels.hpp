#ifndef NILVA_DIST_KERNELS_HPP
#define NILVA_DIST_KERNELS_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nilva/report.hpp"
#include "nilva/scalar.hpp"

namespace nilva::kernels {

/// Truncation contract: exponents |p| <= N, log-degrees <= L per variable.
struct Window {
  int N = 8;
  int L = 3;
};

/// Exponent/log-degree key for z^{pz} w^{pw} (log z)^{lz} (log w)^{lw}.
struct Key {
  int pz = 0, pw = 0, lz = 0, lw = 0;
  friend auto operator<=>(const Key&, const Key&) = default;
};

/// Rectangle of exponents on which a kernel's stored coefficients equal
/// those of the untruncated distribution.
struct Box {
  int zlo, zhi, wlo, whi;
  bool contains(int pz, int pw) const { return zlo <= pz && pz <= zhi && wlo <= pw && pw <= whi; }
  Box intersect(const Box& o) const;
  bool empty() const { return zlo > zhi || wlo > whi; }
};

/// Finite Laurent polynomial in z, w, log z, log w.
using LaurentLog = std::map<Key, Scalar>;

/// Truncated two-variable formal distribution with bounded log-degree.
class Kernel {
 public:
  explicit Kernel(const Window& w);

  const Window& window() const { return window_; }
  const Box& valid() const { return valid_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Key& k) const;

  /// Adds c at key; keys outside the exponent window are dropped.
  void add(const Key& k, const Scalar& c);
  void restrict_valid(const Box& b) { valid_ = valid_.intersect(b); }

  Kernel operator-() const;
  Kernel& operator+=(const Kernel& o);
  Kernel& operator-=(const Kernel& o);
  friend Kernel operator+(Kernel a, const Kernel& b) { return a += b; }
  friend Kernel operator-(Kernel a, const Kernel& b) { return a -= b; }
  friend Kernel operator*(const Scalar& c, const Kernel& a);

  /// One line per stored term, "p_z p_w l_z l_w n/d", sorted by key.
  std::string dump() const;

 private:
  Window window_;
  Box valid_;
  std::map<Key, Scalar> terms_;
};

Kernel delta(const Window& w);
Kernel log_kernel(const Window& w);
Kernel rl_kernel(const Window& w);
Kernel t_kernel(const Window& w);

/// Li_s(z/w) (forward = true) or Li_s(w/z) as formal series.
Kernel polylog(const Window& w, int s, bool forward);
/// A finite Laurent-log polynomial as a kernel (valid everywhere in window).
Kernel from_laurent(const Window& w, const LaurentLog& m);

Kernel d_z(const Kernel& a);
Kernel d_w(const Kernel& a);
Kernel mul_laurent(const Kernel& a, const LaurentLog& m);
Kernel swap_zw(const Kernel& a);

/// Common Laurent-log monomials.
LaurentLog monomial(int pz, int pw, int lz = 0, int lw = 0, const Scalar& c = Scalar(1));
LaurentLog operator+(LaurentLog a, const LaurentLog& b);
LaurentLog operator*(const Scalar& c, LaurentLog a);
LaurentLog operator*(const LaurentLog& a, const LaurentLog& b);

/// Compares two kernels on the intersection of their valid boxes shrunk to
/// |p| <= N - margin.
void compare_kernels(Comparator& cmp, const std::string& label, const Kernel& expected, const Kernel& actual,
                     int margin);

VerificationReport check_kernel_identities(const Window& w);
VerificationReport check_kernel_symmetries(const Window& w);
/// Identity (iii) with the log kernel in place of rl; expected to fail.
VerificationReport check_negative_control(const Window& w);
/// Coefficient sanity for (n, -n, 0, 0) against the polylog series.
VerificationReport check_series_sanity(const Window& w);

}  // namespace nilva::kernels

#endif
