#ifndef NILVA_LOG_FIELDS_HPP
#define NILVA_LOG_FIELDS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nilva/dist_kernels.hpp"
#include "nilva/mode_algebra.hpp"

namespace nilva::fields {

using modes::ModeElement;
using modes::Variant;

inline constexpr int kZ = 0;
inline constexpr int kW = 1;

/// Comparison window: cells |p_z|, |p_w| <= N, log-degrees <= L, and
/// monomials whose modes all lie in [-monomials, monomials].
struct FieldWindow {
  int N = 6;
  int L = 3;
  std::int64_t monomials = 8;
};

/// Formal series in z, w, log z, log w whose coefficients are elements of
/// the mode algebra.  Each term may carry summation variables; nothing is
/// truncated until expansion.
///
/// A logarithmic field in z is a Series that only uses slot kZ; a
/// two-variable distribution uses both.
class Series {
 public:
  Series() = default;
  static Series scalar(const Scalar& c);
  static Series generator(const modes::Generator& g, const Scalar& c = Scalar(1));
  /// log z (slot kZ) or log w (slot kW).
  static Series log_of(int slot);
  /// sum_n g^i_n x^{-n} in the given slot.
  static Series mode_sum(sym::Kind kind, int index, int slot);
  /// sum_{n != 0} n^{-s} z^n w^{-n}.
  static Series power_sum(int s);

  const std::vector<sym::Term>& terms() const { return terms_; }
  void add_term(sym::Term t);

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Scalar& c, Series a);
  /// Same-point product; throws "ordering ambiguity" if generators of the
  /// two factors fail to commute.
  friend Series operator*(const Series& a, const Series& b);

  Series derive(int slot) const;
  /// Drops every term carrying log of the slot variable.
  Series hat(int slot) const;
  /// Exchanges z and w.
  Series swapped() const;
  /// Multiplies by slot^e.
  Series shifted(int slot, int e) const;

  /// Exact expansion on the window; throws on log-degree above L.
  sym::Expansion expand(const FieldWindow& w) const;
  /// Coefficient of z^pz w^pw (log z)^lz (log w)^lw as a mode element.
  ModeElement coefficient(std::int64_t pz, std::int64_t pw, int lz, int lw) const;
  /// "p_z p_w l_z l_w monomial n/d" lines, sorted.
  std::string dump(const FieldWindow& w) const;

 private:
  std::vector<sym::Term> terms_;
};

enum class FieldId { X1, X2, X3, Y1, Y2, Y3 };
std::string field_name(FieldId f);
std::array<FieldId, 6> all_fields();

/// Coordinate fields x1, x2, x3, y1, y2, y3 in z.
std::array<Series, 6> coordinate_fields(const Params& p);
/// Currents alpha1..3, beta1..3 in z, built from the coordinate fields.
std::array<Series, 6> current_fields(const Params& p);

Series delta_series();
Series log_series();
Series rl_series();
Series t_series();

/// [f(z), g(w)] for fields given in z.
Series field_commutator(const Series& f, const Series& g, const Params& p, Variant v);

/// Right-hand side of the commutator of two coordinate fields.
Series expected_commutator(FieldId a, FieldId b, const Params& p);
/// Right-hand side of the commutator of two currents (basis order
/// alpha1..3, beta1..3).
Series expected_current_commutator(int a, int b, const Params& p);

/// Compares two series and records the first differing coefficient.
void compare_series(Comparator& cmp, const std::string& label, const Series& expected, const Series& actual,
                    const FieldWindow& w);

VerificationReport verify_theorem_principal(const Params& p, const FieldWindow& w, Variant v);
VerificationReport verify_current_algebra(const Params& p, const FieldWindow& w, Variant v);
/// d_z d_w of the expected coordinate commutators against the commutators
/// of the differentiated fields.
VerificationReport check_consistency_square(const Params& p, const FieldWindow& w, Variant v);
/// (k, j) = (0, 0) and (0, 1): field shapes and commutators against their
/// closed forms.
VerificationReport check_special_cases(const FieldWindow& w, Variant v);

/// d_w^N delta(z-w) a(z) against d_w^N delta(z-w) sum_j d^j a(w) (z-w)^j c_j
/// with c_j = 1/j! (`factorial`) or 1.  Always `Reported`; `holds` carries
/// the outcome.  Throws std::invalid_argument if `a` has a nonzero log term
/// on the window.
VerificationReport check_taylor_lemma(const Series& a, const std::string& name, int n, const FieldWindow& w,
                                      bool factorial);

}  // namespace nilva::fields

#endif
