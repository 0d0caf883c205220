#ifndef NILVA_MODE_ALGEBRA_HPP
#define NILVA_MODE_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilva/lie_structure.hpp"
#include "nilva/report.hpp"
#include "nilva/symbolic.hpp"

namespace nilva::modes {

using sym::Generator;
using sym::Kind;
using sym::Monomial;

inline Generator x(int i, std::int64_t n) { return {Kind::X, static_cast<std::uint8_t>(i), n}; }
inline Generator y(int i, std::int64_t n) { return {Kind::Y, static_cast<std::uint8_t>(i), n}; }
inline Generator w(int i) { return {Kind::W, static_cast<std::uint8_t>(i), 0}; }
inline Generator p(int i) { return {Kind::P, static_cast<std::uint8_t>(i), 0}; }

/// Individually switchable corrections to the printed bracket table.
enum class Fix : std::uint8_t {
  W2Y3 = 0,        // [w2, y3_m] = (k/2) x1_m instead of (k/2) x3_m
  HalfSigns = 1,   // sign of the eight (k/2), (j/2) zero-mode entries
  ZeroPairs = 2,   // sign of [p1,w2], [p1,p2], [w2,p3], [p2,p3]
  Count
};

inline constexpr int kFixCount = static_cast<int>(Fix::Count);

std::string fix_name(Fix f);
/// The printed and corrected forms of the entry, for reports.
std::string fix_description(Fix f);
/// Table entries touched by the correction.
std::vector<std::string> fix_entries(Fix f);

/// Which corrections are applied.  `as_written()` has none, `corrected()`
/// has all of them.
class Variant {
 public:
  static Variant as_written() { return Variant(0); }
  static Variant corrected() { return Variant((1u << kFixCount) - 1); }
  bool has(Fix f) const { return mask_ & (1u << static_cast<int>(f)); }
  Variant with(Fix f) const { return Variant(mask_ | (1u << static_cast<int>(f))); }
  Variant without(Fix f) const { return Variant(mask_ & ~(1u << static_cast<int>(f))); }
  std::string name() const;
  friend bool operator==(const Variant&, const Variant&) = default;

 private:
  explicit Variant(unsigned mask) : mask_(mask) {}
  unsigned mask_;
};

/// Whether generators of these kinds commute for generic (k, j) and modes.
bool kinds_commute(Kind a, int ia, Kind b, int ib);

/// Throws "ordering ambiguity" unless the generators pairwise commute.
void assert_commuting(const std::vector<sym::SymGen>& gens);

/// Element of the enveloping algebra: a finite sum of symbolic terms, each
/// a possibly infinite sum over summation variables of normal-ordered
/// monomials of pairwise commuting generators.
class ModeElement {
 public:
  ModeElement() = default;
  static ModeElement scalar(const Scalar& c);
  static ModeElement generator(const Generator& g, const Scalar& c = Scalar(1));
  static ModeElement monomial(const Monomial& m, const Scalar& c = Scalar(1));

  const std::vector<sym::Term>& terms() const { return terms_; }
  /// Adds a term after checking that its generators pairwise commute.
  void add_term(sym::Term t);
  bool is_structurally_zero() const { return terms_.empty(); }

  ModeElement operator-() const;
  ModeElement& operator+=(const ModeElement& o);
  ModeElement& operator-=(const ModeElement& o);
  friend ModeElement operator+(ModeElement a, const ModeElement& b) { return a += b; }
  friend ModeElement operator-(ModeElement a, const ModeElement& b) { return a -= b; }
  friend ModeElement operator*(const Scalar& c, ModeElement a);

  /// All monomials with every mode in [-window, window] and nonzero
  /// coefficient.
  std::map<Monomial, Scalar> expand(std::int64_t window) const;
  Scalar coefficient_of_monomial(const Monomial& m) const;
  int max_degree() const;

  /// Sorted "monomial n/d" lines within the window.
  std::string dump(std::int64_t window) const;

 private:
  std::vector<sym::Term> terms_;
};

/// Right-hand side of [a, b] as symbolic pieces.  `a` and `b` carry modes
/// affine in variables 0..next_var-1; fresh summation variables start at
/// next_var.  Each returned term has nvars set accordingly and its
/// constraints already applied.
std::vector<sym::Term> table_entry(const sym::SymGen& a, const sym::SymGen& b, int next_var, const Params& p,
                                   Variant v);

ModeElement bracket_table(const Generator& a, const Generator& b, const Params& p, Variant v);

/// Leibniz bracket of two terms (variables of `b` follow those of `a`;
/// powers and log-degrees add).  Appends results to `out`.  Throws
/// "cubic term encountered" above degree `max_degree` and "ordering
/// ambiguity" when a result monomial has non-commuting generators.
void bracket_terms(const sym::Term& a, const sym::Term& b, const Params& p, Variant v, std::vector<sym::Term>& out,
                   int max_degree = 2);

ModeElement bracket(const ModeElement& a, const ModeElement& b, const Params& p, Variant v);

/// Every generator with mode in [-grid, grid] plus the zero-mode w_i, p_i.
std::vector<Generator> generators(std::int64_t grid);

VerificationReport check_skew_symmetry(const Params& p, std::int64_t grid, std::int64_t window, Variant v);

struct JacobiOptions {
  std::int64_t grid = 4;
  std::int64_t window = 12;
  int jobs = 1;
};

VerificationReport check_jacobi(const Params& p, const JacobiOptions& o, Variant v);

/// The triple (y1_l, y1_n, y3_m) for all (l, n, m) in the grid.
VerificationReport check_jacobi_y1y1y3(const Params& p, const JacobiOptions& o, Variant v);

}  // namespace nilva::modes

#endif
