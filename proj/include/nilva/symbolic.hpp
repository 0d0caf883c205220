#ifndef NILVA_SYMBOLIC_HPP
#define NILVA_SYMBOLIC_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilva/scalar.hpp"

/// Exact symbolic sums over integer summation variables.
///
/// A Term is  coeff * prod_f form_f^power_f * g_1 ... g_r * z^{P} w^{Q} (log z)^a (log w)^b
/// summed over all integer values of its summation variables.  Generator
/// modes and the exponents P, Q are affine in those variables.  Factors are
/// evaluated one at a time with the convention 1/0 = 0: a factor with
/// negative power whose form evaluates to zero kills the whole term.
namespace nilva::sym {

inline constexpr int kMaxVars = 8;

/// Affine integer form c_0 v_0 + ... + c_7 v_7 + k.
struct Affine {
  std::array<std::int32_t, kMaxVars> c{};
  std::int64_t k = 0;

  static Affine constant(std::int64_t v) {
    Affine a;
    a.k = v;
    return a;
  }
  static Affine var(int i) {
    Affine a;
    a.c[i] = 1;
    return a;
  }
  bool is_constant() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }
  Affine& operator+=(const Affine& o);
  Affine& operator-=(const Affine& o);
  Affine& operator*=(std::int64_t s);
  friend Affine operator+(Affine a, const Affine& b) { return a += b; }
  friend Affine operator-(Affine a, const Affine& b) { return a -= b; }
  friend Affine operator-(Affine a) { return a *= -1; }
  friend Affine operator*(std::int64_t s, Affine a) { return a *= s; }
  friend bool operator==(const Affine&, const Affine&) = default;

  /// Replaces variable v by `value`.
  void substitute(int v, const Affine& value);
  /// Removes variable v (whose coefficient must be zero) and renumbers the
  /// variables above it.
  void remove_var(int v);
  /// Shifts every variable index up by `by`.
  Affine shifted(int by) const;
  std::string str() const;
};

struct Factor {
  Affine form;
  int power = -1;
};

enum class Kind : std::uint8_t { X = 0, Y = 1, W = 2, P = 3 };

std::string kind_name(Kind k);

/// Generator with a symbolic mode (W and P always have mode 0).
struct SymGen {
  Kind kind;
  std::uint8_t index;  // 1..3
  Affine mode;
};

/// Generator with a concrete mode.
struct Generator {
  Kind kind;
  std::uint8_t index;
  std::int64_t mode = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);

/// Sorted (normal-ordered) product of concrete generators.
using Monomial = std::vector<Generator>;
std::string to_string(const Monomial& m);

struct Term {
  Scalar coeff;
  int nvars = 0;
  std::vector<Factor> factors;
  std::vector<SymGen> gens;
  std::array<Affine, 2> power{};
  std::array<std::uint8_t, 2> logdeg{};
};

/// Folds constant factors into the coefficient.  Returns false if the term
/// vanishes.
bool normalize(Term& t);

/// Imposes form = 0 by eliminating one summation variable.  Returns false
/// if the constraint has no integer solution (the term vanishes).  Throws
/// if no variable has a unit coefficient after gcd normalization.
bool constrain(Term& t, Affine form);

/// Kind-level commutation of two generators under the mode table.
using CommuteFn = std::function<bool(Kind, int, Kind, int)>;

/// Enumeration limits for expansion into concrete monomials.
struct ExpandBounds {
  std::int64_t mode_window = 12;  // |mode| of every generator
  bool bound_powers = false;
  std::int64_t power_window = 0;  // |P|, |Q| when bound_powers
};

/// Cell key (p_z, p_w, l_z, l_w) plus monomial.
struct CellMono {
  std::array<std::int64_t, 2> power{};
  std::array<int, 2> logdeg{};
  Monomial mono;
  friend auto operator<=>(const CellMono&, const CellMono&) = default;
};

using Expansion = std::map<CellMono, Scalar>;

/// Accumulates every concrete instance of `t` within the bounds.  Throws if
/// a summation variable is not pinned by a generator mode or a bounded
/// exponent (the sum would have infinitely many contributions per
/// monomial).
void expand_term(const Term& t, const ExpandBounds& b, Expansion& out);

/// Numbers of leaves visited by expand_term since program start (diagnostic).
std::uint64_t expansion_leaves();

/// Product of two terms: variables of `b` are renumbered after those of `a`.
Term multiply_terms(const Term& a, const Term& b);

/// Removes zero entries.
void prune(Expansion& e);

}  // namespace nilva::sym

#endif
