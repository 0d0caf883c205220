#include "nilva/diff_forms.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace nilva::forms {

namespace {

const char* const kCoordNames[kDim] = {"x1", "x2", "x3", "y1", "y2", "y3"};
const char* const kFormNames[kDim] = {"alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3"};

std::vector<std::string> coord_names() {
  std::vector<std::string> n(kCoordNames, kCoordNames + kDim);
  for (int i = 0; i < kDim; ++i) n.push_back(std::string(kCoordNames[i]) + "*");
  return n;
}

std::string mask_str(std::uint8_t mask) {
  std::string s;
  for (int i = 0; i < kDim; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!s.empty()) s += "^";
    s += std::string("d") + kCoordNames[i];
  }
  return s.empty() ? "1" : s;
}

// Sign of moving the differentials of b past those of a into sorted order.
int wedge_sign(std::uint8_t a, std::uint8_t b) {
  int inversions = 0;
  for (int j = 0; j < kDim; ++j) {
    if (!(b & (1u << j))) continue;
    inversions += std::popcount(static_cast<unsigned>(a >> (j + 1)));
  }
  return inversions % 2 ? -1 : 1;
}

void add_params(VerificationReport& r, const Params& p) {
  r.add_param("k", std::to_string(p.k));
  r.add_param("j", std::to_string(p.j));
}

}  // namespace

PolyForm::PolyForm(const Polynomial& f) { add(0, f); }

PolyForm PolyForm::differential(int coord) { return term(static_cast<std::uint8_t>(1u << coord), Polynomial(1)); }

PolyForm PolyForm::term(std::uint8_t mask, const Polynomial& f) {
  PolyForm r;
  r.add(mask, f);
  return r;
}

void PolyForm::add(std::uint8_t mask, const Polynomial& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

int PolyForm::degree() const {
  int d = -1;
  for (const auto& [mask, f] : terms_) {
    int e = std::popcount(static_cast<unsigned>(mask));
    if (d >= 0 && e != d) throw std::domain_error("PolyForm: mixed degree");
    d = e;
  }
  return d;
}

Polynomial PolyForm::coefficient(std::uint8_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Polynomial() : it->second;
}

PolyForm PolyForm::operator-() const {
  PolyForm r;
  for (const auto& [m, f] : terms_) r.terms_.emplace(m, -f);
  return r;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  for (const auto& [m, f] : o.terms_) add(m, f);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  for (const auto& [m, f] : o.terms_) add(m, -f);
  return *this;
}

PolyForm operator*(const Polynomial& f, const PolyForm& a) {
  PolyForm r;
  for (const auto& [m, g] : a.terms_) r.add(m, f * g);
  return r;
}

std::string PolyForm::str() const {
  if (terms_.empty()) return "0";
  auto names = coord_names();
  std::string s;
  for (const auto& [m, f] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + f.str(names) + ")" + (m ? " " + mask_str(m) : "");
  }
  return s;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  PolyForm r;
  for (const auto& [ma, fa] : a.terms()) {
    for (const auto& [mb, fb] : b.terms()) {
      if (ma & mb) continue;
      Polynomial c = fa * fb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      r += PolyForm::term(ma | mb, c);
    }
  }
  return r;
}

PolyForm exterior_derivative(const PolyForm& a) {
  PolyForm r;
  for (const auto& [m, f] : a.terms()) {
    for (int v = 0; v < kDim; ++v) {
      if (m & (1u << v)) continue;
      Polynomial df = f.derivative(v);
      if (df.is_zero()) continue;
      r += wedge(PolyForm::term(static_cast<std::uint8_t>(1u << v), df), PolyForm::term(m, Polynomial(1)));
    }
  }
  return r;
}

PolyForm pullback(const group::CoordinateMap& m, const PolyForm& a) {
  std::map<int, Polynomial> subst;
  for (int i = 0; i < kDim; ++i) subst.emplace(i, m[i]);
  std::array<PolyForm, kDim> dm;
  for (int i = 0; i < kDim; ++i) dm[i] = exterior_derivative(PolyForm(m[i]));
  PolyForm r;
  for (const auto& [mask, f] : a.terms()) {
    PolyForm piece(f.substitute(subst));
    for (int i = 0; i < kDim; ++i) {
      if (mask & (1u << i)) piece = wedge(piece, dm[i]);
    }
    r += piece;
  }
  return r;
}

std::array<PolyForm, 6> invariant_coframe(const Params& p) {
  const Polynomial x1 = Polynomial::variable(0), x2 = Polynomial::variable(1), x3 = Polynomial::variable(2);
  const Polynomial y2 = Polynomial::variable(4);
  const Scalar k(p.k), j(p.j), half(1, 2), kj3 = Scalar(p.k * p.j) / Scalar(3);
  auto d = [](int i) { return PolyForm::differential(i); };
  enum { X1, X2, X3, Y1, Y2, Y3 };
  std::array<PolyForm, 6> th;
  th[0] = d(X1);
  th[1] = d(X2) - (half * k * x3) * d(X1) + (half * k * x1) * d(X3);
  th[2] = d(X3);
  th[3] = d(Y1) - (kj3 * x3 * x3) * d(X1) + (half * j * x3) * d(X2) -
          (half * (k * y2 + j * x2)) * d(X3) + (kj3 * x1 * x3) * d(X3) + (half * k * x3) * d(Y2);
  th[4] = d(Y2) - (half * j * x3) * d(X1) + (half * j * x1) * d(X3);
  th[5] = d(Y3) + (kj3 * x3 * x1) * d(X1) + (half * (k * y2 + j * x2)) * d(X1) - (half * j * x1) * d(X2) -
          (kj3 * x1 * x1) * d(X3) - (half * k * x1) * d(Y2);
  return th;
}

lie::BasisIndex dual_lie_element(int i) {
  if (i < 3) return lie::beta(i + 1);
  return lie::alpha(i - 2);
}

Matrix coframe_matrix(const Params& p) {
  auto th = invariant_coframe(p);
  Matrix m;
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) m[r][c] = th[r].coefficient(static_cast<std::uint8_t>(1u << c));
  }
  return m;
}

Polynomial determinant(const Matrix& m) {
  std::array<int, kDim> perm;
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det;
  do {
    Polynomial term(1);
    for (int r = 0; r < kDim && !term.is_zero(); ++r) term = term * m[r][perm[r]];
    if (term.is_zero()) continue;
    int inv = 0;
    for (int a = 0; a < kDim; ++a)
      for (int b = a + 1; b < kDim; ++b) inv += perm[a] > perm[b];
    det += inv % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Matrix unipotent_inverse(const Matrix& m) {
  Matrix neg_n, id;
  for (int i = 0; i < kDim; ++i) {
    id[i][i] = Polynomial(1);
    for (int j = 0; j < kDim; ++j) neg_n[i][j] = -(m[i][j] - (i == j ? Polynomial(1) : Polynomial()));
  }
  Matrix sum = id, power = id;
  for (int r = 1; r < kDim; ++r) {
    power = multiply(power, neg_n);
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) sum[i][j] += power[i][j];
  }
  return sum;
}

VerificationReport check_left_invariance(const Params& p, int samples, std::uint64_t seed, group::GroupLaw law) {
  VerificationReport r;
  r.check = samples > 0 ? "forms.left-invariance-sampled" : "forms.left-invariance";
  add_params(r, p);
  if (law == group::GroupLaw::AsPrinted) r.add_param("law", "as-printed");
  Comparator cmp;
  auto th = invariant_coframe(p);
  auto names = coord_names();
  auto compare = [&](const std::string& where, const PolyForm& want, const PolyForm& got) {
    PolyForm diff = got - want;
    cmp.count();
    if (diff.is_zero()) return;
    const auto& [mask, f] = *diff.terms().begin();
    const auto& [e, c] = *f.terms().begin();
    Scalar w = 0, g = 0;
    auto wf = want.coefficient(mask).terms();
    auto gf = got.coefficient(mask).terms();
    if (auto it = wf.find(e); it != wf.end()) w = it->second;
    if (auto it = gf.find(e); it != gf.end()) g = it->second;
    cmp.record_mismatch(where + ":" + mask_str(mask) + ":" + Polynomial::monomial(e, 1).str(names), w, g);
  };
  if (samples <= 0) {
    auto L = group::symbolic_left_translation(p, law);
    for (int i = 0; i < kDim; ++i) compare(kFormNames[i], th[i], pullback(L, th[i]));
  } else {
    r.add_param("samples", std::to_string(samples));
    r.add_param("seed", std::to_string(seed));
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
      group::GroupElement g{{}, p};
      for (auto& c : g.coords) c = group::sample_rational(rng);
      auto L = group::left_translation(g, law);
      for (int i = 0; i < kDim; ++i) {
        compare("sample " + std::to_string(s) + " " + kFormNames[i], th[i], pullback(L, th[i]));
      }
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_maurer_cartan(const Params& p) {
  VerificationReport r;
  r.check = "forms.maurer-cartan";
  add_params(r, p);
  Comparator cmp;
  auto th = invariant_coframe(p);
  for (int x = 0; x < kDim; ++x) {
    lie::BasisIndex X = dual_lie_element(x);
    PolyForm rhs;
    for (int y = 0; y < kDim; ++y) {
      for (int z = y + 1; z < kDim; ++z) {
        Scalar c = lie::bracket_basis(dual_lie_element(y), dual_lie_element(z), p).coefficient(X);
        if (c.is_zero()) continue;
        rhs -= Polynomial(c) * wedge(th[y], th[z]);
      }
    }
    PolyForm lhs = exterior_derivative(th[x]);
    PolyForm diff = lhs - rhs;
    cmp.count();
    if (!diff.is_zero()) {
      const auto& [mask, f] = *diff.terms().begin();
      cmp.record_mismatch(std::string("d") + kFormNames[x] + ":" + mask_str(mask) + ":" + f.str(coord_names()),
                       Scalar(0), f.terms().begin()->second);
    }
  }
  cmp.finish(r);
  return r;
}

PolyForm random_form(std::mt19937_64& rng, int degree) {
  PolyForm f;
  int nterms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < nterms; ++t) {
    std::uint8_t mask = 0;
    while (std::popcount(static_cast<unsigned>(mask)) < degree) mask |= static_cast<std::uint8_t>(1u << (rng() % kDim));
    Polynomial coeff(Scalar(static_cast<std::int64_t>(rng() % 7) - 3));
    int nvars = static_cast<int>(rng() % 4);
    for (int v = 0; v < nvars; ++v) coeff = coeff * Polynomial::variable(static_cast<int>(rng() % kDim));
    f += PolyForm::term(mask, coeff + Polynomial(Scalar(static_cast<std::int64_t>(rng() % 5) - 2)) *
                                          Polynomial::variable(static_cast<int>(rng() % kDim)));
  }
  return f;
}

VerificationReport check_d_squared(const Params& p, int random_forms, std::uint64_t seed) {
  VerificationReport r;
  r.check = "forms.d-squared";
  add_params(r, p);
  Comparator cmp;
  auto expect_zero = [&](const std::string& where, const PolyForm& f) {
    cmp.count();
    if (f.is_zero()) return;
    const auto& [mask, g] = *f.terms().begin();
    cmp.record_mismatch(where + ":" + mask_str(mask), Scalar(0), g.terms().begin()->second);
  };
  auto th = invariant_coframe(p);
  for (int i = 0; i < kDim; ++i) expect_zero(std::string("dd ") + kFormNames[i], exterior_derivative(exterior_derivative(th[i])));
  std::mt19937_64 rng(seed);
  for (int s = 0; s < random_forms; ++s) {
    PolyForm f = random_form(rng, static_cast<int>(rng() % 4));
    expect_zero("dd random " + std::to_string(s), exterior_derivative(exterior_derivative(f)));
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_unipotent(const Params& p) {
  VerificationReport r;
  r.check = "forms.unipotent";
  add_params(r, p);
  Comparator cmp;
  Matrix m = coframe_matrix(p);
  Polynomial det = determinant(m);
  cmp.count();
  if (!(det == Polynomial(1))) cmp.record_mismatch("det", Scalar(1), det.constant_term());
  Matrix prod = multiply(m, unipotent_inverse(m));
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      Polynomial want = i == j ? Polynomial(1) : Polynomial();
      cmp.count();
      if (!(prod[i][j] == want)) {
 cmp.record_mismatch("M*M^-1[" + std::to_string(i) + "][" + std::to_string(j) + "]", want.constant_term(),
                         prod[i][j].constant_term());
      }
    }
  }
  cmp.finish(r);
  return r;
}

}  // namespace nilva::forms
