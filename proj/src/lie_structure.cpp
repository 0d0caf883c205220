#include "nilva/lie_structure.hpp"

#include <stdexcept>
#include <vector>

namespace nilva::lie {

std::array<BasisIndex, 6> basis() {
  return {alpha(1), alpha(2), alpha(3), beta(1), beta(2), beta(3)};
}

std::string name(const BasisIndex& b) {
  return (b.kind == Kind::Alpha ? "alpha" : "beta") + std::to_string(b.index);
}

LieElement::LieElement(const BasisIndex& b, const Scalar& c) { add(b, c); }

Scalar LieElement::coefficient(const BasisIndex& b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void LieElement::add(const BasisIndex& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

LieElement LieElement::operator-() const {
  LieElement r;
  for (const auto& [b, c] : coeffs_) r.coeffs_.emplace(b, -c);
  return r;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [b, c] : o.coeffs_) add(b, c);
  return *this;
}

LieElement operator*(const Scalar& c, const LieElement& a) {
  LieElement r;
  for (const auto& [b, v] : a.coeffs_) r.add(b, c * v);
  return r;
}

std::string LieElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + name(b);
  }
  return out;
}

namespace {

// Listed brackets; everything else follows by skew-symmetry or is zero.
bool listed(const BasisIndex& a, const BasisIndex& b, const Params& p, LieElement& out) {
  const Scalar k(p.k), j(p.j);
  if (a == beta(1) && b == beta(2)) {
    out = LieElement(alpha(3), j);
  } else if (a == beta(3) && b == beta(1)) {
    out = LieElement(alpha(2), j) + LieElement(beta(2), k);
  } else if (a == beta(2) && b == beta(3)) {
    out = LieElement(alpha(1), j);
  } else if (a == beta(1) && b == alpha(2)) {
    out = LieElement(alpha(3), k);
  } else if (a == alpha(2) && b == beta(3)) {
    out = LieElement(alpha(1), k);
  } else {
    return false;
  }
  return true;
}

}  // namespace

LieElement bracket_basis(const BasisIndex& a, const BasisIndex& b, const Params& p) {
  LieElement out;
  if (listed(a, b, p, out)) return out;
  if (listed(b, a, p, out)) return -out;
  return {};
}

LieElement bracket(const LieElement& a, const LieElement& b, const Params& p) {
  LieElement r;
  for (const auto& [ba, ca] : a.coefficients()) {
    for (const auto& [bb, cb] : b.coefficients()) {
      r += (ca * cb) * bracket_basis(ba, bb, p);
    }
  }
  return r;
}

Scalar pairing(const LieElement& a, const LieElement& b) {
  Scalar r;
  for (const auto& [ba, ca] : a.coefficients()) {
    BasisIndex dual{ba.kind == Kind::Alpha ? Kind::Beta : Kind::Alpha, ba.index};
    r += ca * b.coefficient(dual);
  }
  return r;
}

namespace {

void add_params(VerificationReport& r, const Params& p) {
  r.add_param("k", std::to_string(p.k));
  r.add_param("j", std::to_string(p.j));
}

}  // namespace

VerificationReport check_jacobi_finite(const Params& p) {
  VerificationReport r;
  r.check = "lie.jacobi";
  add_params(r, p);
  Comparator cmp;
  auto B = basis();
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        LieElement x(B[a]), y(B[b]), z(B[c]);
        LieElement sum = bracket(x, bracket(y, z, p), p) + bracket(y, bracket(z, x, p), p) +
                         bracket(z, bracket(x, y, p), p);
        std::string where = "(" + name(B[a]) + "," + name(B[b]) + "," + name(B[c]) + ")";
        for (const auto& e : B) cmp.expect_equal(where + ":" + name(e), Scalar(0), sum.coefficient(e));
      }
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_pairing_invariance(const Params& p) {
  VerificationReport r;
  r.check = "lie.pairing-invariance";
  add_params(r, p);
  Comparator cmp;
  auto B = basis();
  for (const auto& a : B) {
    for (const auto& b : B) {
      for (const auto& c : B) {
        LieElement A(a), Bv(b), C(c);
        Scalar v = pairing(bracket(A, Bv, p), C) + pairing(Bv, bracket(A, C, p));
        cmp.expect_equal("(" + name(a) + "," + name(b) + "," + name(c) + ")", Scalar(0), v);
      }
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_skew_finite(const Params& p) {
  VerificationReport r;
  r.check = "lie.skew";
  add_params(r, p);
  Comparator cmp;
  auto B = basis();
  for (const auto& a : B) {
    for (const auto& b : B) {
      LieElement s = bracket_basis(a, b, p) + bracket_basis(b, a, p);
      for (const auto& e : B) {
        cmp.expect_equal("(" + name(a) + "," + name(b) + "):" + name(e), Scalar(0), s.coefficient(e));
      }
    }
  }
  cmp.finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// Dorfman bracket on polynomial sections of TN + T*N.

namespace {

using Vec3 = std::array<Polynomial, 3>;

Polynomial directional(const Vec3& X, const Polynomial& f) {
  Polynomial r;
  for (int a = 0; a < 3; ++a) {
    if (!X[a].is_zero()) r += X[a] * f.derivative(a);
  }
  return r;
}

Polynomial contract(const Vec3& form, const Vec3& X) {
  Polynomial r;
  for (int a = 0; a < 3; ++a) r += form[a] * X[a];
  return r;
}

// (d xi)(e_a, e_b) = d_a xi_b - d_b xi_a;  (i_Y d xi)_b = Y^a (d xi)_{ab}.
Vec3 interior_of_exterior(const Vec3& Y, const Vec3& xi) {
  Vec3 out;
  for (int b = 0; b < 3; ++b) {
    for (int a = 0; a < 3; ++a) {
      if (a == b || Y[a].is_zero()) continue;
      out[b] += Y[a] * (xi[b].derivative(a) - xi[a].derivative(b));
    }
  }
  return out;
}

}  // namespace

Section dorfman_bracket(const Section& s1, const Section& s2, const Polynomial& h) {
  const Vec3& X = s1.vec;
  const Vec3& xi = s1.form;
  const Vec3& Y = s2.vec;
  const Vec3& eta = s2.form;
  Section out;
  for (int i = 0; i < 3; ++i) out.vec[i] = directional(X, Y[i]) - directional(Y, X[i]);

  // L_X eta = i_X d eta + d(i_X eta).
  Vec3 lie = interior_of_exterior(X, eta);
  Polynomial ix_eta = contract(eta, X);
  for (int i = 0; i < 3; ++i) lie[i] += ix_eta.derivative(i);

  Vec3 iy_dxi = interior_of_exterior(Y, xi);

  // (i_Y i_X H)_c = h eps_{abc} X^a Y^b, i.e. h (X x Y)_c.
  Vec3 cross = {X[1] * Y[2] - X[2] * Y[1], X[2] * Y[0] - X[0] * Y[2], X[0] * Y[1] - X[1] * Y[0]};
  for (int i = 0; i < 3; ++i) out.form[i] = lie[i] - iy_dxi[i] + h * cross[i];
  return out;
}

Polynomial flux_coefficient(const Params& p) { return Polynomial(Scalar(p.j)); }

Section frame_section(const BasisIndex& b, const Params& p) {
  const Polynomial x = Polynomial::variable(0), z = Polynomial::variable(2);
  const Scalar half_k = Scalar(p.k) / Scalar(2);
  Section s;
  if (b.kind == Kind::Beta) {
    switch (b.index) {
      case 1:
        s.vec = {Polynomial(1), half_k * z, Polynomial()};
        break;
      case 2:
        s.vec = {Polynomial(), Polynomial(1), Polynomial()};
        break;
      case 3:
        s.vec = {Polynomial(), -(half_k * x), Polynomial(1)};
        break;
      default:
        throw std::invalid_argument("frame_section: index");
    }
  } else {
    switch (b.index) {
      case 1:
        s.form = {Polynomial(1), Polynomial(), Polynomial()};
        break;
      case 2:
        s.form = {-(half_k * z), Polynomial(1), half_k * x};
        break;
      case 3:
        s.form = {Polynomial(), Polynomial(), Polynomial(1)};
        break;
      default:
        throw std::invalid_argument("frame_section: index");
    }
  }
  return s;
}

LieElement read_in_frame(const Section& s, const Params& p) {
  LieElement out;
  for (int i = 1; i <= 3; ++i) {
    // Coefficient on beta_i is alpha_i(V); on alpha_i it is xi(beta_i).
    Polynomial cb = contract(frame_section(alpha(i), p).form, s.vec);
    Polynomial ca = contract(s.form, frame_section(beta(i), p).vec);
    if (!cb.is_constant() || !ca.is_constant()) {
      throw std::domain_error("read_in_frame: section is not a constant frame combination");
    }
    out.add(beta(i), cb.constant_term());
    out.add(alpha(i), ca.constant_term());
  }
  return out;
}

VerificationReport check_dorfman_frame(const Params& p) {
  VerificationReport r;
  r.check = "lie.dorfman-frame";
  add_params(r, p);
  Comparator cmp;
  auto B = basis();
  Polynomial h = flux_coefficient(p);
  for (const auto& a : B) {
    for (const auto& b : B) {
      LieElement got = read_in_frame(dorfman_bracket(frame_section(a, p), frame_section(b, p), h), p);
      LieElement want = bracket_basis(a, b, p);
      for (const auto& e : B) {
        cmp.expect_equal("(" + name(a) + "," + name(b) + "):" + name(e), want.coefficient(e),
                         got.coefficient(e));
      }
    }
  }
  cmp.finish(r);
  return r;
}

}  // namespace nilva::lie
