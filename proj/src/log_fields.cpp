#include "nilva/log_fields.hpp"

#include <stdexcept>

namespace nilva::fields {

using sym::Affine;
using sym::Kind;
using sym::Term;

Series Series::scalar(const Scalar& c) {
  Series s;
  Term t;
  t.coeff = c;
  s.add_term(std::move(t));
  return s;
}

Series Series::generator(const modes::Generator& g, const Scalar& c) {
  Series s;
  Term t;
  t.coeff = c;
  t.gens.push_back({g.kind, g.index, Affine::constant(g.mode)});
  s.add_term(std::move(t));
  return s;
}

Series Series::log_of(int slot) {
  Series s;
  Term t;
  t.coeff = 1;
  t.logdeg[slot] = 1;
  s.add_term(std::move(t));
  return s;
}

Series Series::mode_sum(Kind kind, int index, int slot) {
  Series s;
  Term t;
  t.coeff = 1;
  t.nvars = 1;
  t.gens.push_back({kind, static_cast<std::uint8_t>(index), Affine::var(0)});
  t.power[slot] = -Affine::var(0);
  s.add_term(std::move(t));
  return s;
}

Series Series::power_sum(int s) {
  Series r;
  Term t;
  t.coeff = 1;
  t.nvars = 1;
  t.factors.push_back({Affine::var(0), -s});
  t.power[kZ] = Affine::var(0);
  t.power[kW] = -Affine::var(0);
  r.add_term(std::move(t));
  return r;
}

void Series::add_term(Term t) {
  modes::assert_commuting(t.gens);
  if (!sym::normalize(t)) return;
  terms_.push_back(std::move(t));
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Series& Series::operator+=(const Series& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series operator*(const Scalar& c, Series a) {
  if (c.is_zero()) return {};
  for (auto& t : a.terms_) t.coeff *= c;
  return a;
}

Series operator*(const Series& a, const Series& b) {
  Series r;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) r.add_term(sym::multiply_terms(ta, tb));
  }
  return r;
}

Series Series::derive(int slot) const {
  Series r;
  for (const auto& t : terms_) {
    Term u = t;
    u.factors.push_back({t.power[slot], 1});
    u.power[slot].k -= 1;
    r.add_term(std::move(u));
    if (t.logdeg[slot] > 0) {
      Term v = t;
      v.coeff *= Scalar(t.logdeg[slot]);
      --v.logdeg[slot];
      v.power[slot].k -= 1;
      r.add_term(std::move(v));
    }
  }
  return r;
}

Series Series::hat(int slot) const {
  Series r;
  for (const auto& t : terms_) {
    if (t.logdeg[slot] == 0) r.terms_.push_back(t);
  }
  return r;
}

Series Series::swapped() const {
  Series r = *this;
  for (auto& t : r.terms_) {
    std::swap(t.power[0], t.power[1]);
    std::swap(t.logdeg[0], t.logdeg[1]);
  }
  return r;
}

Series Series::shifted(int slot, int e) const {
  Series r = *this;
  for (auto& t : r.terms_) t.power[slot].k += e;
  return r;
}

sym::Expansion Series::expand(const FieldWindow& w) const {
  sym::ExpandBounds b;
  b.mode_window = w.monomials;
  b.bound_powers = true;
  b.power_window = w.N;
  sym::Expansion e;
  for (const auto& t : terms_) {
    if (t.logdeg[0] > w.L || t.logdeg[1] > w.L) throw std::overflow_error("log-degree overflow");
    sym::expand_term(t, b, e);
  }
  sym::prune(e);
  return e;
}

ModeElement Series::coefficient(std::int64_t pz, std::int64_t pw, int lz, int lw) const {
  ModeElement r;
  for (const auto& t : terms_) {
    if (t.logdeg[0] != lz || t.logdeg[1] != lw) continue;
    Term u = t;
    if (!sym::constrain(u, u.power[0] - Affine::constant(pz))) continue;
    if (!sym::constrain(u, u.power[1] - Affine::constant(pw))) continue;
    u.power = {};
    u.logdeg = {};
    ModeElement one;
    one.add_term(std::move(u));
    r += one;
  }
  return r;
}

std::string Series::dump(const FieldWindow& w) const {
  std::string s;
  for (const auto& [key, c] : expand(w)) {
    s += std::to_string(key.power[0]) + " " + std::to_string(key.power[1]) + " " + std::to_string(key.logdeg[0]) +
         " " + std::to_string(key.logdeg[1]) + " " + sym::to_string(key.mono) + " " + c.fraction() + "\n";
  }
  return s;
}

std::string field_name(FieldId f) {
  static const char* const names[] = {"x1", "x2", "x3", "y1", "y2", "y3"};
  return names[static_cast<int>(f)];
}

std::array<FieldId, 6> all_fields() {
  return {FieldId::X1, FieldId::X2, FieldId::X3, FieldId::Y1, FieldId::Y2, FieldId::Y3};
}

namespace {

Series W(int i) { return Series::generator(modes::w(i)); }
Series P(int i) { return Series::generator(modes::p(i)); }

}  // namespace

std::array<Series, 6> coordinate_fields(const Params& p) {
  const Scalar k(p.k), j(p.j), kj = k * j;
  const Series L = Series::log_of(kZ);
  const Series x1 = W(1) * L + Series::mode_sum(Kind::X, 1, kZ);
  const Series x3 = W(3) * L + Series::mode_sum(Kind::X, 3, kZ);
  const Series d = W(3) * x1 - W(1) * x3;
  const Series x2 = W(2) * L + Series::mode_sum(Kind::X, 2, kZ) + (k / 2) * (L * d);
  const Series y2 = P(2) * L + Series::mode_sum(Kind::Y, 2, kZ) + (j / 2) * (L * d);
  Series y1 = P(1) * L + Series::mode_sum(Kind::Y, 1, kZ);
  y1 += (k / 2) * (L * (P(2) * x3 - W(3) * y2));
  y1 += (j / 2) * (L * (W(2) * x3 - W(3) * x2));
  y1 += (kj / 6) * (W(3) * L * L * d);
  y1 += (kj / 6) * (x3 * L * d);
  Series y3 = P(3) * L + Series::mode_sum(Kind::Y, 3, kZ);
  y3 += (k / 2) * (L * (W(1) * y2 - P(2) * x1));
  y3 += (j / 2) * (L * (W(1) * x2 - W(2) * x1));
  y3 -= (kj / 6) * (W(1) * L * L * d);
  y3 -= (kj / 6) * (x1 * L * d);
  return {x1, x2, x3, y1, y2, y3};
}

std::array<Series, 6> current_fields(const Params& p) {
  const Scalar k(p.k), j(p.j), kj = k * j;
  const auto f = coordinate_fields(p);
  const Series &x1 = f[0], &x2 = f[1], &x3 = f[2], &y1 = f[3], &y2 = f[4], &y3 = f[5];
  const Series dx1 = x1.derive(kZ), dx2 = x2.derive(kZ), dx3 = x3.derive(kZ);
  const Series dy1 = y1.derive(kZ), dy2 = y2.derive(kZ), dy3 = y3.derive(kZ);
  Series a2 = dx2 - (k / 2) * (x3 * dx1) + (k / 2) * (x1 * dx3);
  Series b1 = dy1 + (j / 2) * (x3 * dx2 - x2 * dx3) + (k / 2) * (x3 * dy2 - y2 * dx3) - (kj / 3) * (x3 * x3 * dx1) +
              (kj / 3) * (x3 * x1 * dx3);
  Series b2 = dy2 - (j / 2) * (x3 * dx1) + (j / 2) * (x1 * dx3);
  Series b3 = dy3 + (j / 2) * (x2 * dx1 - x1 * dx2) + (k / 2) * (y2 * dx1 - x1 * dy2) - (kj / 3) * (x1 * x1 * dx3) +
              (kj / 3) * (x3 * x1 * dx1);
  return {dx1, a2, dx3, b1, b2, b3};
}

Series delta_series() {
  Series s;
  Term t;
  t.coeff = 1;
  t.nvars = 1;
  t.power[kZ] = Affine::var(0);
  t.power[kW] = -Affine::var(0) - Affine::constant(1);
  s.add_term(std::move(t));
  return s;
}

namespace {

Series lz() { return Series::log_of(kZ); }
Series lw() { return Series::log_of(kW); }

}  // namespace

Series log_series() { return lz() - lw() + Series::power_sum(1); }

Series rl_series() { return Series::power_sum(2) - Scalar(1, 2) * ((lz() - lw()) * Series::power_sum(1)); }

Series t_series() {
  const Series d = lz() - lw();
  Series t = Scalar(-2) * Series::power_sum(3) + d * Series::power_sum(2);
  t += Scalar(1, 6) * (lz() * lw() * d);
  t -= Scalar(1, 6) * ((lz() * lz() - Scalar(3) * (lz() * lw()) + lw() * lw()) * Series::power_sum(1));
  return t;
}

Series field_commutator(const Series& f, const Series& g, const Params& p, Variant v) {
  const Series gw = g.swapped();
  std::vector<Term> out;
  for (const auto& tf : f.terms()) {
    for (const auto& tg : gw.terms()) modes::bracket_terms(tf, tg, p, v, out);
  }
  Series r;
  for (auto& t : out) r.add_term(std::move(t));
  return r;
}

namespace {

struct Hats {
  std::array<Series, 6> z, w;
  explicit Hats(const Params& p) {
    auto f = coordinate_fields(p);
    for (int i = 0; i < 6; ++i) {
      z[i] = f[i].hat(kZ);
      w[i] = z[i].swapped();
    }
  }
};

constexpr int idx(FieldId f) { return static_cast<int>(f); }

bool listed(FieldId a, FieldId b) {
  using F = FieldId;
  if (idx(a) < 3 && idx(b) == idx(a) + 3) return true;
  return (a == F::Y1 && b == F::Y2) || (a == F::Y1 && b == F::X2) || (a == F::Y2 && b == F::Y3) ||
         (a == F::X2 && b == F::Y3) || (a == F::Y1 && b == F::Y1) || (a == F::Y1 && b == F::Y3) ||
         (a == F::Y3 && b == F::Y3);
}

/// -(kj/6)(a(z)^2 + a(w)^2 - 3a(z)a(w)) log + (kj/6) c (a(w) log w + a(z) log z) log
/// + kj c (a(w) - a(z)) rl + kj c c t, for [y1,y1] (a = x3^, c = w3) and
/// [y3,y3] (a = x1^, c = w1).
Series same_y(const Series& az, const Series& aw, const Series& c, const Scalar& kj) {
  const Series log = log_series();
  Series r = (-kj / 6) * ((az * az + aw * aw - Scalar(3) * (az * aw)) * log);
  r += (kj / 6) * (c * (aw * lw() + az * lz()) * log);
  r += kj * (c * (aw - az) * rl_series());
  r += kj * (c * c * t_series());
  return r;
}

Series listed_commutator(FieldId a, FieldId b, const Params& p) {
  using F = FieldId;
  const Scalar k(p.k), j(p.j), kj = k * j;
  const Hats h(p);
  const Series log = log_series(), rl = rl_series();
  const int x1 = 0, x2 = 1, x3 = 2, y2 = 4;
  if (idx(a) < 3 && idx(b) == idx(a) + 3) return log;
  if (a == F::Y1 && b == F::Y2) return (j / 2) * ((h.z[x3] - h.w[x3]) * log) + j * (W(3) * rl);
  if (a == F::Y1 && b == F::X2) return (k / 2) * ((h.z[x3] - h.w[x3]) * log) + k * (W(3) * rl);
  if (a == F::Y2 && b == F::Y3) return (j / 2) * ((h.z[x1] - h.w[x1]) * log) + j * (W(1) * rl);
  if (a == F::X2 && b == F::Y3) return (k / 2) * ((h.z[x1] - h.w[x1]) * log) + k * (W(1) * rl);
  if (a == F::Y1 && b == F::Y1) return same_y(h.z[x3], h.w[x3], W(3), kj);
  if (a == F::Y3 && b == F::Y3) return same_y(h.z[x1], h.w[x1], W(1), kj);
  // [y1, y3]
  Series r = (k / 2) * ((h.w[y2] - h.z[y2]) * log) + (j / 2) * ((h.w[x2] - h.z[x2]) * log);
  r += (kj / 6) * ((h.z[x3] * h.z[x1] + h.w[x1] * h.w[x3] - Scalar(3) * (h.z[x3] * h.w[x1])) * log);
  r += (kj / 6) * ((W(3) * h.w[x1] * lw() - Scalar(2) * (W(3) * h.z[x1] * lz()) + W(1) * h.z[x3] * lz() -
                    Scalar(2) * (W(1) * h.w[x3] * lw())) *
                   log);
  r += kj * ((W(1) * h.z[x3] - W(3) * h.w[x1]) * rl);
  r -= (j * W(2) + k * P(2)) * rl;
  r -= kj * (W(3) * W(1) * t_series());
  return r;
}

void add_params(VerificationReport& r, const Params& p, const FieldWindow& w, Variant v) {
  r.add_param("k", std::to_string(p.k));
  r.add_param("j", std::to_string(p.j));
  r.add_param("N", std::to_string(w.N));
  r.add_param("L", std::to_string(w.L));
  r.add_param("monomial-window", std::to_string(w.monomials));
  r.variant = v.name();
}

std::string pair_label(const std::string& a, const std::string& b) { return "[" + a + "(z)," + b + "(w)]"; }

}  // namespace

Series expected_commutator(FieldId a, FieldId b, const Params& p) {
  if (listed(a, b)) return listed_commutator(a, b, p);
  if (listed(b, a)) return -listed_commutator(b, a, p).swapped();
  return {};
}

Series expected_current_commutator(int a, int b, const Params& p) {
  const auto basis = lie::basis();
  const auto currents = current_fields(p);
  const lie::LieElement c = lie::bracket_basis(basis[a], basis[b], p);
  Series r;
  for (const auto& [e, coef] : c.coefficients()) {
    for (int i = 0; i < 6; ++i) {
      if (basis[i] == e) r += coef * (currents[i].swapped() * delta_series());
    }
  }
  const Scalar pairing = lie::pairing(lie::LieElement(basis[a]), lie::LieElement(basis[b]));
  if (!pairing.is_zero()) r += pairing * delta_series().derive(kW);
  return r;
}

void compare_series(Comparator& cmp, const std::string& label, const Series& expected, const Series& actual,
                    const FieldWindow& w) {
  const auto e = expected.expand(w);
  const auto a = actual.expand(w);
  auto describe = [&](const sym::CellMono& key) {
    return label + " at z^" + std::to_string(key.power[0]) + " w^" + std::to_string(key.power[1]) + " log(z)^" +
           std::to_string(key.logdeg[0]) + " log(w)^" + std::to_string(key.logdeg[1]) + " " + sym::to_string(key.mono);
  };
  auto ie = e.begin();
  auto ia = a.begin();
  while (ie != e.end() || ia != a.end()) {
    cmp.count();
    if (ia == a.end() || (ie != e.end() && ie->first < ia->first)) {
      cmp.record_mismatch(describe(ie->first), ie->second, 0);
      ++ie;
    } else if (ie == e.end() || ia->first < ie->first) {
      cmp.record_mismatch(describe(ia->first), 0, ia->second);
      ++ia;
    } else {
      if (ie->second != ia->second) cmp.record_mismatch(describe(ie->first), ie->second, ia->second);
      ++ie;
      ++ia;
    }
  }
}

VerificationReport verify_theorem_principal(const Params& p, const FieldWindow& w, Variant v) {
  VerificationReport r;
  r.check = "fields.commutators";
  add_params(r, p, w, v);
  Comparator cmp;
  const auto f = coordinate_fields(p);
  for (auto a : all_fields()) {
    for (auto b : all_fields()) {
      compare_series(cmp, pair_label(field_name(a), field_name(b)), expected_commutator(a, b, p),
                     field_commutator(f[idx(a)], f[idx(b)], p, v), w);
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport verify_current_algebra(const Params& p, const FieldWindow& w, Variant v) {
  VerificationReport r;
  r.check = "currents.commutators";
  add_params(r, p, w, v);
  Comparator cmp;
  const auto c = current_fields(p);
  const auto basis = lie::basis();
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      compare_series(cmp, pair_label(lie::name(basis[a]), lie::name(basis[b])), expected_current_commutator(a, b, p),
                     field_commutator(c[a], c[b], p, v), w);
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_consistency_square(const Params& p, const FieldWindow& w, Variant v) {
  VerificationReport r;
  r.check = "currents.square";
  add_params(r, p, w, v);
  Comparator cmp;
  const auto f = coordinate_fields(p);
  for (auto a : all_fields()) {
    for (auto b : all_fields()) {
      const Series routed = expected_commutator(a, b, p).derive(kZ).derive(kW);
      const Series direct = field_commutator(f[idx(a)].derive(kZ), f[idx(b)].derive(kZ), p, v);
      compare_series(cmp, "d" + pair_label(field_name(a), field_name(b)), routed, direct, w);
    }
  }
  cmp.finish(r);
  return r;
}

namespace {

int epsilon(int i, int j, int k) {
  // indices 1..3
  if (i == j || j == k || i == k) return 0;
  const bool even = (i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1);
  return even ? 1 : -1;
}

}  // namespace

VerificationReport check_special_cases(const FieldWindow& w, Variant v) {
  VerificationReport r;
  r.check = "fields.special-cases";
  r.add_param("N", std::to_string(w.N));
  r.add_param("monomial-window", std::to_string(w.monomials));
  r.variant = v.name();
  Comparator cmp;
  const Series L = Series::log_of(kZ);
  for (const Params p : {Params{0, 0}, Params{0, 1}}) {
    const std::string tag = "(" + std::to_string(p.k) + "," + std::to_string(p.j) + ") ";
    const auto f = coordinate_fields(p);
    std::array<Series, 6> shape;
    for (int i = 1; i <= 3; ++i) {
      shape[i - 1] = W(i) * L + Series::mode_sum(Kind::X, i, kZ);
      shape[i + 2] = P(i) * L + Series::mode_sum(Kind::Y, i, kZ);
    }
    if (p.j == 1) {
      for (int i = 1; i <= 3; ++i) {
        for (int a = 1; a <= 3; ++a) {
          for (int b = 1; b <= 3; ++b) {
            const int e = epsilon(i, a, b);
            if (e) shape[i + 2] += Scalar(e, 2) * (W(a) * shape[b - 1] * L);
          }
        }
      }
    }
    for (int i = 0; i < 6; ++i) {
      compare_series(cmp, tag + "field " + field_name(all_fields()[i]), shape[i], f[i], w);
    }
    const Series log = log_series(), rl = rl_series();
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        Series want;
        if (a < 3 && b == a + 3) want = log;
        if (b < 3 && a == b + 3) want = -log.swapped();
        if (a >= 3 && b >= 3 && p.j == 1) {
          for (int c = 1; c <= 3; ++c) {
            const int e = epsilon(a - 2, b - 2, c);
            if (!e) continue;
            const Series xz = Series::mode_sum(Kind::X, c, kZ);
            want += Scalar(e) * (W(c) * rl) + Scalar(e, 2) * ((xz - xz.swapped()) * log);
          }
        }
        compare_series(cmp, tag + pair_label(field_name(all_fields()[a]), field_name(all_fields()[b])), want,
                       field_commutator(f[a], f[b], p, v), w);
      }
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_taylor_lemma(const Series& a, const std::string& name, int n, const FieldWindow& w,
                                      bool factorial) {
  VerificationReport r;
  r.check = factorial ? "taylor.factorial" : "taylor.printed";
  r.add_param("field", name);
  r.add_param("N", std::to_string(n));
  r.add_param("window", std::to_string(w.N));
  for (const auto& [key, c] : a.expand(w)) {
    if ((key.logdeg[0] || key.logdeg[1]) && !c.is_zero()) {
      throw std::invalid_argument("Taylor expansion needs a log-free distribution, " + name + " is not");
    }
  }
  Comparator cmp;
  Series dn = delta_series();
  for (int i = 0; i < n; ++i) dn = dn.derive(kW);
  const Series lhs = dn * a;
  Series sum;
  Series da = a;
  Scalar fact = 1;
  for (int jdx = 0; jdx <= n; ++jdx) {
    if (jdx > 0) {
      da = da.derive(kZ);
      fact *= Scalar(jdx);
    }
    // (z - w)^jdx
    Series binom;
    Scalar c = 1;
    for (int i = 0; i <= jdx; ++i) {
      Series mono = Series::scalar(((jdx - i) % 2 ? -c : c));
      binom += mono.shifted(kZ, i).shifted(kW, jdx - i);
      c = c * Scalar(jdx - i) / Scalar(i + 1);
    }
    sum += (factorial ? fact.inverse() : Scalar(1)) * (da.swapped() * binom);
  }
  compare_series(cmp, "taylor N=" + std::to_string(n), lhs, dn * sum, w);
  cmp.finish(r);
  r.mark_reported();
  return r;
}

}  // namespace nilva::fields
