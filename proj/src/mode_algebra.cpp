#include "nilva/mode_algebra.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace nilva::modes {

using sym::Affine;
using sym::Factor;
using sym::SymGen;
using sym::Term;

std::string fix_name(Fix f) {
  switch (f) {
    case Fix::W2Y3: return "[w2,y3_m]";
    case Fix::HalfSigns: return "zero-mode-half-signs";
    case Fix::ZeroPairs: return "zero-mode-pair-signs";
    case Fix::Count: break;
  }
  return "?";
}

std::string fix_description(Fix f) {
  switch (f) {
    case Fix::W2Y3: return "[w2,y3_m]: printed (k/2)x3_m, corrected (k/2)x1_m";
    case Fix::HalfSigns:
      return "[p1,y2_m], [y1_n,p2], [p1,x2_m], [y1_n,w2], [p2,y3_m], [y2_n,p3], [w2,y3_m], [x2_n,p3]: "
             "printed +(k/2) or +(j/2), corrected -(k/2) or -(j/2)";
    case Fix::ZeroPairs:
      return "[p1,w2], [p1,p2], [w2,p3], [p2,p3]: printed kw3, jw3, kw1, jw1, corrected with opposite sign";
    case Fix::Count: break;
  }
  return "?";
}

std::vector<std::string> fix_entries(Fix f) {
  switch (f) {
    case Fix::W2Y3: return {"[w2,y3_m]"};
    case Fix::HalfSigns:
      return {"[p1,y2_m]", "[y1_n,p2]", "[p1,x2_m]", "[y1_n,w2]", "[p2,y3_m]", "[y2_n,p3]", "[w2,y3_m]", "[x2_n,p3]"};
    case Fix::ZeroPairs: return {"[p1,w2]", "[p1,p2]", "[w2,p3]", "[p2,p3]"};
    case Fix::Count: break;
  }
  return {};
}

std::string Variant::name() const {
  if (*this == as_written()) return "as-written";
  if (*this == corrected()) return "corrected";
  std::string s = "as-written";
  for (int i = 0; i < kFixCount; ++i) {
    if (has(static_cast<Fix>(i))) s += "+" + fix_name(static_cast<Fix>(i));
  }
  return s;
}

namespace {

SymGen gen(Kind k, int i, const Affine& mode) { return {k, static_cast<std::uint8_t>(i), mode}; }
SymGen gx(int i, const Affine& m) { return gen(Kind::X, i, m); }
SymGen gy(int i, const Affine& m) { return gen(Kind::Y, i, m); }
SymGen gw(int i) { return gen(Kind::W, i, Affine{}); }
SymGen gp(int i) { return gen(Kind::P, i, Affine{}); }
Factor inv(const Affine& a, int power = 1) { return {a, -power}; }

constexpr int code(Kind k, int i) { return static_cast<int>(k) * 3 + (i - 1); }

/// One summand of a table entry before its constraints are imposed.
struct RawPiece {
  Scalar coeff;
  std::vector<SymGen> gens;
  std::vector<Factor> factors;
  std::vector<Affine> constraints;
  bool fresh = false;
};

/// Collects the pieces of one table entry [a_n, b_m].
struct Builder {
  int base;
  Affine n, m;
  Scalar k, j;
  std::vector<RawPiece> out;

  Affine l() const { return Affine::var(base); }

  /// c * prod(factors) * gens, with the listed constraints (each = 0).
  void add(const Scalar& c, std::vector<SymGen> gens, std::vector<Factor> factors = {},
           std::vector<Affine> constraints = {}, bool fresh = false) {
    if (c.is_zero()) return;
    out.push_back({c, std::move(gens), std::move(factors), std::move(constraints), fresh});
  }

  /// (c/2) x^xi_{n+m} (1/n + 1/m) + c w_wi delta_{n,-m} / m^2
  void linear_pair(const Scalar& c, int xi, int wi) {
    add(c / 2, {gx(xi, n + m)}, {inv(n)});
    add(c / 2, {gx(xi, n + m)}, {inv(m)});
    add(c, {gw(wi)}, {inv(m, 2)}, {n + m});
  }

  /// [y^s_n, y^s_m] with s = 1 (i = 3) or s = 3 (i = 1).
  void yy_same(int i) {
    const Scalar kj = k * j;
    add(-2 * kj, {gw(i), gw(i)}, {inv(m, 3)}, {n + m});
    add(-kj, {gw(i), gx(i, n + m)}, {inv(m, 2)});
    add(kj, {gw(i), gx(i, n + m)}, {inv(n, 2)});
    add(kj / 2, {gx(i, n + l()), gx(i, m - l())}, {inv(l())}, {}, true);
    add(-kj / 6, {gx(i, l()), gx(i, m + n - l())}, {inv(m)}, {}, true);
    add(kj / 6, {gx(i, l()), gx(i, m + n - l())}, {inv(n)}, {}, true);
  }

  void y1y3() {
    const Scalar kj = k * j;
    add(-k / 2, {gy(2, n + m)}, {inv(n)});
    add(-k / 2, {gy(2, n + m)}, {inv(m)});
    add(-j / 2, {gx(2, n + m)}, {inv(n)});
    add(-j / 2, {gx(2, n + m)}, {inv(m)});
    add(-k, {gp(2)}, {inv(m, 2)}, {n + m});
    add(-j, {gw(2)}, {inv(m, 2)}, {n + m});
    add(2 * kj, {gw(1), gw(3)}, {inv(m, 3)}, {n + m});
    add(kj, {gw(1), gx(3, n + m)}, {inv(m, 2)});
    add(-kj, {gw(3), gx(1, n + m)}, {inv(n, 2)});
    add(-kj / 2, {gx(3, n + l()), gx(1, m - l())}, {inv(l())}, {}, true);
    add(kj / 6, {gx(1, l()), gx(3, m + n - l())}, {inv(m)}, {}, true);
    add(-kj / 6, {gx(1, l()), gx(3, m + n - l())}, {inv(n)}, {}, true);
  }

  /// c * sum_l x^a_l x^b_{s-l}
  void conv(const Scalar& c, int a, int b, const Affine& s) {
    add(c, {gx(a, l()), gx(b, s - l())}, {}, {}, true);
  }
};

/// Fills the printed entry [a, b] if it is listed; returns whether it is.
bool direct(int ca, int cb, Builder& t, Variant v) {
  const Scalar &k = t.k, &j = t.j;
  const Scalar kj = k * j;
  const Affine &n = t.n, &m = t.m;
  constexpr int X1 = code(Kind::X, 1), X2 = code(Kind::X, 2), X3 = code(Kind::X, 3);
  constexpr int Y1 = code(Kind::Y, 1), Y2 = code(Kind::Y, 2), Y3 = code(Kind::Y, 3);
  constexpr int W1 = code(Kind::W, 1), W2 = code(Kind::W, 2), W3 = code(Kind::W, 3);
  constexpr int P1 = code(Kind::P, 1), P2 = code(Kind::P, 2), P3 = code(Kind::P, 3);
  const Scalar hs = v.has(Fix::HalfSigns) ? -1 : 1;
  const Scalar ps = v.has(Fix::ZeroPairs) ? -1 : 1;
  auto pair = [](int a, int b) { return a * 16 + b; };
  switch (pair(ca, cb)) {
    case pair(X1, Y1):
    case pair(X2, Y2):
    case pair(X3, Y3):
      t.add(1, {}, {inv(m)}, {n + m});
      return true;
    case pair(Y1, Y2): t.linear_pair(j, 3, 3); return true;
    case pair(Y1, X2): t.linear_pair(k, 3, 3); return true;
    case pair(Y2, Y3): t.linear_pair(j, 1, 1); return true;
    case pair(X2, Y3): t.linear_pair(k, 1, 1); return true;
    case pair(Y1, Y1): t.yy_same(3); return true;
    case pair(Y3, Y3): t.yy_same(1); return true;
    case pair(Y1, Y3): t.y1y3(); return true;
    case pair(W1, Y1):
    case pair(W2, Y2):
    case pair(W3, Y3):
      t.add(1, {}, {}, {m});
      return true;
    case pair(X1, P1):
    case pair(X2, P2):
    case pair(X3, P3):
      t.add(-1, {}, {}, {n});
      return true;
    case pair(P1, Y2): t.add(hs * j / 2, {gx(3, m)}); return true;
    case pair(Y1, P2): t.add(hs * j / 2, {gx(3, n)}); return true;
    case pair(P1, X2): t.add(hs * k / 2, {gx(3, m)}); return true;
    case pair(Y1, W2): t.add(hs * k / 2, {gx(3, n)}); return true;
    case pair(P2, Y3): t.add(hs * j / 2, {gx(1, m)}); return true;
    case pair(Y2, P3): t.add(hs * j / 2, {gx(1, n)}); return true;
    case pair(W2, Y3): t.add(hs * k / 2, {gx(v.has(Fix::W2Y3) ? 1 : 3, m)}); return true;
    case pair(X2, P3): t.add(hs * k / 2, {gx(1, n)}); return true;
    case pair(P1, W2): t.add(ps * k, {gw(3)}); return true;
    case pair(P1, P2): t.add(ps * j, {gw(3)}); return true;
    case pair(W2, P3): t.add(ps * k, {gw(1)}); return true;
    case pair(P2, P3): t.add(ps * j, {gw(1)}); return true;
    case pair(P1, P3):
      t.add(j, {gw(2)});
      t.add(k, {gp(2)});
      return true;
    case pair(P1, Y1): t.conv(-kj / 6, 3, 3, m); return true;
    case pair(Y1, P1): t.conv(kj / 6, 3, 3, n); return true;
    case pair(P1, Y3):
      t.conv(kj / 6, 1, 3, m);
      t.add(k / 2, {gy(2, m)});
      t.add(j / 2, {gx(2, m)});
      return true;
    case pair(Y1, P3):
      t.conv(-kj / 6, 1, 3, n);
      t.add(k / 2, {gy(2, n)});
      t.add(j / 2, {gx(2, n)});
      return true;
    case pair(P3, Y3): t.conv(-kj / 6, 1, 1, m); return true;
    case pair(Y3, P3): t.conv(kj / 6, 1, 1, n); return true;
    default: return false;
  }
}

int code_of(Kind k, int i) { return code(k, i); }

const std::array<std::array<bool, 12>, 12>& listed_table() {
  static const auto table = [] {
    std::array<std::array<bool, 12>, 12> r{};
    for (int a = 0; a < 12; ++a) {
      for (int b = 0; b < 12; ++b) {
        Builder t{0, Affine::constant(1), Affine::constant(1), 1, 1, {}};
        r[a][b] = direct(a, b, t, Variant::as_written());
      }
    }
    return r;
  }();
  return table;
}

}  // namespace

bool kinds_commute(Kind a, int ia, Kind b, int ib) {
  const auto& t = listed_table();
  const int ca = code_of(a, ia), cb = code_of(b, ib);
  return !t[ca][cb] && !t[cb][ca];
}

namespace {

/// Printed entry [a, b], or minus the printed entry [b, a], or nothing.
std::vector<RawPiece> raw_entry(const SymGen& a, const SymGen& b, int next_var, const Params& p, Variant v) {
  const int ca = code_of(a.kind, a.index), cb = code_of(b.kind, b.index);
  Builder t{next_var, a.mode, b.mode, Scalar(p.k), Scalar(p.j), {}};
  if (direct(ca, cb, t, v)) return std::move(t.out);
  Builder s{next_var, b.mode, a.mode, Scalar(p.k), Scalar(p.j), {}};
  if (direct(cb, ca, s, v)) {
    for (auto& piece : s.out) piece.coeff = -piece.coeff;
    return std::move(s.out);
  }
  return {};
}

/// Multiplies `shell` by the piece and imposes its constraints.
bool attach(Term& t, const RawPiece& r) {
  t.coeff *= r.coeff;
  if (r.fresh) {
    if (t.nvars >= sym::kMaxVars) throw std::overflow_error("too many summation variables");
    ++t.nvars;
  }
  t.factors.insert(t.factors.end(), r.factors.begin(), r.factors.end());
  t.gens.insert(t.gens.end(), r.gens.begin(), r.gens.end());
  for (const auto& con : r.constraints) {
    if (!sym::constrain(t, con)) return false;
  }
  return sym::normalize(t);
}

}  // namespace

void assert_commuting(const std::vector<SymGen>& gens) {
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!kinds_commute(gens[a].kind, gens[a].index, gens[b].kind, gens[b].index)) {
        throw std::runtime_error("ordering ambiguity: " + sym::kind_name(gens[a].kind) +
                                 std::to_string(gens[a].index) + " and " + sym::kind_name(gens[b].kind) +
                                 std::to_string(gens[b].index) + " in one monomial");
      }
    }
  }
}

std::vector<Term> table_entry(const SymGen& a, const SymGen& b, int next_var, const Params& p, Variant v) {
  std::vector<Term> out;
  for (const auto& r : raw_entry(a, b, next_var, p, v)) {
    Term t;
    t.coeff = 1;
    t.nvars = next_var;
    if (attach(t, r)) out.push_back(std::move(t));
  }
  return out;
}

ModeElement ModeElement::scalar(const Scalar& c) {
  ModeElement e;
  Term t;
  t.coeff = c;
  e.add_term(std::move(t));
  return e;
}

ModeElement ModeElement::generator(const Generator& g, const Scalar& c) { return monomial({g}, c); }

ModeElement ModeElement::monomial(const Monomial& mono, const Scalar& c) {
  ModeElement e;
  Term t;
  t.coeff = c;
  for (const auto& g : mono) t.gens.push_back({g.kind, g.index, Affine::constant(g.mode)});
  e.add_term(std::move(t));
  return e;
}

void ModeElement::add_term(Term t) {
  assert_commuting(t.gens);
  if (!sym::normalize(t)) return;
  terms_.push_back(std::move(t));
}

ModeElement ModeElement::operator-() const {
  ModeElement r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ModeElement& ModeElement::operator+=(const ModeElement& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

ModeElement& ModeElement::operator-=(const ModeElement& o) { return *this += -o; }

ModeElement operator*(const Scalar& c, ModeElement a) {
  if (c.is_zero()) return {};
  for (auto& t : a.terms_) t.coeff *= c;
  return a;
}

std::map<Monomial, Scalar> ModeElement::expand(std::int64_t window) const {
  sym::Expansion e;
  sym::ExpandBounds b;
  b.mode_window = window;
  for (const auto& t : terms_) sym::expand_term(t, b, e);
  std::map<Monomial, Scalar> r;
  for (auto& [key, c] : e) {
    if (c.is_zero()) continue;
    r.emplace(key.mono, c);
  }
  return r;
}

Scalar ModeElement::coefficient_of_monomial(const Monomial& m) const {
  std::int64_t window = 0;
  for (const auto& g : m) window = std::max(window, g.mode < 0 ? -g.mode : g.mode);
  Monomial sorted = m;
  std::sort(sorted.begin(), sorted.end());
  auto e = expand(window);
  auto it = e.find(sorted);
  return it == e.end() ? Scalar(0) : it->second;
}

int ModeElement::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.gens.size()));
  return d;
}

std::string ModeElement::dump(std::int64_t window) const {
  std::string s;
  for (const auto& [m, c] : expand(window)) s += sym::to_string(m) + " " + c.fraction() + "\n";
  return s;
}

ModeElement bracket_table(const Generator& a, const Generator& b, const Params& p, Variant v) {
  ModeElement r;
  SymGen sa{a.kind, a.index, Affine::constant(a.mode)};
  SymGen sb{b.kind, b.index, Affine::constant(b.mode)};
  for (auto& t : table_entry(sa, sb, 0, p, v)) r.add_term(std::move(t));
  return r;
}

void bracket_terms(const Term& a, const Term& b, const Params& p, Variant v, std::vector<Term>& out, int max_degree) {
  if (a.gens.empty() || b.gens.empty()) return;
  const Term base = sym::multiply_terms(a, b);
  const std::size_t na = a.gens.size();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t jdx = na; jdx < base.gens.size(); ++jdx) {
      auto raw = raw_entry(base.gens[i], base.gens[jdx], base.nvars, p, v);
      if (raw.empty()) continue;
      Term shell = base;
      shell.gens.clear();
      for (std::size_t g = 0; g < base.gens.size(); ++g) {
        if (g != i && g != jdx) shell.gens.push_back(base.gens[g]);
      }
      for (const auto& r : raw) {
        Term t = shell;
        if (!attach(t, r)) continue;
        if (static_cast<int>(t.gens.size()) > max_degree) throw std::runtime_error("cubic term encountered");
        assert_commuting(t.gens);
        out.push_back(std::move(t));
      }
    }
  }
}

ModeElement bracket(const ModeElement& a, const ModeElement& b, const Params& p, Variant v) {
  std::vector<Term> out;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) bracket_terms(ta, tb, p, v, out);
  }
  ModeElement r;
  for (auto& t : out) r.add_term(std::move(t));
  return r;
}

std::vector<Generator> generators(std::int64_t grid) {
  std::vector<Generator> r;
  for (int i = 1; i <= 3; ++i) {
    for (std::int64_t n = -grid; n <= grid; ++n) r.push_back(x(i, n));
  }
  for (int i = 1; i <= 3; ++i) {
    for (std::int64_t n = -grid; n <= grid; ++n) r.push_back(y(i, n));
  }
  for (int i = 1; i <= 3; ++i) r.push_back(w(i));
  for (int i = 1; i <= 3; ++i) r.push_back(p(i));
  return r;
}

namespace {

void add_params(VerificationReport& r, const Params& p, Variant v) {
  r.add_param("k", std::to_string(p.k));
  r.add_param("j", std::to_string(p.j));
  r.variant = v.name();
}

std::string bracket_name(const Generator& a, const Generator& b) {
  return "[" + sym::to_string(a) + "," + sym::to_string(b) + "]";
}

/// Records every nonzero coefficient of `e` (expected to vanish).
void expect_zero(Comparator& cmp, const std::string& label, const ModeElement& e, std::int64_t window) {
  cmp.count();
  for (const auto& [mono, c] : e.expand(window)) cmp.record_mismatch(label + " at " + sym::to_string(mono), 0, c);
}

struct Triple {
  Generator a, b, c;
};

/// Runs Jacobi on the triples, split into contiguous chunks across workers;
/// the merged result is independent of the worker count.
void run_jacobi(const std::vector<Triple>& triples, const Params& p, Variant v, const JacobiOptions& o,
                VerificationReport& r) {
  const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(triples.size())));
  std::vector<Comparator> parts(jobs);
  std::vector<std::string> errors(jobs);
  auto work = [&](int w) {
    const std::size_t lo = triples.size() * w / jobs, hi = triples.size() * (w + 1) / jobs;
    try {
      for (std::size_t t = lo; t < hi; ++t) {
        const auto& [a, b, c] = triples[t];
        const ModeElement A = ModeElement::generator(a), B = ModeElement::generator(b),
                          C = ModeElement::generator(c);
        ModeElement jac = bracket(A, bracket(B, C, p, v), p, v);
        jac += bracket(B, bracket(C, A, p, v), p, v);
        jac += bracket(C, bracket(A, B, p, v), p, v);
        expect_zero(parts[w], "J(" + sym::to_string(a) + "," + sym::to_string(b) + "," + sym::to_string(c) + ")",
                    jac, o.window);
      }
    } catch (const std::exception& e) {
      errors[w] = e.what();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  Comparator merged;
  for (const auto& part : parts) {
    merged.count(part.comparisons());
    if (part.first()) merged.record_mismatch(part.first()->location, part.first()->expected, part.first()->actual);
  }
  merged.finish(r);
  std::uint64_t total = 0;
  for (const auto& part : parts) total += part.mismatches();
  if (total) r.notes.push_back(std::to_string(total) + " nonzero Jacobi coefficients");
}

}  // namespace

VerificationReport check_skew_symmetry(const Params& p, std::int64_t grid, std::int64_t window, Variant v) {
  VerificationReport r;
  r.check = "modes.skew";
  add_params(r, p, v);
  r.add_param("grid", std::to_string(grid));
  Comparator cmp;
  const auto gens = generators(grid);
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      if (b < a) continue;
      ModeElement s = bracket_table(a, b, p, v) + bracket_table(b, a, p, v);
      expect_zero(cmp, bracket_name(a, b) + "+" + bracket_name(b, a), s, window);
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_jacobi(const Params& p, const JacobiOptions& o, Variant v) {
  VerificationReport r;
  r.check = "modes.jacobi";
  add_params(r, p, v);
  r.add_param("grid", std::to_string(o.grid));
  r.add_param("window", std::to_string(o.window));
  const auto gens = generators(o.grid);
  std::vector<Triple> triples;
  triples.reserve(gens.size() * gens.size() * gens.size());
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      for (const auto& c : gens) triples.push_back({a, b, c});
    }
  }
  run_jacobi(triples, p, v, o, r);
  return r;
}

VerificationReport check_jacobi_y1y1y3(const Params& p, const JacobiOptions& o, Variant v) {
  VerificationReport r;
  r.check = "modes.jacobi-y1y1y3";
  add_params(r, p, v);
  r.add_param("grid", std::to_string(o.grid));
  r.add_param("window", std::to_string(o.window));
  std::vector<Triple> triples;
  for (std::int64_t l = -o.grid; l <= o.grid; ++l) {
    for (std::int64_t n = -o.grid; n <= o.grid; ++n) {
      for (std::int64_t m = -o.grid; m <= o.grid; ++m) triples.push_back({y(1, l), y(1, n), y(3, m)});
    }
  }
  run_jacobi(triples, p, v, o, r);
  return r;
}

}  // namespace nilva::modes
