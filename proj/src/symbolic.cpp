#include "nilva/symbolic.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>

namespace nilva::sym {

namespace {

std::atomic<std::uint64_t> g_leaves{0};

template <typename F>
void for_each_affine(Term& t, F&& f) {
  for (auto& fac : t.factors) f(fac.form);
  for (auto& g : t.gens) f(g.mode);
  f(t.power[0]);
  f(t.power[1]);
}

}  // namespace

Affine& Affine::operator+=(const Affine& o) {
  for (int i = 0; i < kMaxVars; ++i) c[i] += o.c[i];
  k += o.k;
  return *this;
}

Affine& Affine::operator-=(const Affine& o) {
  for (int i = 0; i < kMaxVars; ++i) c[i] -= o.c[i];
  k -= o.k;
  return *this;
}

Affine& Affine::operator*=(std::int64_t s) {
  for (auto& x : c) x = static_cast<std::int32_t>(x * s);
  k *= s;
  return *this;
}

void Affine::substitute(int v, const Affine& value) {
  const std::int64_t coef = c[v];
  if (coef == 0) return;
  c[v] = 0;
  Affine add = value;
  add *= coef;
  *this += add;
}

void Affine::remove_var(int v) {
  for (int i = v; i + 1 < kMaxVars; ++i) c[i] = c[i + 1];
  c[kMaxVars - 1] = 0;
}

Affine Affine::shifted(int by) const {
  Affine r;
  r.k = k;
  for (int i = 0; i < kMaxVars; ++i) {
    if (c[i] == 0) continue;
    if (i + by >= kMaxVars) throw std::overflow_error("too many summation variables");
    r.c[i + by] = c[i];
  }
  return r;
}

std::string Affine::str() const {
  std::string s;
  for (int i = 0; i < kMaxVars; ++i) {
    if (c[i] == 0) continue;
    if (c[i] == 1) {
      s += s.empty() ? "" : "+";
    } else if (c[i] == -1) {
      s += "-";
    } else {
      s += (c[i] > 0 && !s.empty() ? "+" : "") + std::to_string(c[i]) + "*";
    }
    s += "v" + std::to_string(i);
  }
  if (k != 0 || s.empty()) s += (k > 0 && !s.empty() ? "+" : "") + std::to_string(k);
  return s;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::X: return "x";
    case Kind::Y: return "y";
    case Kind::W: return "w";
    case Kind::P: return "p";
  }
  return "?";
}

std::string to_string(const Generator& g) {
  std::string s = kind_name(g.kind) + std::to_string(g.index);
  if (g.kind == Kind::X || g.kind == Kind::Y) s += "_" + std::to_string(g.mode);
  return s;
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& g : m) s += (s.empty() ? "" : "*") + to_string(g);
  return s;
}

bool normalize(Term& t) {
  auto it = t.factors.begin();
  while (it != t.factors.end()) {
    if (!it->form.is_constant()) {
      ++it;
      continue;
    }
    const std::int64_t v = it->form.k;
    if (v == 0) {
      if (it->power < 0) return false;
      if (it->power > 0) return false;
    } else {
      t.coeff *= Scalar(v).pow(it->power);
    }
    it = t.factors.erase(it);
  }
  return !t.coeff.is_zero();
}

bool constrain(Term& t, Affine form) {
  if (form.is_constant()) return form.k == 0;
  std::int64_t g = 0;
  for (int i = 0; i < kMaxVars; ++i) g = std::gcd(g, static_cast<std::int64_t>(std::abs(form.c[i])));
  if (form.k % g != 0) return false;
  if (g != 1) {
    for (auto& x : form.c) x = static_cast<std::int32_t>(x / g);
    form.k /= g;
  }
  int v = -1;
  for (int i = 0; i < t.nvars; ++i) {
    if (form.c[i] == 1 || form.c[i] == -1) {
      v = i;
      break;
    }
  }
  if (v < 0) throw std::runtime_error("non-unimodular index constraint " + form.str());
  // c_v v + rest = 0  =>  v = -c_v * rest
  const std::int64_t cv = form.c[v];
  Affine value = form;
  value.c[v] = 0;
  value *= -cv;
  for_each_affine(t, [&](Affine& a) {
    a.substitute(v, value);
    a.remove_var(v);
  });
  --t.nvars;
  return normalize(t);
}

namespace {

bool has_mode(Kind k) { return k == Kind::X || k == Kind::Y; }

void emit(const Term& t, Expansion& out) {
  g_leaves.fetch_add(1, std::memory_order_relaxed);
  CellMono key;
  key.power = {t.power[0].k, t.power[1].k};
  key.logdeg = {t.logdeg[0], t.logdeg[1]};
  key.mono.reserve(t.gens.size());
  for (const auto& g : t.gens) key.mono.push_back({g.kind, g.index, g.mode.k});
  std::sort(key.mono.begin(), key.mono.end());
  auto [it, inserted] = out.try_emplace(std::move(key), t.coeff);
  if (!inserted) it->second += t.coeff;
}

void enumerate(const Term& t, const ExpandBounds& b, Expansion& out) {
  for (const auto& g : t.gens) {
    if (has_mode(g.kind) && g.mode.is_constant() && std::abs(g.mode.k) > b.mode_window) return;
  }
  if (b.bound_powers) {
    for (const auto& p : t.power) {
      if (p.is_constant() && std::abs(p.k) > b.power_window) return;
    }
  }
  if (t.nvars == 0) {
    emit(t, out);
    return;
  }
  // Pick a bounded affine quantity involving a summation variable.
  const Affine* pin = nullptr;
  std::int64_t bound = 0;
  int single_var = -1;
  auto consider = [&](const Affine& a, std::int64_t bnd) {
    if (pin && single_var < 0) return;
    int nz = 0, unit = -1, any = -1;
    for (int i = 0; i < t.nvars; ++i) {
      if (a.c[i] == 0) continue;
      ++nz;
      any = i;
      if (a.c[i] == 1 || a.c[i] == -1) unit = i;
    }
    if (nz == 0) return;
    if (unit >= 0) {
      pin = &a;
      bound = bnd;
      single_var = -1;
    } else if (nz == 1 && !pin) {
      pin = &a;
      bound = bnd;
      single_var = any;
    }
  };
  for (const auto& g : t.gens) {
    if (has_mode(g.kind)) consider(g.mode, b.mode_window);
  }
  if (b.bound_powers) {
    for (const auto& p : t.power) consider(p, b.power_window);
  }
  if (!pin) throw std::runtime_error("unbounded summation in term expansion");
  if (single_var < 0) {
    for (std::int64_t v = -bound; v <= bound; ++v) {
      Term u = t;
      if (constrain(u, *pin - Affine::constant(v))) enumerate(u, b, out);
    }
  } else {
    // a = c*l + rest with |c| > 1: enumerate l over values keeping a in range.
    const std::int64_t c = pin->c[single_var];
    const std::int64_t span = (bound + std::abs(pin->k)) / std::abs(c) + 1;
    for (std::int64_t l = -span; l <= span; ++l) {
      Term u = t;
      if (constrain(u, Affine::var(single_var) - Affine::constant(l))) enumerate(u, b, out);
    }
  }
}

}  // namespace

void expand_term(const Term& t, const ExpandBounds& b, Expansion& out) {
  Term u = t;
  if (!normalize(u)) return;
  enumerate(u, b, out);
}

std::uint64_t expansion_leaves() { return g_leaves.load(); }

Term multiply_terms(const Term& a, const Term& b) {
  if (a.nvars + b.nvars > kMaxVars) throw std::overflow_error("too many summation variables");
  Term r;
  r.coeff = a.coeff * b.coeff;
  r.nvars = a.nvars + b.nvars;
  r.factors = a.factors;
  for (const auto& f : b.factors) r.factors.push_back({f.form.shifted(a.nvars), f.power});
  r.gens = a.gens;
  for (const auto& g : b.gens) r.gens.push_back({g.kind, g.index, g.mode.shifted(a.nvars)});
  for (int s = 0; s < 2; ++s) {
    r.power[s] = a.power[s] + b.power[s].shifted(a.nvars);
    r.logdeg[s] = static_cast<std::uint8_t>(a.logdeg[s] + b.logdeg[s]);
  }
  return r;
}

void prune(Expansion& e) {
  std::erase_if(e, [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace nilva::sym
