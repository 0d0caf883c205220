#include "nilva/polynomial.hpp"

#include <stdexcept>

namespace nilva {

Polynomial::Polynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

Polynomial Polynomial::variable(int i) {
  if (i < 0 || i >= kPolyVars) throw std::out_of_range("Polynomial: variable index");
  Exponent e{};
  e[i] = 1;
  return monomial(e, Scalar(1));
}

Polynomial Polynomial::monomial(const Exponent& e, const Scalar& c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto v : e) d += v;
    best = std::max(best, d);
  }
  return best;
}

int Polynomial::degree_in(int var) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, int(e[var]));
  return best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int i = 0; i < kPolyVars; ++i) {
        int s = ea[i] + eb[i];
        if (s > 255) throw std::overflow_error("Polynomial: exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * Scalar(e[var]));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& values) const {
  // Cache powers of each substituted polynomial.
  std::map<std::pair<int, int>, Polynomial> powers;
  auto power_of = [&](int var, int k) -> const Polynomial& {
    auto key = std::make_pair(var, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial p = values.at(var);
    for (int e = 2; e <= k; ++e) {
      auto prev = powers.find(std::make_pair(var, e));
      if (prev != powers.end()) {
        p = prev->second;
        continue;
      }
      p = p * values.at(var);
      powers.emplace(std::make_pair(var, e), p);
    }
    return powers.emplace(key, std::move(p)).first->second;
  };
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exponent kept = e;
    Polynomial factor(c);
    for (const auto& [var, val] : values) {
      if (e[var] == 0) continue;
      kept[var] = 0;
      factor = factor * power_of(var, e[var]);
    }
    r += factor * monomial(kept, Scalar(1));
  }
  return r;
}

Polynomial Polynomial::partial_evaluate(const std::map<int, Scalar>& values) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exponent kept = e;
    Scalar v = c;
    for (const auto& [var, val] : values) {
      if (e[var] == 0) continue;
      kept[var] = 0;
      v *= val.pow(e[var]);
    }
    r.add_term(kept, v);
  }
  return r;
}

Scalar Polynomial::evaluate(const std::map<int, Scalar>& values) const {
  Polynomial p = partial_evaluate(values);
  if (!p.is_constant()) throw std::invalid_argument("Polynomial: unbound variable in evaluate");
  return p.constant_term();
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar mag = c.sign() < 0 ? -c : c;
    out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (int i = 0; i < kPolyVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < int(names.size()) ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace nilva
