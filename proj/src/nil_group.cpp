#include "nilva/nil_group.hpp"

#include <stdexcept>
#include <string>

namespace nilva::group {

namespace {

const char* const kCoordNames[6] = {"x1", "x2", "x3", "y1", "y2", "y3"};

void add_params(VerificationReport& r, const Params& p) {
  r.add_param("k", std::to_string(p.k));
  r.add_param("j", std::to_string(p.j));
}

std::string law_name(GroupLaw law) { return law == GroupLaw::Corrected ? "corrected" : "as-printed"; }

std::array<Polynomial, 6> symbolic_point(int first_var) {
  std::array<Polynomial, 6> v;
  for (int i = 0; i < 6; ++i) v[i] = Polynomial::variable(first_var + i);
  return v;
}

}  // namespace

HeisenbergElement heisenberg_multiply(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.k != h.k) throw std::invalid_argument("incompatible parameters");
  const Scalar half_k = Scalar(g.k) / Scalar(2);
  const auto& [x, y, z] = g.coords;
  const auto& [u, v, w] = h.coords;
  return {{x + u, y + v - half_k * x * w + half_k * u * z, z + w}, g.k};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h, GroupLaw law) {
  if (g.params != h.params) throw std::invalid_argument("incompatible parameters");
  return {product<Scalar>(g.coords, h.coords, Scalar(g.params.k), Scalar(g.params.j), law), g.params};
}

GroupElement identity(const Params& p) { return {{}, p}; }

GroupElement inverse(const GroupElement& g, GroupLaw) {
  // Every correction term is bilinear in (g, g*) and antisymmetric under
  // exchanging the two factors' x-coordinates, so it vanishes on (g, -g).
  GroupElement r = g;
  for (auto& c : r.coords) c = -c;
  return r;
}

CoordinateMap left_translation(const GroupElement& g, GroupLaw law) {
  std::array<Polynomial, 6> a;
  for (int i = 0; i < 6; ++i) a[i] = Polynomial(g.coords[i]);
  return product<Polynomial>(a, symbolic_point(0), Polynomial(Scalar(g.params.k)),
                             Polynomial(Scalar(g.params.j)), law);
}

CoordinateMap symbolic_left_translation(const Params& p, GroupLaw law) {
  return product<Polynomial>(symbolic_point(6), symbolic_point(0), Polynomial(Scalar(p.k)),
                             Polynomial(Scalar(p.j)), law);
}

Scalar sample_rational(std::mt19937_64& rng, int bound) {
  static constexpr std::int64_t kDenoms[] = {1, 2, 3, 4, 5, 6, 7};
  std::int64_t den = kDenoms[rng() % 7];
  std::int64_t span = 2 * bound * den + 1;
  std::int64_t num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span)) - bound * den;
  return Scalar(num, den);
}

namespace {

GroupElement sample_element(std::mt19937_64& rng, const Params& p) {
  GroupElement g{{}, p};
  for (auto& c : g.coords) c = sample_rational(rng);
  return g;
}

std::string point_str(const GroupElement& g) {
  std::string s = "(";
  for (int i = 0; i < 6; ++i) s += (i ? "," : "") + g.coords[i].str();
  return s + ")";
}

}  // namespace

VerificationReport check_associativity(const Params& p, AssocMode mode, int samples,
                                       std::uint64_t seed, GroupLaw law) {
  VerificationReport r;
  r.check = mode == AssocMode::Symbolic ? "group.associativity-symbolic" : "group.associativity-sampled";
  add_params(r, p);
  r.add_param("law", law_name(law));
  Comparator cmp;
  if (mode == AssocMode::Symbolic) {
    const Polynomial k(Scalar(p.k)), j(Scalar(p.j));
    auto g = symbolic_point(0), h = symbolic_point(6), f = symbolic_point(12);
    auto lhs = product(product(g, h, k, j, law), f, k, j, law);
    auto rhs = product(g, product(h, f, k, j, law), k, j, law);
    for (int i = 0; i < 6; ++i) {
      Polynomial diff = lhs[i] - rhs[i];
      cmp.count();
      if (!diff.is_zero()) {
        // Report the first differing monomial coefficient.
        const auto& [e, c] = *diff.terms().begin();
        Polynomial mono = Polynomial::monomial(e, Scalar(1));
        Scalar want = 0, got = 0;
        auto lt = lhs[i].terms().find(e);
        auto rt = rhs[i].terms().find(e);
        if (lt != lhs[i].terms().end()) got = lt->second;
        if (rt != rhs[i].terms().end()) want = rt->second;
        cmp.record_mismatch(std::string(kCoordNames[i]) + ":" + mono.str(), want, got);
      }
    }
  } else {
    r.add_param("samples", std::to_string(samples));
    r.add_param("seed", std::to_string(seed));
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
      GroupElement g = sample_element(rng, p), h = sample_element(rng, p), f = sample_element(rng, p);
      GroupElement lhs = multiply(multiply(g, h, law), f, law);
      GroupElement rhs = multiply(g, multiply(h, f, law), law);
      for (int i = 0; i < 6; ++i) {
        cmp.expect_equal("sample " + std::to_string(s) + " " + point_str(g) + ":" + kCoordNames[i],
                         rhs.coords[i], lhs.coords[i]);
      }
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_associativity_generic(GroupLaw law) {
  VerificationReport r;
  r.check = "group.associativity-generic";
  r.add_param("law", law_name(law));
  Comparator cmp;
  const Polynomial k = Polynomial::variable(18), j = Polynomial::variable(19);
  auto g = symbolic_point(0), h = symbolic_point(6), f = symbolic_point(12);
  auto lhs = product(product(g, h, k, j, law), f, k, j, law);
  auto rhs = product(g, product(h, f, k, j, law), k, j, law);
  for (int i = 0; i < 6; ++i) {
    Polynomial diff = lhs[i] - rhs[i];
    cmp.count();
    if (!diff.is_zero()) {
      const auto& [e, c] = *diff.terms().begin();
      cmp.record_mismatch(std::string(kCoordNames[i]) + ":" + Polynomial::monomial(e, 1).str(), Scalar(0), c);
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_identity_inverse(const Params& p, int samples, std::uint64_t seed, GroupLaw law) {
  VerificationReport r;
  r.check = "group.identity-inverse";
  add_params(r, p);
  r.add_param("samples", std::to_string(samples));
  r.add_param("seed", std::to_string(seed));
  Comparator cmp;
  std::mt19937_64 rng(seed);
  const GroupElement e = identity(p);
  for (int s = 0; s < samples; ++s) {
    GroupElement g = sample_element(rng, p);
    GroupElement gi = inverse(g, law);
    const GroupElement checks[] = {multiply(e, g, law), multiply(g, e, law), multiply(g, gi, law),
                                   multiply(gi, g, law), inverse(gi, law)};
    const GroupElement wants[] = {g, g, e, e, g};
    const char* labels[] = {"e*g", "g*e", "g*g^-1", "g^-1*g", "(g^-1)^-1"};
    for (int c = 0; c < 5; ++c) {
      for (int i = 0; i < 6; ++i) {
        cmp.expect_equal("sample " + std::to_string(s) + " " + labels[c] + ":" + kCoordNames[i],
                         wants[c].coords[i], checks[c].coords[i]);
      }
    }
  }
  cmp.finish(r);
  return r;
}

VerificationReport check_heisenberg_embedding(const Params& p, int samples, std::uint64_t seed) {
  VerificationReport r;
  r.check = "group.heisenberg-embedding";
  add_params(r, p);
  Comparator cmp;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    HeisenbergElement a{{sample_rational(rng), sample_rational(rng), sample_rational(rng)}, p.k};
    HeisenbergElement b{{sample_rational(rng), sample_rational(rng), sample_rational(rng)}, p.k};
    HeisenbergElement ab = heisenberg_multiply(a, b);
    GroupElement ga{{a.coords[0], a.coords[1], a.coords[2], 0, 0, 0}, p};
    GroupElement gb{{b.coords[0], b.coords[1], b.coords[2], 0, 0, 0}, p};
    GroupElement gab = multiply(ga, gb);
    for (int i = 0; i < 3; ++i) {
      cmp.expect_equal("sample " + std::to_string(s) + ":" + kCoordNames[i], ab.coords[i], gab.coords[i]);
    }
  }
  cmp.finish(r);
  return r;
}

}  // namespace nilva::group
