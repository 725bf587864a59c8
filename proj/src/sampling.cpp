#include "autrel/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace autrel {

namespace {

using Tag = RelationTag;

Polynomial term(const Rational& c, std::uint32_t i, std::uint32_t j, std::uint32_t k = 0) {
  return Polynomial::term(Monomial{i, j, k}, c);
}

Polynomial x3() { return Polynomial::variable(3, 2); }

Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational out = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      out = -out;
    }
    out *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return out;
}

Generator random_affine(Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (auto& row : m) {
      for (auto& x : row) x = uniform(rng, -3, 3);
    }
    if (det(m) == 0) continue;
    std::vector<Rational> shift(n);
    for (auto& s : shift) s = uniform(rng, -9, 9);
    return make_affine(std::move(m), std::move(shift));
  }
}

Monomial random_monomial(Rng& rng, std::size_t n, unsigned degree, const std::vector<std::size_t>& vars) {
  std::vector<std::uint32_t> e(n, 0);
  for (unsigned s = 0; s < degree; ++s) ++e[vars[uniform(rng, 0, static_cast<long>(vars.size()) - 1)]];
  return Monomial(e);
}

long max_degree(const PolyMap& m) {
  long d = 0;
  for (const auto& c : m.coords) d = std::max(d, c.total_degree());
  return d;
}

// Random polynomial in (x1, x2) of weighted degree deg, as an element of the three-variable ring.
Polynomial homogeneous(Rng& rng, long d1, long d2, long deg, long bound = 3) {
  Polynomial out(3);
  for (long i = 0; i * d1 <= deg; ++i) {
    long rest = deg - i * d1;
    if (rest % d2 != 0) continue;
    out += term(Rational(uniform(rng, -bound, bound)), static_cast<std::uint32_t>(i),
                static_cast<std::uint32_t>(rest / d2));
  }
  return out;
}

Polynomial shifted(const Polynomial& pattern, const Polynomial& h) {
  std::vector<Polynomial> images{Polynomial::variable(3, 0), Polynomial::variable(3, 1), x3() + h};
  return compose(pattern, images);
}

WeightVector weights(long a, long b, long c) { return WeightVector{a, b, c}; }

}  // namespace

long uniform(Rng& rng, long lo, long hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % range);
}

long nonzero(Rng& rng, long bound) {
  long v = uniform(rng, -bound, bound - 1);
  return v >= 0 ? v + 1 : v;
}

Polynomial sample_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, unsigned terms, long coeff_bound) {
  std::vector<std::size_t> vars(nvars);
  std::iota(vars.begin(), vars.end(), 0);
  Polynomial out(nvars);
  for (unsigned t = 0; t < terms; ++t) {
    unsigned deg = static_cast<unsigned>(uniform(rng, 0, max_degree));
    out += Polynomial::term(random_monomial(rng, nvars, deg, vars), Rational(nonzero(rng, coeff_bound)));
  }
  return out;
}

AutWord sample_tame_word(Rng& rng, const WordOptions& opts) {
  const std::size_t n = opts.nvars;
  AutWord w(n);
  PolyMap cur = identity_map(n);
  const unsigned gens = static_cast<unsigned>(uniform(rng, 1, opts.max_gens));
  for (unsigned g = 0; g < gens; ++g) {
    long kind = uniform(rng, 0, 7);
    long curdeg = std::max(1L, max_degree(cur));
    long amax = std::min<long>(opts.max_addend_degree, opts.degree_budget / curdeg);
    Generator gen = make_transposition(n, 0, 1);
    if (kind <= 1 && opts.allow_affine) {
      gen = random_affine(rng, n);
    } else if (kind == 2 || amax < 1) {
      std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      gen = make_transposition(n, i, j);
    } else {
      std::size_t t = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      std::vector<std::size_t> others;
      for (std::size_t v = 0; v < n; ++v) {
        if (v != t) others.push_back(v);
      }
      unsigned a = static_cast<unsigned>(uniform(rng, std::min(2L, amax), amax));
      Polynomial addend = Polynomial::term(random_monomial(rng, n, a, others), Rational(nonzero(rng, opts.coeff_bound)));
      long extra = uniform(rng, 0, 2);
      for (long e = 0; e < extra; ++e) {
        unsigned deg = static_cast<unsigned>(uniform(rng, 0, a));
        addend += Polynomial::term(random_monomial(rng, n, deg, others), Rational(uniform(rng, -opts.coeff_bound, opts.coeff_bound)));
      }
      if (addend.is_zero()) addend = Polynomial::term(random_monomial(rng, n, a, others), Rational(1));
      gen = make_elementary(n, t, std::move(addend));
    }
    cur = compose_maps(generator_map(gen, n), cur);
    w.push_back(std::move(gen));
  }
  return w;
}

AutWord sample_affine_word(Rng& rng, std::size_t nvars, unsigned gens) {
  AutWord w(nvars);
  for (unsigned g = 0; g < gens; ++g) w.push_back(random_affine(rng, nvars));
  return w;
}

AutWord sample_nonaffine_word(Rng& rng, const WordOptions& opts) {
  for (;;) {
    AutWord w = sample_tame_word(rng, opts);
    if (!is_affine_map(expand(w))) return w;
  }
}

std::vector<AutWord> tame_corpus2(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<AutWord> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_tame_word(rng, WordOptions{}));
  return out;
}

std::vector<PrincipalSample> principal_corpus3(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  WordOptions opts;
  opts.nvars = 3;
  opts.max_gens = 4;
  opts.max_addend_degree = 3;
  opts.coeff_bound = 5;
  opts.degree_budget = 9;
  std::vector<PrincipalSample> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 50 * count + 50) throw Error("principal_corpus3: too many rejected samples");
    AutWord w = sample_nonaffine_word(rng, opts);
    try {
      RelationReport rep = relation_report(w, WeightVector::standard(3));
      if (rep.principal && rep.R && !rep.R->is_zero()) out.push_back({std::move(w), std::move(rep)});
    } catch (const ResourceCapExceeded&) {
    }
  }
  return out;
}

ClassifierInstance sample_classifier_instance(Rng& rng, RelationTag tag) {
  ClassifierInstance out;
  out.tag = tag;
  const Rational lambda = nonzero(rng, 5);
  const long s = uniform(rng, 2, 3);
  Polynomial pattern(3);
  long d1 = 1, d2 = 1, d3 = 1;
  bool shift = true;
  Polynomial sq = x3() * x3();
  auto c = [&] { return Rational(nonzero(rng, 9)); };

  switch (tag) {
    case Tag::Zero:
      out.d = weights(1, 1, 1);
      return out;
    case Tag::ElemReducible: {
      std::vector<long> ds{uniform(rng, 1, 4), uniform(rng, 1, 4), uniform(rng, 1, 4)};
      std::sort(ds.begin(), ds.end());
      d1 = ds[0], d2 = ds[1], d3 = ds[2];
      pattern = x3();
      break;
    }
    case Tag::TwoVarBinomial: {
      long e1 = uniform(rng, 2, 5), e2 = 1;
      do e2 = uniform(rng, 1, e1 - 1);
      while (std::gcd(e1, e2) != 1);
      d1 = s * e2, d2 = s * e1;
      d3 = std::max(d2, e1 * e2 * s - d1 - d2 + 2) + uniform(rng, 0, 2);
      pattern = term(Rational(1), static_cast<std::uint32_t>(e1), 0) + term(c(), 0, static_cast<std::uint32_t>(e2));
      shift = false;
      break;
    }
    case Tag::T3_ProductLinearX3: {
      long e1 = uniform(rng, 1, 2);
      long k = uniform(rng, std::max(2L, 2 * e1), 2 * e1 + 3);
      d1 = s, d2 = e1 * s, d3 = (k - e1) * s;
      Rational a = uniform(rng, 0, 1) ? Rational(nonzero(rng, 9)) : Rational(0);
      pattern = (Polynomial::variable(3, 1) + term(a, static_cast<std::uint32_t>(e1), 0)) * x3() +
                term(c(), static_cast<std::uint32_t>(k), 0);
      break;
    }
    case Tag::T4_MonomialX3: {
      long k = uniform(rng, 1, 3);
      d1 = uniform(rng, 1, 3), d2 = std::max(d1, (k - 1) * d1 + uniform(rng, 2, 3)), d3 = d2 + uniform(rng, 0, 2);
      pattern = term(Rational(1), static_cast<std::uint32_t>(k), 0, 1) + homogeneous(rng, d1, d2, k * d1 + d3);
      shift = false;
      break;
    }
    case Tag::T5: {
      long t = uniform(rng, 2, 3);
      d1 = uniform(rng, t + 2, 2 * t), d2 = 2 * t, d3 = 3 * t;
      pattern = sq + term(c(), 0, 3);
      break;
    }
    case Tag::T6:
      d1 = 2 * s, d2 = uniform(rng, 2 * s, 2 * s + 3), d3 = s + d2;
      pattern = sq + term(c(), 1, 2);
      break;
    case Tag::T7: {
      long r1 = 2 * uniform(rng, 1, 3) + 1;
      d1 = 2 * s, d2 = uniform(rng, std::max(2 * s, (r1 - 2) * s + 2), r1 * s), d3 = r1 * s;
      pattern = sq + term(c(), static_cast<std::uint32_t>(r1), 0);
      break;
    }
    case Tag::T8: {
      long r1 = uniform(rng, 1, 4);
      d1 = s;
      do d2 = uniform(rng, std::max(d1, (r1 - 2) * d1 + 4), std::max(r1 * d1, (r1 - 2) * d1 + 5));
      while ((r1 * d1 + d2) % 2 != 0);
      d3 = (r1 * d1 + d2) / 2;
      pattern = sq + term(c(), static_cast<std::uint32_t>(r1), 1);
      break;
    }
    case Tag::T9: {
      long e1 = 2 * uniform(rng, 1, 2) + 1;
      long beta = nonzero(rng, 4);
      d1 = 2 * s, d2 = e1 * s, d3 = e1 * s;
      pattern = sq + term(c(), static_cast<std::uint32_t>(e1), 0) + term(Rational(-beta * beta), 0, 2);
      break;
    }
    case Tag::T10: {
      long e1 = uniform(rng, 1, 2);
      long r1 = uniform(rng, e1, e1 + 1);
      d1 = 2 * s, d2 = 2 * e1 * s, d3 = (e1 + r1) * s;
      pattern = sq + (term(c(), static_cast<std::uint32_t>(e1), 0) + term(c(), 0, 1)) *
                         term(Rational(1), static_cast<std::uint32_t>(r1), 0);
      break;
    }
    case Tag::T11: {
      long e1 = uniform(rng, 1, 3);
      Rational a1, b1, a2, b2;
      do {
        a1 = uniform(rng, -4, 4), a2 = uniform(rng, -4, 4);
        b1 = nonzero(rng, 4);
        long t = nonzero(rng, 2);
        b2 = -b1 * t * t;
      } while (a1 * b2 - a2 * b1 == 0);
      d1 = s, d2 = e1 * s, d3 = e1 * s;
      auto u = static_cast<std::uint32_t>(e1);
      pattern = sq + (term(a1, u, 0) + term(b1, 0, 1)) * (term(a2, u, 0) + term(b2, 0, 1));
      break;
    }
    case Tag::T12: {
      d1 = 2 * s, d2 = 2 * s, d3 = 3 * s;
      Polynomial l1 = term(c(), 1, 0) + term(c(), 0, 1);
      Polynomial l2 = term(c(), 1, 0) + term(c(), 0, 1);
      pattern = sq + l1 * l2 * l2;
      break;
    }
    case Tag::T13: {
      long e1 = uniform(rng, 2, 3);
      d1 = 2 * s, d2 = 2 * e1 * s, d3 = (2 * e1 + 1) * s;
      Polynomial l = term(c(), static_cast<std::uint32_t>(e1), 0) + Polynomial::variable(3, 1);
      pattern = sq + c() * l * l * Polynomial::variable(3, 0);
      break;
    }
  }
  Polynomial h = shift ? homogeneous(rng, d1, d2, d3) : Polynomial(3);
  out.R = lambda * shifted(pattern, h);
  out.d = weights(d1, d2, d3);
  return out;
}

ForbiddenInstance sample_forbidden_instance(Rng& rng, int entry) {
  ForbiddenInstance out;
  out.entry = entry;
  const Rational lambda = nonzero(rng, 5);
  auto c = [&] { return Rational(nonzero(rng, 9)); };
  Polynomial F(3);
  long d1 = 1, d2 = 1, d3 = 1;
  switch (entry) {
    case 1:
      d1 = 3, d2 = 4, d3 = 6;
      F = term(c(), 4, 0) + term(c(), 0, 3);
      break;
    case 2:
      d1 = 6, d2 = 10, d3 = 15;
      F = term(c(), 5, 0) + term(c(), 0, 3);
      break;
    case 3: {
      long s = uniform(rng, 1, 2), e1 = uniform(rng, 1, 2);
      d1 = 2 * s, d2 = e1 * d1, d3 = (2 * e1 + 1) * s;
      Rational A, B, C;
      do {
        A = uniform(rng, -4, 4), B = uniform(rng, -4, 4), C = nonzero(rng, 4);
      } while (B * B - 4 * A * C == 0);
      auto u = static_cast<std::uint32_t>(e1);
      F = (term(A, 2 * u, 0) + term(B, u, 1) + term(C, 0, 2)) * Polynomial::variable(3, 0);
      break;
    }
    case 4: {
      d1 = 2, d2 = 2, d3 = 3;
      Rational a, b, cc, d;
      do {
        a = uniform(rng, -3, 3), b = uniform(rng, -3, 3), cc = uniform(rng, -3, 3), d = nonzero(rng, 3);
      } while (b * b * cc * cc - 4 * a * cc * cc * cc - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * cc * d == 0);
      F = term(a, 3, 0) + term(b, 2, 1) + term(cc, 1, 2) + term(d, 0, 3);
      break;
    }
    case 5:
      d1 = 4, d2 = 6, d3 = 9;
      F = (term(c(), 3, 0) + term(c(), 0, 2)) * Polynomial::variable(3, 1);
      break;
    case 6: {
      long s = uniform(rng, 1, 2), e1 = 2 * uniform(rng, 1, 2) + 1;
      d1 = 2 * s, d2 = e1 * s, d3 = (e1 + 1) * s;
      F = term(c(), static_cast<std::uint32_t>(e1 + 1), 0) + term(c(), 1, 2);
      break;
    }
    default:
      throw DomainError("forbidden entries are numbered 1..6");
  }
  Polynomial h = homogeneous(rng, d1, d2, d3);
  out.R = lambda * shifted(x3() * x3() + F, h);
  out.d = weights(d1, d2, d3);
  return out;
}

}  // namespace autrel
