#include "autrel/binary_form.hpp"

#include <algorithm>

namespace autrel {

namespace {

constexpr unsigned long kDivisorCap = 1000000000000UL;

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer(std::to_string(kDivisorCap))) throw DomainError("coefficient too large for rational root search");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const UniPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// p / (t - root), assuming root is a root.
UniPoly deflate(const UniPoly& p, const Rational& root) {
  UniPoly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& input) {
  UniPoly p = input;
  trim(p);
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  while (p.size() > 1 && p.front() == 0) {
    roots.emplace_back(0);
    p.erase(p.begin());
  }
  if (p.size() <= 1) return roots;

  Integer den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : p) ints.push_back(Integer(c * den));

  auto numerators = positive_divisors(ints.front());
  auto denominators = positive_divisors(ints.back());
  std::vector<Rational> candidates;
  for (const auto& a : numerators) {
    for (const auto& b : denominators) {
      Rational q(a, b);
      q.canonicalize();
      candidates.push_back(q);
      candidates.push_back(-q);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    while (p.size() > 1 && evaluate(p, r) == 0) {
      roots.push_back(r);
      p = deflate(p, r);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

BinaryFormResult factor_weighted_binary_form(const Polynomial& q, const Integer& d1, const Integer& d2) {
  if (q.is_zero()) throw DomainError("cannot factor the zero form");
  if (d1 <= 0 || d2 <= 0) throw DomainError("weights must be positive");
  for (std::size_t v = 2; v < q.nvars(); ++v) {
    if (q.involves(v)) throw DomainError("binary form involves a variable other than x1, x2");
  }
  std::vector<Rational> ws(q.nvars(), Rational(1));
  ws[0] = d1;
  ws[1] = d2;
  if (!is_homogeneous(q, WeightVector(ws))) throw NotHomogeneous("form is not homogeneous for the given weights");

  Integer g;
  mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
  const unsigned e1 = static_cast<unsigned>(Integer(d2 / g).get_ui());
  const unsigned e2 = static_cast<unsigned>(Integer(d1 / g).get_ui());

  std::uint32_t m1 = UINT32_MAX, m2 = UINT32_MAX;
  for (const auto& [m, c] : q.terms()) {
    m1 = std::min(m1, m[0]);
    m2 = std::min(m2, m[1]);
  }
  const unsigned t1 = m1 / e1, r1 = m1 % e1;
  const unsigned t2 = m2 / e2, r2 = m2 % e2;

  // Q' in u = x1^e1, v = x2^e2, dehomogenized at v = 1: coefficient of u^i
  unsigned top = 0;
  std::vector<std::pair<unsigned, Rational>> entries;
  for (const auto& [m, c] : q.terms()) {
    unsigned i = (m[0] - m1) / e1;
    entries.emplace_back(i, c);
    top = std::max(top, i);
  }
  UniPoly p(top + 1, Rational(0));
  for (const auto& [i, c] : entries) p[i] += c;

  auto roots = rational_roots(p);
  if (roots.size() < top) {
    BinaryFormNeedsExtension ext;
    ext.reason = "binary form has " + std::to_string(top - roots.size()) + " irrational roots";
    ext.e1 = e1;
    ext.e2 = e2;
    ext.r1 = r1;
    ext.r2 = r2;
    ext.k = t1 + t2 + top;
    return ext;
  }

  BinaryFormFactors f;
  f.e1 = e1;
  f.e2 = e2;
  f.r1 = r1;
  f.r2 = r2;
  f.c = p.back();
  for (const auto& root : roots) f.pairs.emplace_back(Rational(1), Rational(-root));
  for (unsigned s = 0; s < t1; ++s) f.pairs.emplace_back(Rational(1), Rational(0));
  for (unsigned s = 0; s < t2; ++s) f.pairs.emplace_back(Rational(0), Rational(1));
  std::sort(f.pairs.begin(), f.pairs.end(), std::greater<>());
  return f;
}

Polynomial expand_binary_form(const BinaryFormFactors& f, std::size_t nvars) {
  Polynomial out = Polynomial::constant(nvars, f.c);
  for (const auto& [a, b] : f.pairs) {
    Polynomial factor = Polynomial::term(Monomial::variable(nvars, 0, f.e1), a) +
                        Polynomial::term(Monomial::variable(nvars, 1, f.e2), b);
    out *= factor;
  }
  Monomial tail = Monomial::variable(nvars, 0, f.r1) * Monomial::variable(nvars, 1, f.r2);
  return out.mul_term(tail, Rational(1));
}

}  // namespace autrel
