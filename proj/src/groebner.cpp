#include "autrel/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "autrel/linalg.hpp"

namespace autrel {

namespace {

std::vector<std::int64_t> scale_weights(const std::vector<Rational>& w) {
  Integer den = 1;
  for (const auto& q : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<std::int64_t> out;
  for (const auto& q : w) {
    Rational s = q * den;
    if (!s.get_num().fits_slong_p()) throw DomainError("weights too large for monomial comparisons");
    out.push_back(s.get_num().get_si());
  }
  return out;
}

std::int64_t weighted(const Monomial& m, const std::vector<std::int64_t>& w, std::size_t offset) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * static_cast<std::int64_t>(m[offset + i]);
  return s;
}

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(b, a); }
};

using Work = std::map<Monomial, Rational, Descending>;

// A basis element: terms in descending order, leading term first.
struct Element {
  std::vector<std::pair<Monomial, Rational>> terms;
  const Monomial& lm() const { return terms.front().first; }
  const Rational& lc() const { return terms.front().second; }
};

Work to_work(const Polynomial& p, const MonomialOrder& order) {
  Work w(Descending{&order});
  for (const auto& [m, c] : p.terms()) w.emplace(m, c);
  return w;
}

Polynomial from_terms(std::size_t nvars, const Work& w) {
  Polynomial p(nvars);
  for (const auto& [m, c] : w) p.add_term(m, c);
  return p;
}

Element to_element(const Work& w) {
  Element e;
  e.terms.assign(w.begin(), w.end());
  return e;
}

void subtract_multiple(Work& f, const Element& g, const Monomial& shift, const Rational& coeff) {
  for (const auto& [m, c] : g.terms) {
    Monomial key = m * shift;
    auto [it, inserted] = f.try_emplace(std::move(key), Rational(0));
    it->second -= coeff * c;
    if (it->second == 0) f.erase(it);
  }
}

// Full reduction of f by the elements in `basis` whose `active` flag is set.
Work reduce(Work f, const std::vector<Element>& basis, const std::vector<bool>& active) {
  Work rem(f.key_comp());
  while (!f.empty()) {
    auto it = f.begin();
    const Element* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active[k] && basis[k].lm().divides(it->first)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor == nullptr) {
      rem.insert(rem.end(), *it);
      f.erase(it);
      continue;
    }
    Monomial shift = it->first / divisor->lm();
    Rational coeff = it->second / divisor->lc();
    subtract_multiple(f, *divisor, shift, coeff);
  }
  return rem;
}

Work primitive(const Work& w) {
  if (w.empty()) return w;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : w) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (w.begin()->second < 0) scale = -scale;
  Work out(w.key_comp());
  for (const auto& [m, c] : w) out.emplace_hint(out.end(), m, c * scale);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = nvars;
  return o;
}

MonomialOrder MonomialOrder::graded_lex(const WeightVector& w) {
  MonomialOrder o;
  o.kind_ = Kind::GradedLex;
  o.nvars_ = w.size();
  o.front_w_ = scale_weights(w.values());
  return o;
}

MonomialOrder MonomialOrder::block(const WeightVector& front, const WeightVector& back, const WeightVector& grading) {
  MonomialOrder o;
  o.kind_ = Kind::BlockElimination;
  o.nvars_ = front.size() + back.size();
  o.front_ = front.size();
  o.front_w_ = scale_weights(front.values());
  o.back_w_ = scale_weights(back.values());
  if (grading.size() != 0) {
    if (grading.size() != o.nvars_) throw DimensionError("grading has the wrong length");
    o.grading_ = scale_weights(grading.values());
  }
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_range(a, b, 0, nvars_);
    case Kind::GradedLex: {
      auto c = weighted(a, front_w_, 0) <=> weighted(b, front_w_, 0);
      if (c != 0) return c;
      return lex_range(a, b, 0, nvars_);
    }
    case Kind::BlockElimination:
      break;
  }
  if (!grading_.empty()) {
    auto c = weighted(a, grading_, 0) <=> weighted(b, grading_, 0);
    if (c != 0) return c;
  }
  auto c = weighted(a, front_w_, 0) <=> weighted(b, front_w_, 0);
  if (c != 0) return c;
  c = lex_range(a, b, 0, front_);
  if (c != 0) return c;
  c = weighted(a, back_w_, front_) <=> weighted(b, back_w_, front_);
  if (c != 0) return c;
  return lex_range(a, b, front_, nvars_);
}

std::string MonomialOrder::describe() const {
  std::ostringstream out;
  auto list = [&](const std::vector<std::int64_t>& w) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  };
  switch (kind_) {
    case Kind::Lex:
      out << "lex(" << nvars_ << ")";
      break;
    case Kind::GradedLex:
      out << "graded-lex(";
      list(front_w_);
      out << ")";
      break;
    case Kind::BlockElimination:
      out << "block(front=";
      list(front_w_);
      out << "; back=";
      list(back_w_);
      out << ")";
      break;
  }
  return out.str();
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (best == nullptr || order.less(*best, m)) best = &m;
  }
  return *best;
}

Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
  return p.coefficient(leading_monomial(p, order));
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  return p * (1 / leading_coefficient(p, order));
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& basis) {
  std::vector<Element> elems;
  for (const auto& g : basis.gens) {
    if (g.is_zero()) continue;
    elems.push_back(to_element(to_work(g, basis.order)));
  }
  std::vector<bool> active(elems.size(), true);
  return from_terms(p.nvars(), reduce(to_work(p, basis.order), elems, active));
}

IdealBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order, std::size_t budget,
                      BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  const std::size_t nvars = order.nvars();

  std::vector<Element> basis;
  std::vector<bool> active;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Work w) {
    Element e = to_element(primitive(w));
    std::size_t idx = basis.size();
    for (std::size_t k = 0; k < idx; ++k) {
      if (active[k]) pending.emplace(k, idx);
    }
    basis.push_back(std::move(e));
    active.push_back(true);
  };

  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw DimensionError("generator lives in the wrong ring");
    Work w = reduce(to_work(g, order), basis, active);
    if (!w.empty()) add(std::move(w));
  }

  while (!pending.empty()) {
    // normal strategy: the pair with the smallest lcm goes first
    auto best = pending.begin();
    Monomial best_lcm = lcm(basis[best->first].lm(), basis[best->second].lm());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(basis[it->first].lm(), basis[it->second].lm());
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    ++st.pairs_considered;

    const Element& a = basis[i];
    const Element& b = basis[j];
    if (coprime(a.lm(), b.lm())) {
      ++st.coprime_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || !basis[k].lm().divides(best_lcm)) continue;
      auto key = [](std::size_t p, std::size_t q) { return std::make_pair(std::min(p, q), std::max(p, q)); };
      chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
    }
    if (chain) {
      ++st.chain_skips;
      continue;
    }

    if (++st.pairs_reduced > budget) {
      throw ResourceCapExceeded("Groebner pair budget of " + std::to_string(budget) + " exceeded");
    }
    Work s(Descending{&order});
    {
      Monomial sa = best_lcm / a.lm();
      for (const auto& [m, c] : a.terms) s.emplace(m * sa, c / a.lc());
      subtract_multiple(s, b, best_lcm / b.lm(), 1 / b.lc());
    }
    Work r = reduce(std::move(s), basis, active);
    if (r.empty()) continue;
    add(std::move(r));
  }

  // minimal basis, then interreduce
  std::vector<Element> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k) continue;
      if (!basis[l].lm().divides(basis[k].lm())) continue;
      redundant = basis[l].lm() != basis[k].lm() || l < k;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  IdealBasis out{{}, order, true};
  std::vector<Element> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<bool> others(minimal.size(), true);
    others[k] = false;
    Work tail(Descending{&order});
    for (std::size_t t = 1; t < minimal[k].terms.size(); ++t) tail.insert(minimal[k].terms[t]);
    Work r = reduce(std::move(tail), minimal, others);
    Rational inv = 1 / minimal[k].lc();
    Polynomial p(nvars);
    p.add_term(minimal[k].lm(), Rational(1));
    for (const auto& [m, c] : r) p.add_term(m, c * inv);
    out.gens.push_back(std::move(p));
  }
  std::sort(out.gens.begin(), out.gens.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.less(leading_monomial(x, order), leading_monomial(y, order));
  });
  return out;
}

bool is_groebner_basis(const IdealBasis& basis) {
  const auto& order = basis.order;
  std::vector<Element> elems;
  for (const auto& g : basis.gens) elems.push_back(to_element(to_work(g, order)));
  std::vector<bool> active(elems.size(), true);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      Monomial l = lcm(elems[i].lm(), elems[j].lm());
      Work s(Descending{&order});
      for (const auto& [m, c] : elems[i].terms) s.emplace(m * (l / elems[i].lm()), c / elems[i].lc());
      subtract_multiple(s, elems[j], l / elems[j].lm(), 1 / elems[j].lc());
      if (!reduce(std::move(s), elems, active).empty()) return false;
    }
  }
  return true;
}

IdealBasis kernel_ideal(const std::vector<Polynomial>& images, const WeightVector& dweights, std::size_t budget) {
  const std::size_t n = images.size();
  if (n == 0 || dweights.size() != n) throw DimensionError("kernel needs n images and n weights");
  for (const auto& f : images) {
    if (f.nvars() != n) throw DimensionError("image lives in the wrong ring");
  }
  WeightVector zorder = dweights;
  MonomialOrder target = MonomialOrder::graded_lex(zorder);

  // grade x by the weights that make every z_i - images[i] homogeneous, when such weights exist
  WeightVector xweights = WeightVector::standard(n);
  bool graded = true;
  for (std::size_t i = 0; i < n && graded; ++i) {
    graded = !images[i].is_zero() && is_homogeneous(images[i], xweights) && wdeg(images[i], xweights) == dweights[i];
  }
  std::vector<Rational> all = xweights.values();
  all.insert(all.end(), dweights.values().begin(), dweights.values().end());
  MonomialOrder order =
      MonomialOrder::block(xweights, dweights, graded ? WeightVector(all) : WeightVector());

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial g = Polynomial::variable(2 * n, n + i) - images[i].embed(2 * n, 0);
    gens.push_back(std::move(g));
  }
  IdealBasis full = buchberger(gens, order, budget);

  IdealBasis out{{}, target, true};
  for (const auto& g : full.gens) {
    bool has_x = false;
    for (std::size_t v = 0; v < n && !has_x; ++v) has_x = g.involves(v);
    if (has_x) continue;
    Polynomial z(n);
    for (const auto& [m, c] : g.terms()) {
      std::vector<std::uint32_t> e(m.exponents().begin() + static_cast<long>(n), m.exponents().end());
      z.add_term(Monomial(std::move(e)), c);
    }
    out.gens.push_back(make_monic(z, target));
  }
  std::sort(out.gens.begin(), out.gens.end(), [&](const Polynomial& x, const Polynomial& y) {
    return target.less(leading_monomial(x, target), leading_monomial(y, target));
  });
  return out;
}

std::vector<Polynomial> graded_kernel_oracle(const std::vector<Polynomial>& images, const WeightVector& dweights,
                                             const Rational& dmax) {
  const std::size_t n = images.size();
  if (dweights.size() != n) throw DimensionError("oracle needs n weights");

  std::map<Rational, std::vector<Monomial>> slices;
  std::vector<std::uint32_t> exps(n, 0);
  auto enumerate = [&](auto&& self, std::size_t var, const Rational& used) -> void {
    if (var == n) {
      if (used > 0) slices[used].push_back(Monomial(exps));
      return;
    }
    Rational deg = used;
    for (std::uint32_t e = 0; deg <= dmax; ++e) {
      exps[var] = e;
      self(self, var + 1, deg);
      deg += dweights[var];
    }
    exps[var] = 0;
  };
  enumerate(enumerate, 0, Rational(0));

  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(images[var].nvars(), Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  std::vector<Polynomial> out;
  for (const auto& [degree, monos] : slices) {
    std::vector<Polynomial> columns;
    std::map<Monomial, std::size_t> rows;
    for (const auto& z : monos) {
      Polynomial col = Polynomial::constant(images[0].nvars(), Rational(1));
      for (std::size_t v = 0; v < n; ++v) {
        if (z[v] > 0) col *= power_of(v, z[v]);
      }
      for (const auto& [m, c] : col.terms()) rows.emplace(m, rows.size());
      columns.push_back(std::move(col));
    }
    RationalMatrix mat(rows.size(), std::vector<Rational>(monos.size(), Rational(0)));
    for (std::size_t k = 0; k < columns.size(); ++k) {
      for (const auto& [m, c] : columns[k].terms()) mat[rows.at(m)][k] = c;
    }
    for (const auto& v : nullspace(std::move(mat), monos.size())) {
      Polynomial rel(n);
      for (std::size_t k = 0; k < monos.size(); ++k) {
        if (v[k] != 0) rel.add_term(monos[k], v[k]);
      }
      out.push_back(primitive_part(rel));
    }
  }
  return out;
}

OracleAgreement compare_with_oracle(const IdealBasis& kernel, const std::vector<Polynomial>& oracle,
                                    const WeightVector& dweights, const Rational& dmax) {
  OracleAgreement result;
  for (const auto& g : oracle) {
    if (!normal_form(g, kernel).is_zero()) {
      result.oracle_in_ideal = false;
      result.detail = "oracle relation " + format_poly(g) + " is not in the computed ideal";
      return result;
    }
  }
  for (const auto& g : kernel.gens) {
    WDegree dg = wdeg(g, dweights);
    if (dg.is_minus_infinity() || dg.value() > dmax) continue;
    std::map<Monomial, std::size_t> cols;
    std::vector<const Polynomial*> slice;
    for (const auto& o : oracle) {
      if (wdeg(o, dweights) == dg) slice.push_back(&o);
    }
    slice.push_back(&g);
    for (const auto* p : slice) {
      for (const auto& [m, c] : p->terms()) cols.emplace(m, cols.size());
    }
    RationalMatrix mat;
    for (const auto* p : slice) {
      std::vector<Rational> row(cols.size(), Rational(0));
      for (const auto& [m, c] : p->terms()) row[cols.at(m)] = c;
      mat.push_back(std::move(row));
    }
    std::size_t with = rank(mat, cols.size());
    mat.pop_back();
    std::size_t without = rank(std::move(mat), cols.size());
    if (with != without) {
      result.basis_in_oracle = false;
      result.detail = "basis element " + format_poly(g) + " is outside the oracle span";
      return result;
    }
  }
  return result;
}

Principality is_principal(const IdealBasis& basis, std::size_t nvars) {
  if (basis.gens.empty()) return {true, Polynomial(nvars)};
  if (basis.gens.size() == 1) return {true, basis.gens.front()};
  return {false, Polynomial(nvars)};
}

}  // namespace autrel
