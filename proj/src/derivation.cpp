#include "autrel/derivation.hpp"

#include <algorithm>

namespace autrel {

bool Derivation::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Polynomial& a) { return a.is_zero(); });
}

Derivation partial_derivation(std::size_t nvars, std::size_t i) { return scaled_partial(nvars, i, Rational(1)); }

Derivation scaled_partial(std::size_t nvars, std::size_t i, const Rational& mu) {
  if (i >= nvars) throw DimensionError("derivation index out of range");
  if (mu == 0) throw DomainError("zero scaling");
  Derivation d;
  d.coeffs.assign(nvars, Polynomial(nvars));
  d.coeffs[i] = Polynomial::constant(nvars, 1 / mu);
  return d;
}

Polynomial apply(const Derivation& d, const Polynomial& p) {
  if (p.nvars() != d.nvars()) throw DimensionError("derivation and polynomial live in different rings");
  Polynomial out(p.nvars());
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    if (d.coeffs[i].is_zero() || !p.involves(i)) continue;
    out += d.coeffs[i] * partial(p, i);
  }
  return out;
}

Polynomial apply_power(const Derivation& d, const Polynomial& p, unsigned k) {
  Polynomial q = p;
  for (unsigned s = 0; s < k && !q.is_zero(); ++s) q = apply(d, q);
  return q;
}

WDegree derivation_degree(const Derivation& d, const WeightVector& w) {
  if (w.size() != d.nvars()) throw DimensionError("weight vector has the wrong length");
  WDegree best;
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    WDegree di = wdeg(d.coeffs[i], w);
    if (di.is_minus_infinity()) continue;
    best = std::max(best, di - w[i]);
  }
  return best;
}

Derivation leading_derivation(const Derivation& d, const WeightVector& w) {
  WDegree r = derivation_degree(d, w);
  if (r.is_minus_infinity()) throw DomainError("leading derivation of the zero derivation");
  Derivation out;
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    out.coeffs.push_back(homogeneous_component(d.coeffs[i], w, r.value() + w[i]));
  }
  return out;
}

std::optional<WDegree> nilpotence_order(const Derivation& d, const Polynomial& p, unsigned cap) {
  if (p.is_zero()) return WDegree::minus_infinity();
  Polynomial q = p;
  for (unsigned k = 0; k < cap; ++k) {
    Polynomial next = apply(d, q);
    if (next.is_zero()) return WDegree(static_cast<long>(k));
    q = std::move(next);
  }
  return std::nullopt;
}

std::string to_string(NilpotenceVerdict::Kind k) {
  switch (k) {
    case NilpotenceVerdict::Kind::LocallyNilpotent:
      return "LocallyNilpotent";
    case NilpotenceVerdict::Kind::NotNilpotent:
      return "NotNilpotent";
    case NilpotenceVerdict::Kind::Unknown:
      break;
  }
  return "Unknown";
}

unsigned default_nilpotence_cap(const Derivation& d) {
  long top = 0;
  for (const auto& a : d.coeffs) top = std::max(top, a.total_degree());
  return static_cast<unsigned>(4 * (1 + top) * static_cast<long>(d.nvars()));
}

NilpotenceVerdict is_locally_nilpotent(const Derivation& d, unsigned cap) {
  if (cap == 0) cap = default_nilpotence_cap(d);
  const std::size_t n = d.nvars();
  NilpotenceVerdict v;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial q = Polynomial::variable(n, i);
    unsigned k = 0;
    bool vanished = false;
    while (k < cap) {
      Polynomial next = apply(d, q);
      ++k;
      if (next.is_zero()) {
        vanished = true;
        break;
      }
      // an LND never satisfies d(q) = b q with b != 0
      if (auto b = divide_exact(next, q)) {
        v.kind = NilpotenceVerdict::Kind::NotNilpotent;
        v.variable = i;
        v.reason = "d^" + std::to_string(k) + "(x" + std::to_string(i + 1) + ") is a nonzero multiple of its predecessor";
        v.orders.clear();
        return v;
      }
      q = std::move(next);
    }
    if (!vanished) {
      v.kind = NilpotenceVerdict::Kind::Unknown;
      v.variable = i;
      v.reason = "x" + std::to_string(i + 1) + " did not vanish within " + std::to_string(cap) + " iterations";
      v.orders.clear();
      return v;
    }
    v.orders.push_back(k);
  }
  v.kind = NilpotenceVerdict::Kind::LocallyNilpotent;
  return v;
}

Derivation delta_derivation(const PolyMap& inv, std::size_t i) {
  const std::size_t n = inv.nvars();
  if (i >= n) throw DimensionError("delta index out of range");
  Derivation d;
  std::vector<Polynomial> rows = inv.coords;
  for (std::size_t j = 0; j < n; ++j) {
    rows[i] = Polynomial::variable(n, j);
    d.coeffs.push_back(jacobian(rows));
  }
  return d;
}

LndWitness lnd_witness(const Automorphism& phi, const WeightVector& w1, const std::optional<Polynomial>& relation,
                       unsigned cap) {
  const std::size_t n = phi.nvars();
  if (w1.size() != n) throw DimensionError("weight vector has the wrong length");
  WeightVector d = deg2_weights(phi.forward, w1);
  for (std::size_t i = 0; i < n; ++i) {
    Derivation delta = delta_derivation(phi.inverse, i);
    WDegree r = derivation_degree(delta, d);
    if (r.is_minus_infinity() || r < WDegree(-w1[i])) continue;
    LndWitness out;
    out.index = i;
    out.d = d;
    out.dbar = leading_derivation(delta, d);
    out.delta = std::move(delta);
    out.delta_degree = r;
    out.verdict = is_locally_nilpotent(out.dbar, cap);
    if (out.verdict.kind != NilpotenceVerdict::Kind::LocallyNilpotent) {
      throw NoWitnessIndex("leading derivation at index " + std::to_string(i + 1) +
                           " is not locally nilpotent: " + out.verdict.reason);
    }
    if (relation) out.annihilates = apply(out.dbar, *relation).is_zero();
    return out;
  }
  throw NoWitnessIndex("no index i with deg2(Delta_i) >= -w_i; the map is not an automorphism");
}

std::string format_derivation(const Derivation& d) { return format_map(PolyMap{d.coeffs}); }

Derivation parse_derivation(std::string_view text, std::size_t nvars) {
  return Derivation{parse_map(text, nvars).coords};
}

}  // namespace autrel
