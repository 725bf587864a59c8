#include "autrel/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "autrel/error.hpp"

namespace autrel {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::with_exponent(std::size_t i, std::uint32_t e) const {
  Monomial r(*this);
  r.exps_[i] = e;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return term(Monomial::variable(nvars, index), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::total_degree() const noexcept {
  long best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, static_cast<long>(m.total_degree()));
  return best;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const noexcept {
  std::uint32_t best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m[var]);
  return best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw DimensionError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionError("polynomials live in rings with " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  Rational prod;
  for (const auto& [ms, cs] : small.terms_) {
    for (const auto& [mb, cb] : big.terms_) {
      prod = cs * cb;
      auto [it, inserted] = r.terms_.try_emplace(ms * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
  return r;
}

Polynomial Polynomial::embed(std::size_t new_nvars, std::size_t offset) const {
  if (offset + nvars_ > new_nvars) throw DimensionError("embedding does not fit");
  Polynomial r(new_nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) e[offset + i] = m[i];
    r.terms_.emplace(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::permute(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_) throw DimensionError("permutation length mismatch");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(nvars_, 0);
    for (std::size_t i = 0; i < nvars_; ++i) e[perm[i]] = m[i];
    r.terms_.emplace(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), Rational(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial partial(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw DimensionError("derivative variable out of range");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    r.add_term(m.with_exponent(var, m[var] - 1), c * m[var]);
  }
  return r;
}

namespace {

struct PowerCache {
  explicit PowerCache(std::span<const Polynomial> images) : images(images), powers(images.size()) {}

  const Polynomial& get(std::size_t var, std::uint32_t k) {
    auto& list = powers[var];
    if (list.empty()) list.push_back(Polynomial::constant(images[var].nvars(), Rational(1)));
    while (list.size() <= k) list.push_back(list.back() * images[var]);
    return list[k];
  }

  std::span<const Polynomial> images;
  std::vector<std::vector<Polynomial>> powers;
};

using TermRef = const Polynomial::TermMap::value_type*;

// Nested Horner evaluation: group by the exponent of `var`, recurse on the rest.
Polynomial compose_rec(std::vector<TermRef>& terms, std::size_t begin, std::size_t end, std::size_t var,
                       PowerCache& cache, std::size_t out_nvars) {
  Polynomial result(out_nvars);
  if (var == cache.images.size()) {
    Rational sum(0);
    for (std::size_t i = begin; i < end; ++i) sum += terms[i]->second;
    return Polynomial::constant(out_nvars, sum);
  }
  std::sort(terms.begin() + static_cast<long>(begin), terms.begin() + static_cast<long>(end),
            [var](TermRef a, TermRef b) { return a->first[var] < b->first[var]; });
  std::size_t i = begin;
  while (i < end) {
    std::uint32_t e = terms[i]->first[var];
    std::size_t j = i;
    while (j < end && terms[j]->first[var] == e) ++j;
    Polynomial inner = compose_rec(terms, i, j, var + 1, cache, out_nvars);
    if (e == 0) {
      result += inner;
    } else {
      result += cache.get(var, e) * inner;
    }
    i = j;
  }
  return result;
}

}  // namespace

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.nvars()) {
    throw DimensionError("composition needs " + std::to_string(p.nvars()) + " images, got " +
                         std::to_string(images.size()));
  }
  if (images.empty()) return p;
  std::size_t out_nvars = images[0].nvars();
  for (const auto& img : images) {
    if (img.nvars() != out_nvars) throw DimensionError("composition images live in different rings");
  }
  if (p.is_zero()) return Polynomial(out_nvars);
  std::vector<TermRef> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(&t);
  PowerCache cache(images);
  return compose_rec(terms, 0, terms.size(), 0, cache, out_nvars);
}

namespace {

Polynomial determinant(std::vector<std::vector<Polynomial>> m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, Rational(1));
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial det(nvars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(std::move(minor), nvars);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

Polynomial jacobian(std::span<const Polynomial> rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.nvars() != n) throw DimensionError("jacobian needs n polynomials in n variables");
  }
  std::vector<std::vector<Polynomial>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(partial(rows[i], j));
  }
  return determinant(std::move(m), n);
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("division between different rings");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial q(a.nvars());
  Polynomial r = a;
  const auto& [lm_b, lc_b] = b.lex_leading();
  while (!r.is_zero()) {
    const auto& [lm_r, lc_r] = r.lex_leading();
    if (!lm_b.divides(lm_r)) return std::nullopt;
    Monomial m = lm_r / lm_b;
    Rational c = lc_r / lc_b;
    q.add_term(m, c);
    r -= b.mul_term(m, c);
  }
  return q;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.lex_leading().second < 0) scale = -scale;
  return p * scale;
}

// ---------------------------------------------------------------------------
// Weights and degrees

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (w <= 0) throw DomainError("weights must be positive, got " + to_string(w));
  }
}

WeightVector::WeightVector(std::initializer_list<long> weights) {
  std::vector<Rational> ws;
  for (long w : weights) ws.emplace_back(w);
  *this = WeightVector(std::move(ws));
}

WeightVector WeightVector::standard(std::size_t nvars) {
  return WeightVector(std::vector<Rational>(nvars, Rational(1)));
}

bool WeightVector::is_standard() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
}

bool WeightVector::is_integral() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return is_integer(w); });
}

Rational WeightVector::sum() const {
  Rational s(0);
  for (const auto& w : weights_) s += w;
  return s;
}

Rational WeightVector::degree_of(const Monomial& m) const {
  if (m.size() != weights_.size()) throw DimensionError("weight vector length mismatch");
  Rational d(0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (m[i] != 0) d += weights_[i] * m[i];
  }
  return d;
}

WeightVector parse_weights(std::string_view text) {
  std::vector<Rational> ws;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == text.npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    try {
      ws.push_back(parse_rational(piece));
    } catch (const ParseError& e) {
      throw ParseError("bad weight '" + std::string(piece) + "'", start + e.position());
    }
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return WeightVector(std::move(ws));
}

std::string format_weights(const WeightVector& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  return out;
}

const Rational& WDegree::value() const {
  if (!value_) throw DomainError("degree is minus infinity");
  return *value_;
}

std::strong_ordering operator<=>(const WDegree& a, const WDegree& b) {
  if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

WDegree operator+(const WDegree& a, const WDegree& b) {
  if (!a.value_ || !b.value_) return WDegree();
  return WDegree(Rational(*a.value_ + *b.value_));
}

WDegree operator-(const WDegree& a, const Rational& b) {
  if (!a.value_) return WDegree();
  return WDegree(Rational(*a.value_ - b));
}

std::string to_string(const WDegree& d) { return d.is_minus_infinity() ? "-inf" : to_string(d.value()); }

WDegree wdeg(const Polynomial& p, const WeightVector& w) {
  if (w.size() != p.nvars()) throw DimensionError("weight vector length mismatch");
  WDegree best;
  for (const auto& [m, c] : p.terms()) {
    WDegree d(w.degree_of(m));
    if (d > best) best = d;
  }
  return best;
}

Polynomial homogeneous_component(const Polynomial& p, const WeightVector& w, const Rational& degree) {
  if (w.size() != p.nvars()) throw DimensionError("weight vector length mismatch");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (w.degree_of(m) == degree) r.add_term(m, c);
  }
  return r;
}

Polynomial leading_term(const Polynomial& p, const WeightVector& w) {
  WDegree d = wdeg(p, w);
  if (d.is_minus_infinity()) return Polynomial(p.nvars());
  return homogeneous_component(p, w, d.value());
}

bool is_homogeneous(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) return true;
  Rational first = w.degree_of(p.terms().begin()->first);
  for (const auto& [m, c] : p.terms()) {
    if (w.degree_of(m) != first) return false;
  }
  return true;
}

}  // namespace autrel
