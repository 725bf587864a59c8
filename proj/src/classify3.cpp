#include "autrel/classify3.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "autrel/binary_form.hpp"

namespace autrel {

namespace {

using Tag = RelationTag;

Polynomial term(const Rational& c, std::uint32_t i, std::uint32_t j, std::uint32_t k = 0) {
  return Polynomial::term(Monomial{i, j, k}, c);
}

Polynomial var(std::size_t i) { return Polynomial::variable(3, i); }

Polynomial shift_x3(const Polynomial& p, const Polynomial& t) {
  std::vector<Polynomial> images{var(0), var(1), var(2) + t};
  return compose(p, images);
}

// Coefficients of R as a polynomial in x3; entry e holds the x3^e part with x3 removed.
std::vector<Polynomial> x3_coefficients(const Polynomial& R) {
  std::vector<Polynomial> out(R.degree_in(2) + 1, Polynomial(3));
  for (const auto& [m, c] : R.terms()) out[m[2]].add_term(m.with_exponent(2, 0), c);
  return out;
}

struct Term2 {
  std::uint32_t i;
  std::uint32_t j;
  Rational c;
};

std::vector<Term2> terms2(const Polynomial& F) {
  std::vector<Term2> out;
  for (const auto& [m, c] : F.terms()) out.push_back({m[0], m[1], c});
  return out;
}

Rational coeff2(const Polynomial& F, std::uint32_t i, std::uint32_t j) { return F.coefficient(Monomial{i, j, 0}); }

bool support_within(const Polynomial& F, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& allowed) {
  for (const auto& t : terms2(F)) {
    if (std::find(allowed.begin(), allowed.end(), std::make_pair(t.i, t.j)) == allowed.end()) return false;
  }
  return true;
}

Rational cubic_discriminant(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return Rational(b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d);
}

// A x3 shape: x2 + a x1^e1 after dividing by the x2 coefficient.
struct LinearX2 {
  Rational c;  // coefficient of x2
  Rational a;
  unsigned e1 = 1;
};

std::optional<LinearX2> match_linear_x2(const Polynomial& A) {
  Rational c = A.coefficient(Monomial{0, 1, 0});
  if (c == 0 || A.size() > 2) return std::nullopt;
  LinearX2 out{c, Rational(0), 1};
  for (const auto& [m, coef] : A.terms()) {
    if (m == Monomial{0, 1, 0}) continue;
    if (m[1] != 0 || m[2] != 0 || m[0] == 0) return std::nullopt;
    out.a = coef / c;
    out.e1 = m[0];
  }
  return out;
}

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw DomainError("weights must be integers");
  return q.get_num();
}

RelationType make_type(Tag tag, const Rational& scale, const Polynomial& h) {
  RelationType t;
  t.tag = tag;
  t.scale = scale;
  t.h = h;
  return t;
}

ClassifyOutcome not_in_list(std::string reason, InequalityReport ineq) {
  ClassifyOutcome o;
  o.kind = ClassifyOutcome::Kind::NotInList;
  o.reason = std::move(reason);
  o.inequalities = std::move(ineq);
  return o;
}

// Square lines T5..T13 for x3^2 + F.
std::variant<RelationType, std::string> match_square(const Polynomial& F, const Integer& d1, const Integer& d2) {
  auto ts = terms2(F);
  RelationType t;
  auto with = [&](Tag tag, std::initializer_list<std::pair<const char*, Rational>> ps) {
    t.tag = tag;
    for (const auto& [k, v] : ps) t.params[k] = v;
    return t;
  };
  if (ts.size() == 1) {
    const auto& [i, j, c] = ts.front();
    if (i == 0 && j == 3) return with(Tag::T5, {{"c", c}});
    if (i == 1 && j == 2) return with(Tag::T6, {{"c", c}});
    if (j == 0 && i >= 3 && i % 2 == 1) return with(Tag::T7, {{"c", c}, {"r1", Rational(i)}});
    if (j == 1 && i >= 1) return with(Tag::T8, {{"c", c}, {"r1", Rational(i)}});
  }
  if (ts.size() == 2) {
    const Term2* p0 = nullptr;
    const Term2* p1 = nullptr;
    const Term2* p2 = nullptr;
    for (const auto& x : ts) {
      if (x.j == 0) p0 = &x;
      if (x.j == 1) p1 = &x;
      if (x.j == 2 && x.i == 0) p2 = &x;
    }
    if (p0 && p2 && p0->i >= 3 && p0->i % 2 == 1) {
      return with(Tag::T9, {{"a", p0->c}, {"b", p2->c}, {"e1", Rational(p0->i)}});
    }
    if (p0 && p1 && p0->i > p1->i) {
      return with(Tag::T10, {{"a", p0->c}, {"b", p1->c}, {"e1", Rational(p0->i - p1->i)}, {"r1", Rational(p1->i)}});
    }
  }
  if (d2 % d1 == 0) {
    const std::uint32_t e1 = static_cast<std::uint32_t>(Integer(d2 / d1).get_ui());
    if (support_within(F, {{2 * e1, 0}, {e1, 1}, {0, 2}})) {
      Rational A = coeff2(F, 2 * e1, 0), B = coeff2(F, e1, 1), C = coeff2(F, 0, 2);
      Rational disc = B * B - 4 * A * C;
      if (disc != 0) {
        Rational a1, b1, a2, b2;
        if (C == 0) {
          a1 = 1, b1 = 0, a2 = A, b2 = B;
        } else {
          auto root = rational_sqrt(disc);
          if (!root) return std::string("factors of the quadratic part need sqrt(" + to_string(disc) + ")");
          Rational s1 = (-B + *root) / (2 * C);
          Rational s2 = (-B - *root) / (2 * C);
          a1 = -C * s1, b1 = C, a2 = -s2, b2 = 1;
        }
        return with(Tag::T11, {{"a1", a1}, {"b1", b1}, {"a2", a2}, {"b2", b2}, {"e1", Rational(e1)}});
      }
    }
  }
  if (d1 == d2) {
    bool cubic = std::all_of(ts.begin(), ts.end(), [](const Term2& x) { return x.i + x.j == 3; });
    if (cubic && cubic_discriminant(coeff2(F, 3, 0), coeff2(F, 2, 1), coeff2(F, 1, 2), coeff2(F, 0, 3)) == 0) {
      auto fac = factor_weighted_binary_form(F, 1, 1);
      if (auto* ext = std::get_if<BinaryFormNeedsExtension>(&fac)) return ext->reason;
      const auto& f = std::get<BinaryFormFactors>(fac);
      if (f.k() == 3) {
        auto pairs = f.pairs;
        std::size_t rep = pairs[0] == pairs[1] ? 0 : 1;
        if (pairs[rep] == pairs[rep + 1]) {
          std::size_t lone = rep == 0 ? 2 : 0;
          return with(Tag::T12, {{"a1", f.c * pairs[lone].first},
                                 {"b1", f.c * pairs[lone].second},
                                 {"a2", pairs[rep].first},
                                 {"b2", pairs[rep].second}});
        }
      }
    }
  }
  if (d2 % d1 == 0 && d2 / d1 >= 2) {
    const std::uint32_t e1 = static_cast<std::uint32_t>(Integer(d2 / d1).get_ui());
    if (support_within(F, {{2 * e1 + 1, 0}, {e1 + 1, 1}, {1, 2}})) {
      Rational c = coeff2(F, 1, 2);
      if (c != 0) {
        Rational a = coeff2(F, e1 + 1, 1) / (2 * c);
        if (a != 0 && coeff2(F, 2 * e1 + 1, 0) == c * a * a) {
          return with(Tag::T13, {{"c", c}, {"a", a}, {"e1", Rational(e1)}});
        }
      }
    }
  }
  return std::string();
}

// Generator helpers in three variables.
Generator scale_gen(std::size_t i, const Rational& s) {
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3, Rational(0)));
  for (std::size_t k = 0; k < 3; ++k) m[k][k] = 1;
  m[i][i] = s;
  return make_affine(std::move(m), std::vector<Rational>(3, Rational(0)));
}

Generator linear_gen(const std::vector<std::vector<Rational>>& m2) {
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3, Rational(0)));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) m[i][j] = m2[i][j];
  }
  m[2][2] = 1;
  return make_affine(std::move(m), std::vector<Rational>(3, Rational(0)));
}

// Substitution (x1, x2) -> M^{-1}(x1, x2), which turns the rows of M into x1, x2.
Generator inverse_linear_gen(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2) {
  Rational det = a1 * b2 - a2 * b1;
  return linear_gen({{b2 / det, -b1 / det}, {-a2 / det, a1 / det}});
}

class Normalizer {
 public:
  explicit Normalizer(const Polynomial& start) : cur_(start) {}

  void apply(const Generator& g) {
    cur_ = compose(cur_, generator_map(g, 3).coords);
    subs_.push_back(g);
  }
  void elementary(std::size_t target, const Polynomial& addend) {
    if (!addend.is_zero()) apply(make_elementary(3, target, addend));
  }
  void swap(std::size_t i, std::size_t j) { apply(make_transposition(3, i, j)); }

  const Polynomial& current() const { return cur_; }

  AutWord word() const {
    AutWord w(3);
    for (auto it = subs_.rbegin(); it != subs_.rend(); ++it) w.push_back(*it);
    return w;
  }

  CanonicalForm fiber(unsigned k, Polynomial P) const {
    CanonicalForm f;
    f.kind = CanonicalForm::Kind::TriangularFiber;
    f.k = k;
    f.P = std::move(P);
    return f;
  }

  // current = mu (x1^r + c x2^s); c is kept when 1/c has no rational s-th root
  CanonicalForm binomial(unsigned r, unsigned s) {
    Rational mu = cur_.coefficient(Monomial{r, 0, 0});
    Rational c = cur_.coefficient(Monomial{0, s, 0}) / mu;
    CanonicalForm f;
    f.kind = CanonicalForm::Kind::Binomial;
    f.r = r;
    f.s = s;
    f.coeff = c;
    if (c != 1) {
      if (auto delta = rational_root(1 / c, s)) {
        apply(scale_gen(1, *delta));
        f.coeff = 1;
      }
    }
    return f;
  }

  CanonicalForm x3() const {
    CanonicalForm f;
    f.kind = CanonicalForm::Kind::X3;
    return f;
  }

  // x3^2 + c x1 x2^2
  CanonicalForm route_x1x2sq(const Rational& c) {
    swap(0, 2);
    swap(0, 1);
    apply(scale_gen(2, 1 / c));
    return fiber(2, term(Rational(1), 0, 2));
  }

  // x3^2 + c x2^3
  CanonicalForm route_x2cubed() {
    swap(0, 2);
    return binomial(2, 3);
  }

  // x3^2 + a x1^e + b x2^2
  CanonicalForm route_sum_of_squares(const Rational& a, unsigned e, const Rational& b) {
    auto beta = rational_sqrt(-b);
    if (!beta) return unresolved("x3^2 + b x2^2 splits only over Q(sqrt(" + to_string(Rational(-b)) + "))");
    Rational inv = 1 / (2 * *beta);
    std::vector<std::vector<Rational>> m{{1, 0, 0}, {0, inv, -inv}, {0, Rational(1, 2), Rational(1, 2)}};
    apply(make_affine(std::move(m), std::vector<Rational>(3, Rational(0))));
    swap(0, 1);
    return fiber(1, term(a, 0, e));
  }

  // x3^2 + (a x1^e1 + b x2) x1^r1
  CanonicalForm route_linear_x2(const Rational& a, unsigned e1, const Rational& b, unsigned r1) {
    apply(scale_gen(1, 1 / b));
    elementary(1, term(Rational(-a), e1, 0));
    swap(1, 2);
    if (r1 == 0) {
      elementary(2, term(Rational(-1), 0, 2));
      return x3();
    }
    return fiber(r1, term(Rational(1), 0, 2));
  }

  CanonicalForm unresolved(std::string reason) const {
    CanonicalForm f;
    f.kind = CanonicalForm::Kind::Unresolved;
    f.reached = cur_;
    f.reason = std::move(reason);
    return f;
  }

 private:
  Polynomial cur_;
  std::vector<Generator> subs_;
};

}  // namespace

std::string to_string(RelationTag tag) {
  switch (tag) {
    case Tag::Zero: return "Zero";
    case Tag::ElemReducible: return "ElemReducible";
    case Tag::TwoVarBinomial: return "TwoVarBinomial";
    case Tag::T3_ProductLinearX3: return "T3_ProductLinearX3";
    case Tag::T4_MonomialX3: return "T4_MonomialX3";
    case Tag::T5: return "T5";
    case Tag::T6: return "T6";
    case Tag::T7: return "T7";
    case Tag::T8: return "T8";
    case Tag::T9: return "T9";
    case Tag::T10: return "T10";
    case Tag::T11: return "T11";
    case Tag::T12: return "T12";
    case Tag::T13: return "T13";
  }
  return "?";
}

std::optional<RelationTag> parse_relation_tag(const std::string& name) {
  if (name == "Zero") return Tag::Zero;
  for (Tag t : nonzero_tags()) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

const std::vector<RelationTag>& nonzero_tags() {
  static const std::vector<RelationTag> tags{Tag::ElemReducible, Tag::TwoVarBinomial, Tag::T3_ProductLinearX3,
                                             Tag::T4_MonomialX3, Tag::T5,  Tag::T6,  Tag::T7,  Tag::T8,
                                             Tag::T9,  Tag::T10, Tag::T11, Tag::T12, Tag::T13};
  return tags;
}

const Rational& RelationType::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw DomainError("relation type has no parameter '" + name + "'");
  return it->second;
}

long RelationType::int_param(const std::string& name) const {
  const Rational& q = param(name);
  if (!is_integer(q) || !q.get_num().fits_slong_p()) throw DomainError("parameter '" + name + "' is not an integer");
  return q.get_num().get_si();
}

Polynomial reconstruct(const RelationType& t) {
  auto u = [&](const char* e) { return static_cast<std::uint32_t>(t.int_param(e)); };
  auto p = [&](const char* n) { return t.param(n); };
  Polynomial x3 = var(2);
  Polynomial x3sq = x3 * x3;
  Polynomial pattern(3);
  switch (t.tag) {
    case Tag::Zero:
      return Polynomial(3);
    case Tag::ElemReducible:
      pattern = x3;
      break;
    case Tag::TwoVarBinomial:
      pattern = term(Rational(1), u("e1"), 0) + term(p("c"), 0, u("e2"));
      break;
    case Tag::T3_ProductLinearX3:
      pattern = (var(1) + term(p("a"), u("e1"), 0)) * x3 + term(p("c"), u("k"), 0);
      break;
    case Tag::T4_MonomialX3:
      pattern = term(Rational(1), u("k"), 0, 1) + t.P;
      break;
    case Tag::T5:
      pattern = x3sq + term(p("c"), 0, 3);
      break;
    case Tag::T6:
      pattern = x3sq + term(p("c"), 1, 2);
      break;
    case Tag::T7:
      pattern = x3sq + term(p("c"), u("r1"), 0);
      break;
    case Tag::T8:
      pattern = x3sq + term(p("c"), u("r1"), 1);
      break;
    case Tag::T9:
      pattern = x3sq + term(p("a"), u("e1"), 0) + term(p("b"), 0, 2);
      break;
    case Tag::T10:
      pattern = x3sq + (term(p("a"), u("e1"), 0) + term(p("b"), 0, 1)) * term(Rational(1), u("r1"), 0);
      break;
    case Tag::T11:
      pattern = x3sq + (term(p("a1"), u("e1"), 0) + term(p("b1"), 0, 1)) *
                           (term(p("a2"), u("e1"), 0) + term(p("b2"), 0, 1));
      break;
    case Tag::T12: {
      Polynomial l2 = term(p("a2"), 1, 0) + term(p("b2"), 0, 1);
      pattern = x3sq + (term(p("a1"), 1, 0) + term(p("b1"), 0, 1)) * l2 * l2;
      break;
    }
    case Tag::T13: {
      Polynomial l = term(p("a"), u("e1"), 0) + var(1);
      pattern = x3sq + p("c") * l * l * var(0);
      break;
    }
  }
  return shift_x3(pattern, t.h);
}

std::string to_string(ClassifyOutcome::Kind kind) {
  switch (kind) {
    case ClassifyOutcome::Kind::Classified: return "Classified";
    case ClassifyOutcome::Kind::Forbidden: return "Forbidden";
    case ClassifyOutcome::Kind::NeedsExtension: return "NeedsExtension";
    case ClassifyOutcome::Kind::NotWeightedHomogeneous: return "NotWeightedHomogeneous";
    case ClassifyOutcome::Kind::NotInList: return "NotInList";
  }
  return "?";
}

CompletedSquare complete_square_x3(const Polynomial& R) {
  if (R.nvars() != 3) throw DimensionError("complete_square_x3 needs three variables");
  const auto deg = R.degree_in(2);
  if (deg > 2) throw DomainError("degree in x3 exceeds 2");
  auto co = x3_coefficients(R);
  CompletedSquare out{R, Polynomial(3)};
  if (deg == 2) {
    if (!co[2].is_constant()) throw OddLeadingX3Coefficient("coefficient of x3^2 is not constant");
    out.h = co[1] * (1 / (2 * co[2].constant_term()));
  } else if (deg == 1) {
    const Polynomial& A = co[1];
    const Polynomial& B = co[0];
    if (A.is_constant()) {
      out.h = B * (1 / A.constant_term());
    } else if (auto lin = match_linear_x2(A)) {
      Polynomial P = B * (1 / lin->c);
      Polynomial L = var(1) + term(lin->a, lin->e1, 0);
      std::vector<Polynomial> on_line{var(0), term(Rational(-lin->a), lin->e1, 0), var(2)};
      Polynomial P0 = compose(P, on_line);
      auto Q = divide_exact(P - P0, L);
      if (!Q) throw Error("internal: P - P0 is not divisible by x2 + a x1^e1");
      out.h = *Q;
    }
  }
  if (!out.h.is_zero()) out.Rprime = shift_x3(R, -out.h);
  return out;
}

std::optional<int> forbidden_match(const Polynomial& R) {
  if (R.nvars() != 3 || R.degree_in(2) != 2) return std::nullopt;
  auto co = x3_coefficients(R);
  if (!co[2].is_constant() || !co[1].is_zero()) return std::nullopt;
  Polynomial F = co[0] * (1 / co[2].constant_term());
  if (F.is_zero()) return std::nullopt;
  auto ts = terms2(F);

  auto two_terms = [&](std::pair<std::uint32_t, std::uint32_t> m, std::pair<std::uint32_t, std::uint32_t> n) {
    return ts.size() == 2 && coeff2(F, m.first, m.second) != 0 && coeff2(F, n.first, n.second) != 0;
  };
  if (two_terms({4, 0}, {0, 3})) return 1;
  if (two_terms({5, 0}, {0, 3})) return 2;

  // x1 (A u^2 + B u x2 + C x2^2), u = x1^e1, C != 0, B^2 - 4AC != 0
  if (std::all_of(ts.begin(), ts.end(), [](const Term2& t) { return t.i >= 1; }) && coeff2(F, 1, 2) != 0) {
    std::optional<std::uint32_t> e1;
    bool shape = true;
    for (const auto& t : ts) {
      std::optional<std::uint32_t> e;
      if (t.j == 2 && t.i == 1) continue;
      if (t.j == 1) e = t.i - 1;
      if (t.j == 0 && (t.i - 1) % 2 == 0) e = (t.i - 1) / 2;
      if (!e || *e == 0 || (e1 && *e1 != *e)) {
        shape = false;
        break;
      }
      e1 = e;
    }
    if (shape && e1) {
      Rational A = coeff2(F, 2 * *e1 + 1, 0), B = coeff2(F, *e1 + 1, 1), C = coeff2(F, 1, 2);
      if (B * B - 4 * A * C != 0) return 3;
    }
  }

  if (std::all_of(ts.begin(), ts.end(), [](const Term2& t) { return t.i + t.j == 3; }) &&
      cubic_discriminant(coeff2(F, 3, 0), coeff2(F, 2, 1), coeff2(F, 1, 2), coeff2(F, 0, 3)) != 0) {
    return 4;
  }
  if (two_terms({3, 1}, {0, 3})) return 5;
  if (ts.size() == 2 && coeff2(F, 1, 2) != 0) {
    for (const auto& t : ts) {
      if (t.j == 0 && t.i >= 4 && t.i % 2 == 0) return 6;
    }
  }
  return std::nullopt;
}

InequalityReport check_inequalities(const Polynomial& R, const WeightVector& d) {
  InequalityReport rep;
  if (R.is_zero()) return rep;
  Rational bound = d.sum() - 2;
  for (const auto& [m, c] : R.terms()) {
    if (d.degree_of(m) > bound) {
      rep.support_bound = false;
      rep.notes.push_back("support bound fails at a monomial of degree " + to_string(d.degree_of(m)));
      break;
    }
  }
  if (R.degree_in(2) != 2) return rep;
  rep.square_bound = d[2] <= d[0] + d[1] - 2;
  if (!*rep.square_bound) rep.notes.push_back("d3 > d1 + d2 - 2");
  try {
    CompletedSquare cs = complete_square_x3(R);
    auto co = x3_coefficients(cs.Rprime);
    Polynomial F = co[0];
    if (F.is_zero()) return rep;
    auto fac = factor_weighted_binary_form(F, to_integer(d[0]), to_integer(d[1]));
    unsigned k, e1, e2, r1, r2;
    if (auto* f = std::get_if<BinaryFormFactors>(&fac)) {
      std::tie(k, e1, e2, r1, r2) = std::make_tuple(f->k(), f->e1, f->e2, f->r1, f->r2);
    } else {
      auto& x = std::get<BinaryFormNeedsExtension>(fac);
      std::tie(k, e1, e2, r1, r2) = std::make_tuple(x.k, x.e1, x.e2, x.r1, x.r2);
    }
    Rational mid = Rational(k) + Rational(r1, e1) + Rational(r2, e2);
    Rational lo = Rational(2, e2);
    Rational hi = lo + Rational(2, e1);
    rep.factor_bound = lo <= mid && mid < hi;
    if (!*rep.factor_bound) rep.notes.push_back("2/e2 <= k + r1/e1 + r2/e2 < 2/e2 + 2/e1 fails");
  } catch (const DomainError& e) {
    rep.notes.push_back(e.what());
  }
  return rep;
}

ClassifyOutcome classify(const Polynomial& R, const WeightVector& d) {
  if (R.nvars() != 3 || d.size() != 3) throw DimensionError("classify needs three variables and three weights");
  if (!d.is_integral()) throw DomainError("classify needs integer weights");
  if (!(d[0] <= d[1] && d[1] <= d[2])) throw DomainError("classify needs weights sorted ascending");

  ClassifyOutcome out;
  if (R.is_zero()) {
    out.kind = ClassifyOutcome::Kind::Classified;
    out.type = make_type(Tag::Zero, Rational(1), Polynomial(3));
    out.reason = "affine case";
    return out;
  }
  if (!is_homogeneous(R, d)) {
    out.kind = ClassifyOutcome::Kind::NotWeightedHomogeneous;
    out.reason = "R is not homogeneous for the given weights";
    return out;
  }
  InequalityReport ineq = check_inequalities(R, d);
  const Integer d1 = to_integer(d[0]);
  const Integer d2 = to_integer(d[1]);
  const auto deg = R.degree_in(2);

  RelationType type;
  if (deg > 2) return not_in_list("degree in x3 is " + std::to_string(deg), ineq);

  if (deg == 0) {
    auto ts = terms2(R);
    if (ts.size() != 2) return not_in_list("two-variable relation is not a binomial", ineq);
    const Term2* t1 = nullptr;
    const Term2* t2 = nullptr;
    for (const auto& t : ts) {
      if (t.j == 0 && t.i > 0) t1 = &t;
      if (t.i == 0 && t.j > 0) t2 = &t;
    }
    if (!t1 || !t2 || std::gcd(t1->i, t2->j) != 1) {
      return not_in_list("two-variable relation is not x1^e1 + c x2^e2 with gcd(e1, e2) = 1", ineq);
    }
    type = make_type(Tag::TwoVarBinomial, t1->c, Polynomial(3));
    type.params = {{"c", t2->c / t1->c}, {"e1", Rational(t1->i)}, {"e2", Rational(t2->j)}};
  } else if (deg == 1) {
    auto co = x3_coefficients(R);
    const Polynomial& A = co[1];
    const Polynomial& B = co[0];
    if (A.is_constant()) {
      Rational a = A.constant_term();
      type = make_type(Tag::ElemReducible, a, B * (1 / a));
    } else if (A.size() == 1 && A.terms().begin()->first[1] == 0) {
      const auto& [m, c] = *A.terms().begin();
      type = make_type(Tag::T4_MonomialX3, c, Polynomial(3));
      type.params = {{"k", Rational(m[0])}};
      type.P = B * (1 / c);
    } else if (auto lin = match_linear_x2(A)) {
      CompletedSquare cs = complete_square_x3(R);
      Polynomial rest = x3_coefficients(cs.Rprime)[0] * (1 / lin->c);
      if (rest.is_zero()) return not_in_list("reducible: x2 + a x1^e1 divides R", ineq);
      if (rest.size() != 1 || rest.terms().begin()->first[1] != 0) {
        return not_in_list("remainder is not a monomial in x1", ineq);
      }
      const auto& [m, c] = *rest.terms().begin();
      if (m[0] < 2) return not_in_list("remainder degree in x1 is below 2", ineq);
      type = make_type(Tag::T3_ProductLinearX3, lin->c, cs.h);
      type.params = {{"a", lin->a}, {"c", c}, {"k", Rational(m[0])}, {"e1", Rational(lin->e1)}};
    } else {
      return not_in_list("coefficient of x3 is neither x1^k nor x2 + a x1^e1", ineq);
    }
  } else {
    CompletedSquare cs;
    try {
      cs = complete_square_x3(R);
    } catch (const OddLeadingX3Coefficient& e) {
      return not_in_list(e.what(), ineq);
    }
    Rational lead = x3_coefficients(R)[2].constant_term();
    Polynomial F = x3_coefficients(cs.Rprime)[0] * (1 / lead);
    if (F.is_zero()) return not_in_list("reducible: R is a square", ineq);
    if (auto idx = forbidden_match(var(2) * var(2) + F)) {
      out.kind = ClassifyOutcome::Kind::Forbidden;
      out.forbidden_index = *idx;
      out.inequalities = ineq;
      return out;
    }
    auto m = match_square(F, d1, d2);
    if (auto* why = std::get_if<std::string>(&m)) {
      if (!why->empty()) {
        out.kind = ClassifyOutcome::Kind::NeedsExtension;
        out.reason = *why;
        out.inequalities = ineq;
        return out;
      }
      auto fac = factor_weighted_binary_form(F, d1, d2);
      if (auto* ext = std::get_if<BinaryFormNeedsExtension>(&fac)) {
        out.kind = ClassifyOutcome::Kind::NeedsExtension;
        out.reason = ext->reason;
        out.inequalities = ineq;
        return out;
      }
      return not_in_list("square case matches no line", ineq);
    }
    type = std::get<RelationType>(m);
    type.scale = lead;
    type.h = cs.h;
  }

  if (type.scale * reconstruct(type) != R) throw Error("internal: classified pattern does not reconstruct R");
  out.kind = ClassifyOutcome::Kind::Classified;
  out.type = std::move(type);
  out.inequalities = std::move(ineq);
  return out;
}

Polynomial CanonicalForm::polynomial() const {
  switch (kind) {
    case Kind::Zero: return Polynomial(3);
    case Kind::X3: return var(2);
    case Kind::Binomial: return term(Rational(1), r, 0) + term(coeff, 0, s);
    case Kind::TriangularFiber: return term(Rational(1), k, 0, 1) + P;
    case Kind::Unresolved: return reached;
  }
  return Polynomial(3);
}

std::string to_string(CanonicalForm::Kind kind) {
  switch (kind) {
    case CanonicalForm::Kind::Zero: return "Zero";
    case CanonicalForm::Kind::X3: return "X3";
    case CanonicalForm::Kind::Binomial: return "Binomial";
    case CanonicalForm::Kind::TriangularFiber: return "TriangularFiber";
    case CanonicalForm::Kind::Unresolved: return "Unresolved";
  }
  return "?";
}

std::optional<Derivation> canonical_lnd(const CanonicalForm& form) {
  switch (form.kind) {
    case CanonicalForm::Kind::Zero:
    case CanonicalForm::Kind::X3:
      return partial_derivation(3, 0);
    case CanonicalForm::Kind::Binomial:
      return partial_derivation(3, 2);
    case CanonicalForm::Kind::TriangularFiber:
      return Derivation{{Polynomial(3), term(Rational(1), form.k, 0), -partial(form.P, 1)}};
    case CanonicalForm::Kind::Unresolved:
      break;
  }
  return std::nullopt;
}

NormalForm normalize(const Polynomial& R, const RelationType& t) {
  NormalForm nf;
  if (t.tag == Tag::Zero) {
    if (!R.is_zero()) throw WitnessVerificationFailed("Zero type with a nonzero relation");
    return nf;
  }
  Normalizer n(R);
  n.elementary(2, -t.h);
  auto p = [&](const char* name) { return t.param(name); };
  auto u = [&](const char* name) { return static_cast<unsigned>(t.int_param(name)); };

  CanonicalForm form;
  switch (t.tag) {
    case Tag::Zero:
      break;
    case Tag::ElemReducible:
      form = n.x3();
      break;
    case Tag::TwoVarBinomial:
      form = n.binomial(u("e1"), u("e2"));
      break;
    case Tag::T3_ProductLinearX3:
      n.elementary(1, term(Rational(-p("a")), u("e1"), 0));
      n.swap(0, 1);
      form = n.fiber(1, term(p("c"), 0, u("k")));
      break;
    case Tag::T4_MonomialX3:
      form = n.fiber(u("k"), t.P);
      break;
    case Tag::T5:
      form = n.route_x2cubed();
      break;
    case Tag::T6:
      form = n.route_x1x2sq(p("c"));
      break;
    case Tag::T7:
      n.swap(1, 2);
      form = n.binomial(u("r1"), 2);
      break;
    case Tag::T8:
      n.swap(1, 2);
      n.apply(scale_gen(2, 1 / p("c")));
      form = n.fiber(u("r1"), term(Rational(1), 0, 2));
      break;
    case Tag::T9:
      form = n.route_sum_of_squares(p("a"), u("e1"), p("b"));
      break;
    case Tag::T10:
      form = n.route_linear_x2(p("a"), u("e1"), p("b"), u("r1"));
      break;
    case Tag::T11: {
      Rational a1 = p("a1"), b1 = p("b1"), a2 = p("a2"), b2 = p("b2");
      unsigned e1 = u("e1");
      if (e1 == 1) {
        n.apply(inverse_linear_gen(a1, b1, a2, b2));
        n.swap(1, 2);
        form = n.fiber(1, term(Rational(1), 0, 2));
      } else if (b1 == 0) {
        form = n.route_linear_x2(a1 * a2, e1, a1 * b2, e1);
      } else if (b2 == 0) {
        form = n.route_linear_x2(a1 * a2, e1, a2 * b1, e1);
      } else {
        Rational A = a1 * a2, B = a1 * b2 + a2 * b1, C = b1 * b2;
        n.elementary(1, term(Rational(-B / (2 * C)), e1, 0));
        form = n.route_sum_of_squares(Rational(A - B * B / (4 * C)), 2 * e1, C);
      }
      break;
    }
    case Tag::T12: {
      Rational a1 = p("a1"), b1 = p("b1"), a2 = p("a2"), b2 = p("b2");
      if (a1 * b2 - a2 * b1 != 0) {
        n.apply(inverse_linear_gen(a1, b1, a2, b2));
        form = n.route_x1x2sq(Rational(1));
      } else {
        if (b2 != 0) {
          n.apply(linear_gen({{1, 0}, {Rational(-a2 / b2), Rational(1 / b2)}}));
        } else {
          n.apply(linear_gen({{0, Rational(1 / a2)}, {1, 0}}));
        }
        form = n.route_x2cubed();
      }
      break;
    }
    case Tag::T13:
      n.elementary(1, term(Rational(-p("a")), u("e1"), 0));
      form = n.route_x1x2sq(p("c"));
      break;
  }

  nf.canonical = std::move(form);
  nf.witness = n.word();
  Polynomial reached = compose(R, expand(nf.witness).coords);
  Polynomial target = nf.canonical.polynomial();
  if (target.is_zero()) throw WitnessVerificationFailed("canonical form is zero for a nonzero relation");
  const Monomial& m = target.lex_leading().first;
  Rational scalar = reached.coefficient(m) / target.lex_leading().second;
  if (scalar == 0 || reached != target * scalar) {
    throw WitnessVerificationFailed("witness maps R to " + format_poly(reached) + ", not a multiple of " +
                                    format_poly(target));
  }
  nf.residual_scalar = scalar;
  return nf;
}

}  // namespace autrel
