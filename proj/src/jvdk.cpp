#include "autrel/jvdk.hpp"

#include <algorithm>

namespace autrel {

std::optional<std::pair<Rational, unsigned>> reduce_step(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("reduce_step operands live in different rings");
  long df = f.total_degree();
  long dg = g.total_degree();
  if (dg < 1 || df < dg || df % dg != 0) return std::nullopt;
  const unsigned r = static_cast<unsigned>(df / dg);
  const WeightVector w = WeightVector::standard(f.nvars());
  Polynomial fbar = leading_term(f, w);
  Polynomial gpow = pow(leading_term(g, w), r);
  const auto& [m, coeff] = gpow.lex_leading();
  Rational c = fbar.coefficient(m) / coeff;
  if (c == 0 || fbar != gpow * c) return std::nullopt;
  return std::make_pair(c, r);
}

DecomposeOutcome decompose2(const PolyMap& m) {
  validate_map(m);
  if (m.nvars() != 2) throw DimensionError("decompose2 needs a map in two variables");
  Polynomial f = m.coords[0];
  Polynomial g = m.coords[1];
  Decomposition dec;
  std::vector<Generator> recorded;
  bool pending_swap = false;

  for (;;) {
    long df = f.total_degree();
    long dg = g.total_degree();
    if (df < 1 || dg < 1) return NotAnAutomorphism{"degree", "a coordinate is constant"};
    if (df == 1 && dg == 1) break;
    if (df < dg) {
      std::swap(f, g);
      std::swap(df, dg);
      recorded.push_back(make_transposition(2, 0, 1));
      pending_swap = true;
    }
    auto step = reduce_step(f, g);
    if (!step) {
      return NotAnAutomorphism{"reduce", "leading term of degree " + std::to_string(df) +
                                             " is not a multiple of a power of the other leading term"};
    }
    auto [c, r] = *step;
    f -= pow(g, r) * c;
    ReductionStep rs;
    rs.swapped = pending_swap;
    rs.c = c;
    rs.r = r;
    rs.degree_sum_before = df + dg;
    rs.degree_sum_after = f.total_degree() + dg;
    dec.steps.push_back(rs);
    pending_swap = false;
    Polynomial addend = Polynomial::term(Monomial::variable(2, 1, r), c);
    recorded.push_back(make_elementary(2, 0, std::move(addend)));
  }

  std::vector<std::vector<Rational>> mat(2, std::vector<Rational>(2));
  std::vector<Rational> shift(2);
  const Polynomial* rows[2] = {&f, &g};
  for (std::size_t i = 0; i < 2; ++i) {
    shift[i] = rows[i]->constant_term();
    for (std::size_t j = 0; j < 2; ++j) mat[i][j] = rows[i]->coefficient(Monomial::variable(2, j));
  }
  if (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] == 0) {
    return NotAnAutomorphism{"affine", "linear part is singular"};
  }
  bool identity = shift[0] == 0 && shift[1] == 0 && mat[0][0] == 1 && mat[1][1] == 1 && mat[0][1] == 0 &&
                  mat[1][0] == 0;
  if (!identity) {
    dec.affine_tail = make_affine(mat, shift);
    dec.word.push_back(*dec.affine_tail);
  }
  for (auto it = recorded.rbegin(); it != recorded.rend(); ++it) dec.word.push_back(*it);
  return dec;
}

Polynomial relation2(const PolyMap& m) {
  DecomposeOutcome out = decompose2(m);
  if (const auto* bad = std::get_if<NotAnAutomorphism>(&out)) {
    throw NotAnAutomorphismError("not an automorphism (" + bad->stage + "): " + bad->reason);
  }
  const auto& dec = std::get<Decomposition>(out);
  if (dec.steps.empty()) return Polynomial(2);
  const ReductionStep& first = dec.steps.front();
  std::size_t a = first.swapped ? 1 : 0;
  std::size_t b = 1 - a;
  Polynomial R = Polynomial::variable(2, a);
  R -= Polynomial::term(Monomial::variable(2, b, first.r), first.c);
  return R;
}

}  // namespace autrel
