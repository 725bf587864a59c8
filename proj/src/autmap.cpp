#include "autrel/autmap.hpp"

#include <algorithm>
#include <sstream>

#include "autrel/error.hpp"

namespace autrel {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Rational matrix_det(Matrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Matrix matrix_inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix m = a;
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("singular affine matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= factor * m[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  auto flush = [&] {
    auto comment = current.find('#');
    if (comment != std::string::npos) current.erase(comment);
    auto first = current.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      auto last = current.find_last_not_of(" \t\r");
      lines.push_back(current.substr(first, last - first + 1));
    }
    current.clear();
  };
  for (char c : text) {
    if (c == '\n' || c == ';') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return lines;
}

// Applies g to the current point map: returns g o current.
void apply_generator(const Generator& g, std::vector<Polynomial>& cur) {
  std::visit(
      [&](const auto& gen) {
        using T = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<T, AffineGen>) {
          const std::size_t n = cur.size();
          std::vector<Polynomial> next;
          next.reserve(n);
          for (std::size_t i = 0; i < n; ++i) {
            Polynomial row = Polynomial::constant(cur[0].nvars(), gen.shift[i]);
            for (std::size_t j = 0; j < n; ++j) {
              if (gen.matrix[i][j] != 0) row += cur[j] * gen.matrix[i][j];
            }
            next.push_back(std::move(row));
          }
          cur = std::move(next);
        } else if constexpr (std::is_same_v<T, ElementaryGen>) {
          cur[gen.target] += compose(gen.addend, cur);
        } else {
          std::swap(cur[gen.i], cur[gen.j]);
        }
      },
      g);
}

}  // namespace

Generator make_affine(Matrix matrix, std::vector<Rational> shift) {
  const std::size_t n = matrix.size();
  if (n == 0 || shift.size() != n) throw DimensionError("affine generator needs an n x n matrix and n shifts");
  for (const auto& row : matrix) {
    if (row.size() != n) throw DimensionError("affine matrix is not square");
  }
  if (matrix_det(matrix) == 0) throw DomainError("affine matrix is singular");
  return AffineGen{std::move(matrix), std::move(shift)};
}

Generator make_elementary(std::size_t nvars, std::size_t target, Polynomial addend) {
  if (target >= nvars) throw DimensionError("elementary target out of range");
  if (addend.nvars() != nvars) throw DimensionError("elementary addend lives in the wrong ring");
  if (addend.involves(target)) throw DomainError("elementary addend involves its target variable");
  return ElementaryGen{target, std::move(addend)};
}

Generator make_transposition(std::size_t nvars, std::size_t i, std::size_t j) {
  if (i >= nvars || j >= nvars) throw DimensionError("transposition index out of range");
  if (i == j) throw DomainError("transposition needs two distinct indices");
  return TranspositionGen{std::min(i, j), std::max(i, j)};
}

Generator invert_generator(const Generator& g) {
  return std::visit(
      [](const auto& gen) -> Generator {
        using T = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<T, AffineGen>) {
          Matrix inv = matrix_inverse(gen.matrix);
          const std::size_t n = inv.size();
          std::vector<Rational> shift(n, Rational(0));
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) shift[i] -= inv[i][j] * gen.shift[j];
          }
          return AffineGen{std::move(inv), std::move(shift)};
        } else if constexpr (std::is_same_v<T, ElementaryGen>) {
          return ElementaryGen{gen.target, -gen.addend};
        } else {
          return gen;
        }
      },
      g);
}

Rational generator_jacobian(const Generator& g) {
  if (const auto* a = std::get_if<AffineGen>(&g)) return matrix_det(a->matrix);
  if (std::holds_alternative<ElementaryGen>(g)) return Rational(1);
  return Rational(-1);
}

bool is_affine_generator(const Generator& g) {
  if (const auto* e = std::get_if<ElementaryGen>(&g)) return e->addend.total_degree() <= 1;
  return true;
}

PolyMap identity_map(std::size_t nvars) {
  PolyMap m;
  for (std::size_t i = 0; i < nvars; ++i) m.coords.push_back(Polynomial::variable(nvars, i));
  return m;
}

PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner) {
  if (outer.nvars() != inner.nvars()) throw DimensionError("maps of different dimensions");
  PolyMap r;
  r.coords.reserve(outer.nvars());
  for (const auto& f : outer.coords) r.coords.push_back(compose(f, inner.coords));
  return r;
}

PolyMap generator_map(const Generator& g, std::size_t nvars) {
  PolyMap m = identity_map(nvars);
  apply_generator(g, m.coords);
  return m;
}

bool is_identity(const PolyMap& m) { return m == identity_map(m.nvars()); }

bool is_affine_map(const PolyMap& m) {
  return std::all_of(m.coords.begin(), m.coords.end(), [](const Polynomial& f) { return f.total_degree() <= 1; });
}

void validate_map(const PolyMap& m) {
  if (m.coords.empty()) throw DimensionError("map needs at least one coordinate");
  for (const auto& f : m.coords) {
    if (f.nvars() != m.nvars()) throw DimensionError("map coordinate lives in the wrong ring");
  }
}

AutWord::AutWord(std::size_t nvars, std::vector<Generator> gens) : nvars_(nvars) {
  for (auto& g : gens) push_back(std::move(g));
}

void AutWord::push_back(Generator g) {
  std::visit(
      [this](const auto& gen) {
        using T = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<T, AffineGen>) {
          if (gen.matrix.size() != nvars_) throw DimensionError("affine generator has the wrong size");
        } else if constexpr (std::is_same_v<T, ElementaryGen>) {
          if (gen.addend.nvars() != nvars_ || gen.target >= nvars_) {
            throw DimensionError("elementary generator has the wrong size");
          }
        } else {
          if (gen.i >= nvars_ || gen.j >= nvars_) throw DimensionError("transposition has the wrong size");
        }
      },
      g);
  gens_.push_back(std::move(g));
}

AutWord operator*(const AutWord& u, const AutWord& v) {
  if (u.nvars() != v.nvars()) throw DimensionError("words of different dimensions");
  AutWord r = u;
  for (const auto& g : v.generators()) r.push_back(g);
  return r;
}

PolyMap expand(const AutWord& w) {
  PolyMap m = identity_map(w.nvars());
  for (const auto& g : w.generators()) apply_generator(g, m.coords);
  return m;
}

AutWord invert_word(const AutWord& w) {
  AutWord r(w.nvars());
  for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) r.push_back(invert_generator(*it));
  return r;
}

Rational word_jacobian(const AutWord& w) {
  Rational mu(1);
  for (const auto& g : w.generators()) mu *= generator_jacobian(g);
  return mu;
}

Rational jacobian_constant(const PolyMap& m) {
  validate_map(m);
  Polynomial j = jacobian(m.coords);
  if (j.is_zero()) throw ZeroJacobian("jacobian determinant is zero");
  if (!j.is_constant()) throw NonConstantJacobian("jacobian determinant is not constant: " + format_poly(j));
  return j.constant_term();
}

WeightVector deg2_weights(const PolyMap& m, const WeightVector& w1) {
  std::vector<Rational> d;
  d.reserve(m.nvars());
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    WDegree di = wdeg(m.coords[i], w1);
    if (di.is_minus_infinity()) throw DomainError("coordinate " + std::to_string(i + 1) + " is zero");
    if (di.value() <= 0) throw DomainError("coordinate " + std::to_string(i + 1) + " is constant");
    d.push_back(di.value());
  }
  return WeightVector(std::move(d));
}

Automorphism Automorphism::from_word(const AutWord& w) {
  return Automorphism{expand(w), expand(invert_word(w)), word_jacobian(w)};
}

Automorphism Automorphism::from_maps(PolyMap forward, PolyMap inverse) {
  validate_map(forward);
  validate_map(inverse);
  if (!is_identity(compose_maps(forward, inverse)) || !is_identity(compose_maps(inverse, forward))) {
    throw DomainError("the supplied maps are not mutually inverse");
  }
  Rational mu = jacobian_constant(forward);
  return Automorphism{std::move(forward), std::move(inverse), mu};
}

std::string format_generator(const Generator& g, std::size_t nvars) {
  std::ostringstream out;
  std::visit(
      [&](const auto& gen) {
        using T = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<T, AffineGen>) {
          out << 'A';
          for (const auto& row : gen.matrix) {
            for (const auto& v : row) out << ' ' << to_string(v);
          }
          out << " |";
          for (const auto& v : gen.shift) out << ' ' << to_string(v);
        } else if constexpr (std::is_same_v<T, ElementaryGen>) {
          out << "E " << gen.target + 1 << ' ' << format_poly(gen.addend);
        } else {
          out << "T " << gen.i + 1 << ' ' << gen.j + 1;
        }
      },
      g);
  (void)nvars;
  return out.str();
}

Generator parse_generator(std::string_view line, std::size_t nvars) {
  std::string text(line);
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  auto read_index = [&](const char* what) {
    long v = 0;
    if (!(in >> v)) throw ParseError(std::string("expected ") + what, static_cast<std::size_t>(in.tellg()));
    if (v < 1 || static_cast<std::size_t>(v) > nvars) {
      throw DimensionError(std::string(what) + " " + std::to_string(v) + " out of range");
    }
    return static_cast<std::size_t>(v - 1);
  };
  if (kind == "E") {
    std::size_t target = read_index("target index");
    std::string rest;
    std::getline(in, rest);
    return make_elementary(nvars, target, parse_poly(rest, nvars));
  }
  if (kind == "T") {
    std::size_t i = read_index("index");
    std::size_t j = read_index("index");
    return make_transposition(nvars, i, j);
  }
  if (kind == "A") {
    std::vector<Rational> values;
    std::vector<Rational> shift;
    bool after_bar = false;
    std::string tok;
    while (in >> tok) {
      if (tok == "|") {
        after_bar = true;
        continue;
      }
      (after_bar ? shift : values).push_back(parse_rational(tok));
    }
    if (values.size() != nvars * nvars || shift.size() != nvars) {
      throw ParseError("affine generator needs n*n matrix entries, '|', and n shifts", 0);
    }
    Matrix m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m[i].assign(values.begin() + static_cast<long>(i * nvars),
                                                        values.begin() + static_cast<long>((i + 1) * nvars));
    return make_affine(std::move(m), std::move(shift));
  }
  throw ParseError("unknown generator kind '" + kind + "'", 0);
}

std::string format_word(const AutWord& w) {
  std::string out;
  for (const auto& g : w.generators()) out += format_generator(g, w.nvars()) + '\n';
  return out;
}

AutWord parse_word(std::string_view text, std::size_t nvars) {
  AutWord w(nvars);
  for (const auto& line : split_lines(text)) w.push_back(parse_generator(line, nvars));
  return w;
}

std::string format_map(const PolyMap& m) {
  std::string out;
  for (const auto& f : m.coords) out += format_poly(f) + '\n';
  return out;
}

PolyMap parse_map(std::string_view text) { return parse_map(text, split_lines(text).size()); }

PolyMap parse_map(std::string_view text, std::size_t nvars) {
  auto lines = split_lines(text);
  if (lines.size() != nvars) {
    throw DimensionError("map needs " + std::to_string(nvars) + " coordinates, got " + std::to_string(lines.size()));
  }
  PolyMap m;
  for (const auto& line : lines) m.coords.push_back(parse_poly(line, nvars));
  return m;
}

}  // namespace autrel
