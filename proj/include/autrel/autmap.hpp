#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "autrel/error.hpp"
#include "autrel/polynomial.hpp"

namespace autrel {

/// x -> M x + b.
struct AffineGen {
  std::vector<std::vector<Rational>> matrix;  // row-major, n x n, det != 0
  std::vector<Rational> shift;
};

/// x_target -> x_target + addend, where addend does not involve x_target.
struct ElementaryGen {
  std::size_t target;  // 0-based
  Polynomial addend;
};

/// Swaps x_i and x_j.
struct TranspositionGen {
  std::size_t i;
  std::size_t j;
};

using Generator = std::variant<AffineGen, ElementaryGen, TranspositionGen>;

/// Validating constructors. They throw DomainError / DimensionError on bad input.
Generator make_affine(std::vector<std::vector<Rational>> matrix, std::vector<Rational> shift);
Generator make_elementary(std::size_t nvars, std::size_t target, Polynomial addend);
Generator make_transposition(std::size_t nvars, std::size_t i, std::size_t j);

Generator invert_generator(const Generator& g);
Rational generator_jacobian(const Generator& g);
bool is_affine_generator(const Generator& g);

/// Coordinate tuple (f_1, ..., f_n) of polynomials in n variables.
struct PolyMap {
  std::vector<Polynomial> coords;

  std::size_t nvars() const noexcept { return coords.size(); }
  friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

PolyMap identity_map(std::size_t nvars);
/// (outer o inner): coordinates of `outer` with inner substituted, i.e. point map inner first.
PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner);
PolyMap generator_map(const Generator& g, std::size_t nvars);
bool is_identity(const PolyMap& m);
/// Every coordinate has total degree at most one.
bool is_affine_map(const PolyMap& m);
void validate_map(const PolyMap& m);

/// A word g_1 g_2 ... g_k of generators. As a point map g_1 is applied first,
/// so expand(word) = g_k o ... o g_1.
class AutWord {
 public:
  explicit AutWord(std::size_t nvars) : nvars_(nvars) {}
  AutWord(std::size_t nvars, std::vector<Generator> gens);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  void push_back(Generator g);
  /// Concatenation: (u * v) applies u first, then v.
  friend AutWord operator*(const AutWord& u, const AutWord& v);

 private:
  std::size_t nvars_;
  std::vector<Generator> gens_;
};

PolyMap expand(const AutWord& w);
AutWord invert_word(const AutWord& w);
/// Product of the generator jacobians.
Rational word_jacobian(const AutWord& w);

/// Returns mu when j(coords) is a nonzero constant; throws NonConstantJacobian / ZeroJacobian.
Rational jacobian_constant(const PolyMap& m);

class NonConstantJacobian : public DomainError {
 public:
  using DomainError::DomainError;
};
class ZeroJacobian : public DomainError {
 public:
  using DomainError::DomainError;
};

/// d_i = wdeg(f_i, w1).
WeightVector deg2_weights(const PolyMap& m, const WeightVector& w1);

/// A map together with an inverse that has been checked by exact composition.
struct Automorphism {
  PolyMap forward;
  PolyMap inverse;
  Rational jacobian;

  std::size_t nvars() const noexcept { return forward.nvars(); }

  static Automorphism from_word(const AutWord& w);
  /// Throws DomainError unless forward o inverse and inverse o forward are both the identity.
  static Automorphism from_maps(PolyMap forward, PolyMap inverse);
};

// Text formats. Generator lines: "E <i> <poly>", "T <i> <j>", "A <n*n rationals> | <n rationals>".
std::string format_generator(const Generator& g, std::size_t nvars);
Generator parse_generator(std::string_view line, std::size_t nvars);
std::string format_word(const AutWord& w);
/// Lines separated by '\n' or ';'. Blank lines and '#' comments are skipped.
AutWord parse_word(std::string_view text, std::size_t nvars);
std::string format_map(const PolyMap& m);
/// Coordinates separated by '\n' or ';'; the number of coordinates fixes n.
PolyMap parse_map(std::string_view text);
/// Same, but with a fixed variable count.
PolyMap parse_map(std::string_view text, std::size_t nvars);

}  // namespace autrel
