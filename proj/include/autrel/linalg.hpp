#pragma once

#include <cstddef>
#include <vector>

#include "autrel/rational.hpp"

namespace autrel {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols);
std::size_t rank(RationalMatrix m, std::size_t ncols);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t ncols);

}  // namespace autrel
