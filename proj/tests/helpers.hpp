#pragma once

#include <ostream>
#include <string_view>

#include "autrel/autmap.hpp"
#include "autrel/polynomial.hpp"

namespace autrel::test {

inline Polynomial P(std::string_view text, std::size_t n) { return parse_poly(text, n); }

inline PolyMap M(std::string_view text) { return parse_map(text); }

inline const char* kNagata =
    "x1 - 2*x2*(x1*x3+x2^2) - x3*(x1*x3+x2^2)^2; x2 + x3*(x1*x3+x2^2); x3";
inline const char* kNagataInverse =
    "x1 + 2*x2*(x1*x3+x2^2) - x3*(x1*x3+x2^2)^2; x2 - x3*(x1*x3+x2^2); x3";

}  // namespace autrel::test

namespace autrel {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << format_poly(p); }
inline void PrintTo(const PolyMap& m, std::ostream* os) { *os << format_map(m); }

}  // namespace autrel
