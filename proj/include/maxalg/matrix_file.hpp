#pragma once

// Text format for matrices:
//
//   maxtimes 2 exact        header: domain, dimension, mode
//   0   2                   n rows of n tokens
//   1/4 .
//
// "." (max-times) and "-inf" (max-plus) are the semiring zero; in max-times a
// literal 0 is accepted too. Numbers are decimals or fractions p/q. Max-plus
// tokens are exponents. Blank lines and text after '#' are ignored.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "maxalg/matrix.hpp"
#include "maxalg/scaling.hpp"

namespace maxalg {

enum class Domain { MaxTimes, MaxPlus };
enum class Mode { Exact, Float };

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<double>, Matrix<ExactMaxPlus>, Matrix<FloatMaxPlus>>;

struct MatrixFile {
  Domain domain = Domain::MaxTimes;
  Mode mode = Mode::Exact;
  AnyMatrix matrix;

  std::size_t n() const;
};

// Throws ParseError (with line and column) on any malformed, negative,
// non-finite or miscounted entry.
MatrixFile parse_matrix(std::string_view text, double tol = kDefaultTolerance);

// Same header, but the declared mode is replaced by `mode`. Float -> exact
// reads the decimal tokens exactly.
MatrixFile parse_matrix(std::string_view text, Mode mode, double tol = kDefaultTolerance);

std::string serialize_matrix(const MatrixFile& file);

// Signed real matrices for the Hadamard test. Header domain must be maxtimes;
// entries may be negative.
using AnyRealMatrix = std::variant<RealMatrix<Rational>, RealMatrix<double>>;
AnyRealMatrix parse_real_matrix(std::string_view text, std::optional<Mode> mode = std::nullopt);

// Token for one entry, as written by serialize_matrix.
template <class S>
std::string entry_token(const S& v) {
  if constexpr (!Num<S>::additive) {
    if (Num<S>::is_zero(v)) return ".";
  }
  return Num<S>::str(v);
}

}  // namespace maxalg
