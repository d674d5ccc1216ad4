#pragma once

// Worlds of the universal frame and the relations between them.
//
// A world is an l-sequence <x_0, x_1, ...> of ordinals with
// x_{i+1} <= ell(x_i) and finitely many non-zero entries. R_n holds between
// x and y when x is strictly above y at every coordinate m <= n and weakly
// above at every coordinate i > n.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsc/formula.hpp"
#include "tsc/ordinal.hpp"

namespace tsc {

/// Raised when coordinate `index() + 1` exceeds the logarithm of coordinate
/// `index()`.
class InvalidLSequence : public std::invalid_argument {
 public:
  explicit InvalidLSequence(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class Point {
 public:
  /// The all-zero sequence.
  Point() = default;

  /// Validates the l-sequence condition and drops trailing zeros.
  static Point make(std::vector<Ordinal> coords);

  /// Coordinate i; zero past the stored prefix.
  const Ordinal& operator[](std::size_t i) const noexcept;
  std::span<const Ordinal> coords() const noexcept { return coords_; }
  /// Number of stored (non-zero) coordinates.
  std::size_t support() const noexcept { return coords_.size(); }
  bool is_zero() const noexcept { return coords_.empty(); }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  std::vector<Ordinal> coords_;
};

Point make_point(std::vector<Ordinal> coords);

bool r_n(const Point& x, const Point& y, std::size_t n);

/// x R_n^a y. For a = 0 this is equality. Otherwise the closed form
///   x_n >= y_n + (1 + e(y_{n+1})) * a,
///   x_m >  y_m for m < n,
///   x_m >= y_m for m > n.
bool r_n_alpha(const Point& x, const Point& y, std::size_t n, const Ordinal& a);

/// x_i >= y_i for every i > 0.
bool r_minus_one(const Point& x, const Point& y);

/// x is coordinatewise at least `base`.
bool in_cone(const Point& x, const Point& base);

/// The least point whose upward cone is exactly the set of worlds forcing `f`.
Point minimal_point(const Formula& f);

bool forces(const Point& x, const Formula& f);

/// "[o0, o1, ...]"; the zero point prints as "[0]".
std::string to_string(const Point& x);
std::ostream& operator<<(std::ostream& os, const Point& x);

/// Parses "[o0, ..., ok]" (trailing zeros optional, "[]" is the zero point).
/// Throws ParseError on bad syntax and InvalidLSequence on bad coordinates.
Point parse_point(std::string_view text);

}  // namespace tsc
