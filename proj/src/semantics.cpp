#include "tsc/semantics.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "scanner.hpp"

namespace tsc {

namespace {

const Ordinal& zero() {
  static const Ordinal z;
  return z;
}

// Weakly decreasing requirement on the tail of two points from index `from`.
bool weakly_above_from(const Point& x, const Point& y, std::size_t from) {
  for (std::size_t i = from; i < y.support(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

}  // namespace

InvalidLSequence::InvalidLSequence(std::size_t index)
    : std::invalid_argument("not an l-sequence: coordinate " + std::to_string(index + 1) +
                            " exceeds the logarithm of coordinate " + std::to_string(index)),
      index_(index) {}

Point Point::make(std::vector<Ordinal> coords) {
  while (!coords.empty() && coords.back().is_zero()) coords.pop_back();
  for (std::size_t i = 0; i + 1 < coords.size(); ++i)
    if (coords[i + 1] > ell(coords[i])) throw InvalidLSequence(i);
  Point p;
  p.coords_ = std::move(coords);
  return p;
}

const Ordinal& Point::operator[](std::size_t i) const noexcept {
  return i < coords_.size() ? coords_[i] : zero();
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                b.coords_.end());
}

Point make_point(std::vector<Ordinal> coords) { return Point::make(std::move(coords)); }

bool r_n(const Point& x, const Point& y, std::size_t n) {
  for (std::size_t m = 0; m <= n; ++m)
    if (!(x[m] > y[m])) return false;
  return weakly_above_from(x, y, n + 1);
}

bool r_n_alpha(const Point& x, const Point& y, std::size_t n, const Ordinal& a) {
  if (a.is_zero()) return x == y;
  for (std::size_t m = 0; m < n; ++m)
    if (!(x[m] > y[m])) return false;
  if (!weakly_above_from(x, y, n + 1)) return false;
  // a is written 1 + a'; the required gap at coordinate n is (1 + e(y_{n+1})) * (1 + a').
  Ordinal step = Ordinal(1) + hyper_e(1, y[n + 1]);
  return x[n] >= y[n] + step * a;
}

bool r_minus_one(const Point& x, const Point& y) { return weakly_above_from(x, y, 1); }

bool in_cone(const Point& x, const Point& base) { return weakly_above_from(x, base, 0); }

Point minimal_point(const Formula& f) {
  const auto& node = f.node().value;
  if (std::holds_alternative<Top>(node)) return {};

  if (const auto* c = std::get_if<Conj>(&node)) {
    Point y = minimal_point(c->lhs);
    Point z = minimal_point(c->rhs);
    std::size_t len = std::max(y.support(), z.support());
    if (len == 0) return {};
    std::vector<Ordinal> x(len);
    std::size_t top = len - 1;  // rightmost non-zero index of the pointwise maximum
    x[top] = std::max(y[top], z[top]);
    for (std::size_t i = top; i-- > 0;) x[i] = ceil_with_log_at_least(std::max(y[i], z[i]), x[i + 1]);
    return Point::make(std::move(x));
  }

  const auto& d = std::get<Diamond>(node);
  Point y = minimal_point(d.body);
  std::size_t n = d.base;
  std::vector<Ordinal> x(std::max(y.support(), n + 1));
  for (std::size_t i = n + 1; i < x.size(); ++i) x[i] = y[i];
  x[n] = y[n] + (Ordinal(1) + hyper_e(1, y[n + 1])) * d.exponent;
  // Below n every coordinate must be strictly above the body's point.
  for (std::size_t i = n; i-- > 0;) x[i] = ceil_with_log_at_least(y[i] + Ordinal(1), x[i + 1]);
  return Point::make(std::move(x));
}

bool forces(const Point& x, const Formula& f) { return in_cone(x, minimal_point(f)); }

std::string to_string(const Point& x) {
  if (x.is_zero()) return "[0]";
  std::string out = "[";
  for (std::size_t i = 0; i < x.support(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(x[i]);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Point& x) { return os << to_string(x); }

Point parse_point(std::string_view text) {
  detail::Scanner in(text);
  in.expect('[');
  std::vector<Ordinal> coords;
  if (!in.accept(']')) {
    do {
      coords.push_back(detail::parse_ordinal(in));
    } while (in.accept(','));
    in.expect(']');
  }
  in.expect_end();
  return Point::make(std::move(coords));
}

}  // namespace tsc
