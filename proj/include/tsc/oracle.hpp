#pragma once

// Brute-force semantics on finite fragments of the frame.
//
// Nothing here uses the closed-form relation test or minimal points. The
// accessibility relations R_n^a are rebuilt from R_n alone, following the
// recursive definition:
//
//   R^0          = identity
//   R^(a+1)      = R_n o R^a
//   R^(w*(q+1))  : x reaches y when R_n chains from x into {z : z R^(w*q) y}
//                  are arbitrarily long
//
// Chains run through a witness frame: the fragment's coordinates shifted by
// w^e * j (e an exponent occurring in the fragment) and then by finite
// amounts. Frames come in levels with growing shifts. A chain length that
// strictly grows over three consecutive levels counts as unbounded, one that
// stays put counts as bounded, and anything else raises OracleUnstable.
// Exponents w*q + b with q <= 2 are supported.
//
// Forcing is evaluated by the raw recursive definition with witnesses taken
// from the fragment's own points.
//
// The oracle is only as good as its witness frames. Universes with gaps wider
// than the padding can make a bounded chain look unbounded.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "tsc/formula.hpp"
#include "tsc/ordinal.hpp"
#include "tsc/semantics.hpp"

namespace tsc {

struct FragmentSpec {
  std::vector<Ordinal> coordinate_universe;  // must contain 0
  std::size_t max_support = 1;
  std::vector<Ordinal> exponent_universe;
};

class UnsupportedExponent : public std::domain_error {
 public:
  explicit UnsupportedExponent(const Ordinal& exponent);
};

class OracleUnstable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All ordinals <= max whose coefficients are <= coefficient_bound and whose
/// exponents are (recursively) of the same kind, ascending.
std::vector<Ordinal> enumerate_ordinals(const Ordinal& max, unsigned coefficient_bound);

/// All l-sequences with coordinates in the universe and at most
/// `max_support` non-zero coordinates, in ascending order.
std::vector<Point> enumerate_points(const FragmentSpec& spec);

using PointPair = std::pair<Point, Point>;

struct OracleOptions {
  /// Finite amount added to every shifted ordinal in the level-0 frame.
  std::size_t witness_padding = 12;
  /// Largest j in the shifts u + w^e * j in the level-0 frame.
  std::size_t witness_multiples = 4;
};

class FrameOracle {
 public:
  explicit FrameOracle(FragmentSpec spec, OracleOptions options = {});
  ~FrameOracle();
  FrameOracle(FrameOracle&&) noexcept;
  FrameOracle& operator=(FrameOracle&&) noexcept;

  const FragmentSpec& spec() const noexcept { return spec_; }
  std::span<const Point> points() const noexcept { return points_; }
  bool contains(const Point& p) const { return index_.count(p) != 0; }

  bool related(const Point& x, const Point& y, std::size_t n, const Ordinal& a);
  std::set<PointPair> relation(std::size_t n, const Ordinal& a);

  /// Longest R_n chain from x down to y in the witness frame of the given
  /// level; nullopt when y is not reachable.
  std::optional<std::size_t> longest_chain(const Point& x, const Point& y, std::size_t n, std::size_t level);

  bool forces(const Point& x, const Formula& f);
  /// A fragment point y with x R_n^a y forcing `body`, if any.
  std::optional<Point> witness(const Point& x, std::size_t n, const Ordinal& a, const Formula& body);
  bool entails(const Formula& f, const Formula& g);
  /// Fragment points forcing f, ascending.
  std::vector<Point> extension(const Formula& f);

 private:
  struct Frame;
  struct Matrix;

  std::size_t require_index(const Point& p) const;
  Frame& frame(std::size_t level);
  /// Flat |frame(level)| x |fragment| table of z R^(w*q) y.
  const std::vector<char>& limit_reach(std::size_t n, std::size_t q, std::size_t level);
  const Matrix& relation_matrix(std::size_t n, const Ordinal& a);
  std::vector<bool> extension_mask(const Formula& f);

  FragmentSpec spec_;
  OracleOptions options_;
  std::vector<Point> points_;
  std::map<Point, std::size_t> index_;
  std::vector<Ordinal> shift_exponents_;
  std::vector<std::unique_ptr<Frame>> frames_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<char>> limits_;
  std::map<std::pair<std::size_t, Ordinal>, std::unique_ptr<Matrix>> relations_;
};

std::set<PointPair> oracle_r_alpha(const FragmentSpec& spec, std::size_t n, const Ordinal& a);
bool oracle_forces(const FragmentSpec& spec, const Point& x, const Formula& f);
bool oracle_entails(const FragmentSpec& spec, const Formula& f, const Formula& g);

}  // namespace tsc
