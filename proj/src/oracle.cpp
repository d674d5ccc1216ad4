#include "tsc/oracle.hpp"

#include <algorithm>
#include <array>

namespace tsc {

namespace {

void enumerate_sums(const std::vector<Ordinal>& exponents_desc, std::size_t i, unsigned bound,
                    std::vector<OrdinalTerm>& prefix, const Ordinal& max, std::vector<Ordinal>& out) {
  Ordinal value = Ordinal::from_terms(prefix);
  if (value > max) return;  // adding smaller terms only grows the value
  if (i == exponents_desc.size()) {
    out.push_back(value);
    return;
  }
  enumerate_sums(exponents_desc, i + 1, bound, prefix, max, out);
  for (unsigned c = 1; c <= bound; ++c) {
    prefix.push_back({exponents_desc[i], c});
    enumerate_sums(exponents_desc, i + 1, bound, prefix, max, out);
    prefix.pop_back();
  }
}

void enumerate_sequences(const std::vector<Ordinal>& universe, std::size_t max_support,
                         std::vector<Ordinal>& prefix, std::set<Point>& out) {
  out.insert(Point::make(prefix));
  if (prefix.size() == max_support) return;
  for (const auto& v : universe) {
    if (v.is_zero()) continue;
    if (!prefix.empty() && v > ell(prefix.back())) continue;
    prefix.push_back(v);
    enumerate_sequences(universe, max_support, prefix, out);
    prefix.pop_back();
  }
}

// Non-zero exponents of the terms of the given ordinals.
std::set<Ordinal> exponents_of(const std::vector<Ordinal>& ordinals) {
  std::set<Ordinal> out;
  for (const auto& a : ordinals)
    for (const auto& t : a.terms())
      if (!t.exponent.is_zero()) out.insert(t.exponent);
  return out;
}

}  // namespace

UnsupportedExponent::UnsupportedExponent(const Ordinal& exponent)
    : std::domain_error("oracle supports exponents below w*3, got " + to_string(exponent)) {}

std::vector<Ordinal> enumerate_ordinals(const Ordinal& max, unsigned coefficient_bound) {
  if (max.is_zero()) return {Ordinal()};
  std::vector<Ordinal> exponents = enumerate_ordinals(max.leading_exponent(), coefficient_bound);
  std::reverse(exponents.begin(), exponents.end());
  std::vector<Ordinal> out;
  std::vector<OrdinalTerm> prefix;
  enumerate_sums(exponents, 0, coefficient_bound, prefix, max, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> enumerate_points(const FragmentSpec& spec) {
  std::vector<Ordinal> universe = spec.coordinate_universe;
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  std::set<Point> out;
  std::vector<Ordinal> prefix;
  enumerate_sequences(universe, spec.max_support, prefix, out);
  return {out.begin(), out.end()};
}

// Points in ascending order, so R_n successors always have smaller indices.
struct FrameOracle::Frame {
  std::vector<Point> points;
  std::map<Point, std::size_t> index;
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> successors;

  const std::vector<std::vector<std::size_t>>& successors_for(std::size_t n) {
    auto it = successors.find(n);
    if (it != successors.end()) return it->second;
    std::vector<std::vector<std::size_t>> succ(points.size());
    for (std::size_t w = 0; w < points.size(); ++w)
      for (std::size_t v = 0; v < w; ++v)
        if (r_n(points[w], points[v], n)) succ[w].push_back(v);
    return successors.emplace(n, std::move(succ)).first->second;
  }

  // Longest R_n chain from each frame point into `target` (-1 if none).
  std::vector<int> longest_into(std::size_t n, const std::vector<char>& target) {
    const auto& succ = successors_for(n);
    std::vector<int> len(points.size(), -1);
    for (std::size_t w = 0; w < points.size(); ++w) {
      if (target[w]) len[w] = 0;
      for (std::size_t v : succ[w])
        if (len[v] >= 0) len[w] = std::max(len[w], len[v] + 1);
    }
    return len;
  }
};

struct FrameOracle::Matrix {
  std::size_t cols = 0;
  std::vector<char> cells;

  bool at(std::size_t r, std::size_t c) const { return cells[r * cols + c] != 0; }
};

FrameOracle::FrameOracle(FragmentSpec spec, OracleOptions options)
    : spec_(std::move(spec)), options_(options) {
  if (std::find_if(spec_.coordinate_universe.begin(), spec_.coordinate_universe.end(),
                   [](const Ordinal& o) { return o.is_zero(); }) == spec_.coordinate_universe.end())
    throw std::invalid_argument("fragment coordinate universe must contain 0");
  points_ = enumerate_points(spec_);
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
  auto exponents = exponents_of(spec_.coordinate_universe);
  shift_exponents_.assign(exponents.begin(), exponents.end());
}

FrameOracle::~FrameOracle() = default;
FrameOracle::FrameOracle(FrameOracle&&) noexcept = default;
FrameOracle& FrameOracle::operator=(FrameOracle&&) noexcept = default;

std::size_t FrameOracle::require_index(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("point " + to_string(p) + " is outside the fragment");
  return it->second;
}

FrameOracle::Frame& FrameOracle::frame(std::size_t level) {
  while (frames_.size() <= level) {
    std::size_t k = frames_.size();
    std::set<Ordinal> shifted(spec_.coordinate_universe.begin(), spec_.coordinate_universe.end());
    for (const auto& u : spec_.coordinate_universe)
      for (const auto& e : shift_exponents_)
        for (std::size_t j = 1; j <= options_.witness_multiples + k; ++j)
          shifted.insert(u + Ordinal::omega_power(e, j));
    std::set<Ordinal> padded;
    for (const auto& u : shifted)
      for (std::size_t i = 0; i <= options_.witness_padding + k; ++i) padded.insert(u + Ordinal(i));

    auto f = std::make_unique<Frame>();
    f->points = enumerate_points({{padded.begin(), padded.end()}, spec_.max_support, {}});
    for (std::size_t i = 0; i < f->points.size(); ++i) f->index.emplace(f->points[i], i);
    frames_.push_back(std::move(f));
  }
  return *frames_[level];
}

std::optional<std::size_t> FrameOracle::longest_chain(const Point& x, const Point& y, std::size_t n,
                                                      std::size_t level) {
  Frame& f = frame(level);
  auto xi = f.index.find(x), yi = f.index.find(y);
  if (xi == f.index.end() || yi == f.index.end())
    throw std::invalid_argument("point outside the witness frame");
  std::vector<char> target(f.points.size(), 0);
  target[yi->second] = 1;
  int len = f.longest_into(n, target)[xi->second];
  if (len < 0) return std::nullopt;
  return static_cast<std::size_t>(len);
}

const std::vector<char>& FrameOracle::limit_reach(std::size_t n, std::size_t q, std::size_t level) {
  auto key = std::make_tuple(n, q, level);
  if (auto it = limits_.find(key); it != limits_.end()) return it->second;

  const std::size_t cols = points_.size();
  const std::size_t rows = frame(level).points.size();
  std::vector<char> reach(rows * cols, 0);
  if (q == 0) {
    for (std::size_t y = 0; y < cols; ++y) reach[frame(level).index.at(points_[y]) * cols + y] = 1;
    return limits_.emplace(key, std::move(reach)).first->second;
  }

  // Chain lengths into {z : z R^(w*(q-1)) y} at this level and the next two.
  std::array<const std::vector<char>*, 3> below{};
  for (std::size_t t = 0; t < 3; ++t) below[t] = &limit_reach(n, q - 1, level + t);
  std::array<Frame*, 3> frames{&frame(level), &frame(level + 1), &frame(level + 2)};
  for (std::size_t y = 0; y < cols; ++y) {
    std::array<std::vector<int>, 3> len;
    for (std::size_t t = 0; t < 3; ++t) {
      std::vector<char> target(frames[t]->points.size());
      for (std::size_t z = 0; z < target.size(); ++z) target[z] = (*below[t])[z * cols + y];
      len[t] = frames[t]->longest_into(n, target);
    }
    for (std::size_t z = 0; z < rows; ++z) {
      const Point& p = frames[0]->points[z];
      int a0 = len[0][z], a1 = len[1][frames[1]->index.at(p)], a2 = len[2][frames[2]->index.at(p)];
      if (a0 == a1 && a1 == a2) continue;
      if (a0 < a1 && a1 < a2) {
        reach[z * cols + y] = 1;
        continue;
      }
      throw OracleUnstable("chain length from " + to_string(p) + " towards " + to_string(points_[y]) +
                           " neither settles nor keeps growing");
    }
  }
  return limits_.emplace(key, std::move(reach)).first->second;
}

const FrameOracle::Matrix& FrameOracle::relation_matrix(std::size_t n, const Ordinal& a) {
  auto key = std::make_pair(n, a);
  if (auto it = relations_.find(key); it != relations_.end()) return *it->second;

  if (a.leading_exponent() > Ordinal(1)) throw UnsupportedExponent(a);
  Natural limit_count = 0;
  for (const auto& t : a.terms())
    if (t.exponent == Ordinal(1)) limit_count = t.coefficient;
  if (limit_count > 2) throw UnsupportedExponent(a);
  const std::size_t q = limit_count.convert_to<std::size_t>();
  const std::size_t steps = a.finite_part().convert_to<std::size_t>();

  Frame& base = frame(0);
  const std::size_t rows = base.points.size();
  const std::size_t cols = points_.size();

  // reach[z][y]: z R^(w*q + s) y after s successor steps
  std::vector<char> reach = limit_reach(n, q, 0);
  const auto& succ = base.successors_for(n);
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<char> next(rows * cols, 0);
    for (std::size_t x = 0; x < rows; ++x)
      for (std::size_t z : succ[x])
        for (std::size_t y = 0; y < cols; ++y)
          if (reach[z * cols + y]) next[x * cols + y] = 1;
    reach = std::move(next);
  }

  auto m = std::make_unique<Matrix>();
  m->cols = cols;
  m->cells.resize(cols * cols);
  for (std::size_t x = 0; x < cols; ++x) {
    std::size_t wx = base.index.at(points_[x]);
    for (std::size_t y = 0; y < cols; ++y) m->cells[x * cols + y] = reach[wx * cols + y];
  }
  return *relations_.emplace(key, std::move(m)).first->second;
}

bool FrameOracle::related(const Point& x, const Point& y, std::size_t n, const Ordinal& a) {
  std::size_t ix = require_index(x);
  std::size_t iy = require_index(y);
  return relation_matrix(n, a).at(ix, iy);
}

std::set<PointPair> FrameOracle::relation(std::size_t n, const Ordinal& a) {
  const Matrix& m = relation_matrix(n, a);
  std::set<PointPair> out;
  for (std::size_t x = 0; x < points_.size(); ++x)
    for (std::size_t y = 0; y < points_.size(); ++y)
      if (m.at(x, y)) out.emplace(points_[x], points_[y]);
  return out;
}

std::vector<bool> FrameOracle::extension_mask(const Formula& f) {
  const auto& node = f.node().value;
  if (std::holds_alternative<Top>(node)) return std::vector<bool>(points_.size(), true);
  if (const auto* c = std::get_if<Conj>(&node)) {
    auto lhs = extension_mask(c->lhs);
    auto rhs = extension_mask(c->rhs);
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = lhs[i] && rhs[i];
    return lhs;
  }
  const auto& d = std::get<Diamond>(node);
  auto body = extension_mask(d.body);
  const Matrix& m = relation_matrix(d.base, d.exponent);
  std::vector<bool> out(points_.size(), false);
  for (std::size_t x = 0; x < points_.size(); ++x)
    for (std::size_t y = 0; y < points_.size() && !out[x]; ++y) out[x] = m.at(x, y) && body[y];
  return out;
}

bool FrameOracle::forces(const Point& x, const Formula& f) {
  std::size_t ix = require_index(x);
  return extension_mask(f)[ix];
}

std::optional<Point> FrameOracle::witness(const Point& x, std::size_t n, const Ordinal& a, const Formula& body) {
  std::size_t ix = require_index(x);
  auto mask = extension_mask(body);
  const Matrix& m = relation_matrix(n, a);
  for (std::size_t y = 0; y < points_.size(); ++y)
    if (m.at(ix, y) && mask[y]) return points_[y];
  return std::nullopt;
}

bool FrameOracle::entails(const Formula& f, const Formula& g) {
  auto lhs = extension_mask(f);
  auto rhs = extension_mask(g);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] && !rhs[i]) return false;
  return true;
}

std::vector<Point> FrameOracle::extension(const Formula& f) {
  auto mask = extension_mask(f);
  std::vector<Point> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(points_[i]);
  return out;
}

std::set<PointPair> oracle_r_alpha(const FragmentSpec& spec, std::size_t n, const Ordinal& a) {
  return FrameOracle(spec).relation(n, a);
}

bool oracle_forces(const FragmentSpec& spec, const Point& x, const Formula& f) {
  return FrameOracle(spec).forces(x, f);
}

bool oracle_entails(const FragmentSpec& spec, const Formula& f, const Formula& g) {
  return FrameOracle(spec).entails(f, g);
}

}  // namespace tsc
