#pragma once

// Strictly positive modal formulas: T, conjunction and the ordinal
// modalities <n^a>.

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tsc/ordinal.hpp"

namespace tsc {

struct FormulaNode;

class Formula {
 public:
  /// T
  Formula();

  static Formula top() { return {}; }
  static Formula conj(Formula lhs, Formula rhs);
  /// <base^exponent> body. A zero exponent yields `body` itself.
  static Formula diamond(std::size_t base, Ordinal exponent, Formula body);

  const FormulaNode& node() const noexcept { return *node_; }
  bool is_top() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const FormulaNode> node_;
};

struct Top {
  friend bool operator==(const Top&, const Top&) = default;
};

struct Conj {
  Formula lhs;
  Formula rhs;
  friend bool operator==(const Conj&, const Conj&) = default;
};

struct Diamond {
  std::size_t base;
  Ordinal exponent;  // never 0
  Formula body;
  friend bool operator==(const Diamond&, const Diamond&) = default;
};

struct FormulaNode {
  std::variant<Top, Conj, Diamond> value;
};

/// Largest modality base the text parser accepts. Minimal points of a
/// formula materialise one coordinate per base below its largest base.
inline constexpr std::size_t kMaxParsedBase = 1024;

/// Bases of all modalities occurring in `f`.
std::set<std::size_t> n_mod(const Formula& f);

/// Conjuncts of `f` with nested conjunctions flattened, left to right.
std::vector<Formula> flatten_conjunction(const Formula& f);

/// Left-associated conjunction; T for an empty list.
Formula conjunction_of(const std::vector<Formula>& parts);

std::size_t depth(const Formula& f);

/// Concrete syntax, e.g. "<0^w>T & <1^1>(T & <0^2>T)".
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

/// formula  := "T" | "(" formula ")" | "<" nat "^" exponent ">" formula
///           | formula "&" formula
/// exponent := ordinal | "(" ordinal ")"
/// Modalities bind tighter than "&", which associates to the left.
Formula parse_formula(std::string_view text);

}  // namespace tsc
