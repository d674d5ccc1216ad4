#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An ordinal is a finite list of terms w^e * c with strictly decreasing
// exponents e (themselves ordinals) and coefficients c >= 1. The empty list
// is 0. Values are immutable and share their term storage, so copies are
// cheap and instances can be used from any number of threads.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsc {

using Natural = boost::multiprecision::cpp_int;

/// Syntax error in one of the textual grammars. `position()` is a 0-based
/// byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct OrdinalTerm;

class Ordinal {
 public:
  /// Zero.
  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT(google-explicit-constructor): finite literals
  explicit Ordinal(const Natural& n);

  static Ordinal omega();
  /// w^exponent * coefficient; coefficient 0 yields 0.
  static Ordinal omega_power(const Ordinal& exponent, const Natural& coefficient = 1);
  /// Builds from explicit terms, rejecting anything that is not canonical.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  bool is_zero() const noexcept { return terms_ == nullptr; }
  bool is_finite() const noexcept;
  std::span<const OrdinalTerm> terms() const noexcept;

  /// Exponent of the greatest term; 0 for the ordinal 0.
  const Ordinal& leading_exponent() const noexcept;
  /// Coefficient of the w^0 term.
  Natural finite_part() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::vector<OrdinalTerm> canonical_terms);

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);
  friend Ordinal ceil_with_log_at_least(const Ordinal& floor, const Ordinal& min_log);
  friend Ordinal split_one_plus(const Ordinal& a);

  std::shared_ptr<const std::vector<OrdinalTerm>> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinal sum. Terms of `a` below the leading exponent of `b` are absorbed.
Ordinal operator+(const Ordinal& a, const Ordinal& b);
/// Ordinal product, distributing `a` over the terms of `b` from the left.
Ordinal operator*(const Ordinal& a, const Ordinal& b);

/// Iterated hyper-exponential: e^0 is the identity, e(a) = -1 + w^a
/// (so e(0) = 0 and e(a) = w^a for a > 0), e^(n+m) = e^n o e^m.
Ordinal hyper_e(std::size_t n, const Ordinal& a);

/// Ordinal logarithm: the exponent of the last (smallest) term, 0 for 0.
Ordinal ell(const Ordinal& a);

/// The a' with 1 + a' = a. Throws std::domain_error for a = 0.
Ordinal split_one_plus(const Ordinal& a);

/// Least d with d >= floor and ell(d) >= min_log.
Ordinal ceil_with_log_at_least(const Ordinal& floor, const Ordinal& min_log);

bool is_limit(const Ordinal& a);
bool is_successor(const Ordinal& a);

/// Canonical text, e.g. "w^2*3 + w + 5". Zero prints as "0".
std::string to_string(const Ordinal& a);
/// Text usable as an exponent atom: a number, "w", or a parenthesised ordinal.
std::string to_atom_string(const Ordinal& a);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

/// Parses the ordinal grammar:
///   ordinal := term ("+" term)* | "0"
///   term    := "w" ("^" atom)? ("*" nat)? | nat
///   atom    := nat | "w" | "(" ordinal ")"
/// Sums of non-canonical terms are normalised by ordinal addition.
Ordinal parse_ordinal(std::string_view text);

}  // namespace tsc
