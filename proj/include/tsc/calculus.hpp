#pragma once

// Monomial normal forms and the sequent decision procedure.
//
// A monomial normal form is a conjunction <n_0^a_0>T & ... & <n_k^a_k>T with
// strictly increasing bases where each exponent a_i, i < k, has the form
// e^(n_{i+1} - n_i)(a_{i+1}) * (2 + d). Every formula is equivalent to exactly
// one of them. Derivability is decided by comparing minimal points
// coordinatewise, which is sound and complete for the frame semantics.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsc/formula.hpp"
#include "tsc/ordinal.hpp"
#include "tsc/semantics.hpp"

namespace tsc {

struct Monomial {
  std::size_t base;
  Ordinal exponent;  // >= 1

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Raised when a point or monomial list has no valid normal form.
class NotRepresentable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MonomialNormalForm {
 public:
  /// T
  MonomialNormalForm() = default;

  /// Checks base ordering, non-zero exponents and the exponent condition
  /// between consecutive monomials. Throws NotRepresentable otherwise.
  static MonomialNormalForm make(std::vector<Monomial> monomials);

  std::span<const Monomial> monomials() const noexcept { return monomials_; }
  bool is_top() const noexcept { return monomials_.empty(); }

  friend bool operator==(const MonomialNormalForm&, const MonomialNormalForm&) = default;

 private:
  std::vector<Monomial> monomials_;
};

/// Whether <lower_base^exponent>T may directly precede
/// <upper_base^upper_exponent>T in a normal form.
bool schmerl_compatible(std::size_t lower_base, const Ordinal& exponent, std::size_t upper_base,
                        const Ordinal& upper_exponent);

/// Exponent information carried at base m: explicit at occurring bases,
/// e(projection(m + 1)) in gaps below the top base, 0 above it.
Ordinal projection(const MonomialNormalForm& psi, std::size_t m);

Point point_of_mnf(const MonomialNormalForm& psi);
MonomialNormalForm mnf_of_point(const Point& x);

MonomialNormalForm normalize(const Formula& f);
Formula to_formula(const MonomialNormalForm& psi);

/// Syntactic membership: a flattened conjunction of monomials with strictly
/// increasing bases meeting the exponent condition, or T.
bool is_mnf(const Formula& f);

struct Sequent {
  Formula lhs;
  Formula rhs;
};

struct Verdict {
  bool derivable = false;
  std::optional<Point> countermodel;  // present iff !derivable
};

Verdict derives(const Sequent& s);
bool equiv(const Formula& f, const Formula& g);

std::string to_string(const MonomialNormalForm& psi);
std::ostream& operator<<(std::ostream& os, const MonomialNormalForm& psi);
std::string to_string(const Sequent& s);

/// "derivable=true" or "derivable=false; countermodel=[...]".
std::string to_machine_string(const Verdict& v);

/// "<formula> |- <formula>"
Sequent parse_sequent(std::string_view text);

}  // namespace tsc
