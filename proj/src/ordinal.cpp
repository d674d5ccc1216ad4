#include "tsc/ordinal.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "scanner.hpp"

namespace tsc {

namespace {

using Terms = std::vector<OrdinalTerm>;

const Ordinal& zero_ordinal() {
  static const Ordinal zero;
  return zero;
}

std::strong_ordering compare_naturals(const Natural& a, const Natural& b) {
  int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message), position_(position) {}

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_ = std::make_shared<const Terms>(Terms{{Ordinal(), Natural(n)}});
}

Ordinal::Ordinal(const Natural& n) {
  if (n < 0) throw std::domain_error("ordinal from a negative integer");
  if (n != 0) terms_ = std::make_shared<const Terms>(Terms{{Ordinal(), n}});
}

Ordinal::Ordinal(std::vector<OrdinalTerm> canonical_terms) {
  if (!canonical_terms.empty()) terms_ = std::make_shared<const Terms>(std::move(canonical_terms));
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, const Natural& coefficient) {
  if (coefficient < 0) throw std::domain_error("negative coefficient");
  if (coefficient == 0) return {};
  return Ordinal(Terms{{exponent, coefficient}});
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw std::invalid_argument("ordinal term with coefficient < 1");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("ordinal exponents must strictly decrease");
  }
  return Ordinal(std::move(terms));
}

bool Ordinal::is_finite() const noexcept {
  return is_zero() || (terms_->size() == 1 && terms_->front().exponent.is_zero());
}

std::span<const OrdinalTerm> Ordinal::terms() const noexcept {
  if (is_zero()) return {};
  return {terms_->data(), terms_->size()};
}

const Ordinal& Ordinal::leading_exponent() const noexcept {
  return is_zero() ? zero_ordinal() : terms_->front().exponent;
}

Natural Ordinal::finite_part() const {
  if (is_zero() || !terms_->back().exponent.is_zero()) return 0;
  return terms_->back().coefficient;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  auto ta = a.terms();
  auto tb = b.terms();
  if (ta.data() == tb.data() && ta.size() == tb.size()) return std::strong_ordering::equal;
  std::size_t common = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = compare(ta[i].exponent, tb[i].exponent); c != 0) return c;
    if (auto c = compare_naturals(ta[i].coefficient, tb[i].coefficient); c != 0) return c;
  }
  return ta.size() <=> tb.size();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  auto ta = a.terms();
  auto tb = b.terms();
  const Ordinal& lead = tb.front().exponent;

  Terms out;
  out.reserve(ta.size() + tb.size());
  bool merged = false;
  for (const auto& t : ta) {
    auto c = compare(t.exponent, lead);
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) {
        out.push_back({lead, t.coefficient + tb.front().coefficient});
        merged = true;
      }
      break;
    }
  }
  if (!merged) out.push_back(tb.front());
  out.insert(out.end(), tb.begin() + 1, tb.end());
  return Ordinal(std::move(out));
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ta = a.terms();
  const Ordinal& lead = ta.front().exponent;

  Terms out;
  for (const auto& t : b.terms()) {
    if (t.exponent.is_zero()) {
      // a * c for finite c multiplies only the leading coefficient
      out.push_back({lead, ta.front().coefficient * t.coefficient});
      out.insert(out.end(), ta.begin() + 1, ta.end());
    } else {
      out.push_back({lead + t.exponent, t.coefficient});
    }
  }
  return Ordinal(std::move(out));
}

Ordinal hyper_e(std::size_t n, const Ordinal& a) {
  Ordinal result = a;
  for (std::size_t i = 0; i < n && !result.is_zero(); ++i) result = Ordinal::omega_power(result);
  return result;
}

Ordinal ell(const Ordinal& a) {
  if (a.is_zero()) return {};
  return a.terms().back().exponent;
}

Ordinal split_one_plus(const Ordinal& a) {
  if (a.is_zero()) throw std::domain_error("split_one_plus: 0 is not of the form 1 + a");
  if (!a.is_finite()) return a;
  return Ordinal(Natural(a.finite_part() - 1));
}

Ordinal ceil_with_log_at_least(const Ordinal& floor, const Ordinal& min_log) {
  if (floor.is_zero()) return min_log.is_zero() ? floor : Ordinal::omega_power(min_log);
  if (ell(floor) >= min_log) return floor;
  Terms prefix;
  for (const auto& t : floor.terms()) {
    if (t.exponent < min_log) break;
    prefix.push_back(t);
  }
  return Ordinal(std::move(prefix)) + Ordinal::omega_power(min_log);
}

bool is_limit(const Ordinal& a) { return !a.is_zero() && !ell(a).is_zero(); }

bool is_successor(const Ordinal& a) { return !a.is_zero() && ell(a).is_zero(); }

std::string to_atom_string(const Ordinal& a) {
  if (a.is_finite()) return a.finite_part().str();
  if (a == Ordinal::omega()) return "w";
  return "(" + to_string(a) + ")";
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += "w";
    if (t.exponent != Ordinal(1)) out += "^" + to_atom_string(t.exponent);
    if (t.coefficient != 1) out += "*" + t.coefficient.str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

namespace detail {

namespace {

Ordinal parse_atom(Scanner& in) {
  if (in.accept('w')) return Ordinal::omega();
  if (in.accept('(')) {
    Ordinal inner = parse_ordinal(in);
    in.expect(')');
    return inner;
  }
  if (in.at_digit()) return Ordinal(in.natural());
  in.fail("expected an exponent (number, 'w' or parenthesised ordinal)");
}

Ordinal parse_term(Scanner& in) {
  if (in.accept('w')) {
    Ordinal exponent(1);
    if (in.accept('^')) exponent = parse_atom(in);
    Natural coefficient = 1;
    if (in.accept('*')) {
      std::size_t at = in.position();
      coefficient = in.natural();
      if (coefficient == 0) throw ParseError("coefficient must be at least 1", at);
    }
    return Ordinal::omega_power(exponent, coefficient);
  }
  if (in.at_digit()) {
    std::size_t at = in.position();
    Natural n = in.natural();
    if (n == 0) throw ParseError("0 may only appear as the whole ordinal", at);
    return Ordinal(n);
  }
  in.fail("expected an ordinal term ('w...' or a number)");
}

}  // namespace

Ordinal parse_ordinal(Scanner& in) {
  if (in.at_digit()) {
    // A lone "0" is the only place zero is allowed.
    Scanner probe = in;
    if (probe.natural() == 0) {
      in = probe;
      if (in.peek() == '+') in.fail("0 may only appear as the whole ordinal");
      return {};
    }
  }
  Ordinal sum = parse_term(in);
  while (in.accept('+')) sum = sum + parse_term(in);
  return sum;
}

}  // namespace detail

Ordinal parse_ordinal(std::string_view text) {
  detail::Scanner in(text);
  Ordinal result = detail::parse_ordinal(in);
  in.expect_end();
  return result;
}

}  // namespace tsc
