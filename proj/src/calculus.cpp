#include "tsc/calculus.hpp"

#include <ostream>
#include <utility>

#include "scanner.hpp"

namespace tsc {

bool schmerl_compatible(std::size_t lower_base, const Ordinal& exponent, std::size_t upper_base,
                        const Ordinal& upper_exponent) {
  if (lower_base >= upper_base || exponent.is_zero() || upper_exponent.is_zero()) return false;
  // e^k(a0) = w^p with p = e^(k-1)(a0) because k >= 1 and a0 >= 1.
  Ordinal p = hyper_e(upper_base - lower_base - 1, upper_exponent);
  Ordinal unit = Ordinal::omega_power(p);
  // exponent = unit * (2 + d)  <=>  exponent is a left multiple of w^p and at least unit * 2
  return ell(exponent) >= p && exponent >= unit * Ordinal(2);
}

MonomialNormalForm MonomialNormalForm::make(std::vector<Monomial> monomials) {
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (monomials[i].exponent.is_zero()) throw NotRepresentable("monomial with exponent 0");
    if (i + 1 < monomials.size()) {
      const auto& lo = monomials[i];
      const auto& hi = monomials[i + 1];
      if (lo.base >= hi.base) throw NotRepresentable("monomial bases must strictly increase");
      if (!schmerl_compatible(lo.base, lo.exponent, hi.base, hi.exponent))
        throw NotRepresentable("exponent of base " + std::to_string(lo.base) +
                               " violates the normal-form condition");
    }
  }
  MonomialNormalForm psi;
  psi.monomials_ = std::move(monomials);
  return psi;
}

Ordinal projection(const MonomialNormalForm& psi, std::size_t m) {
  auto monos = psi.monomials();
  if (monos.empty() || m > monos.back().base) return {};
  // first monomial with base >= m
  std::size_t i = 0;
  while (monos[i].base < m) ++i;
  return hyper_e(monos[i].base - m, monos[i].exponent);
}

Point point_of_mnf(const MonomialNormalForm& psi) {
  auto monos = psi.monomials();
  if (monos.empty()) return {};
  std::vector<Ordinal> coords(monos.back().base + 1);
  std::size_t next = monos.size();
  for (std::size_t m = coords.size(); m-- > 0;) {
    if (next > 0 && monos[next - 1].base == m) {
      coords[m] = monos[--next].exponent;
    } else {
      coords[m] = hyper_e(1, coords[m + 1]);
    }
  }
  return Point::make(std::move(coords));
}

MonomialNormalForm mnf_of_point(const Point& x) {
  std::vector<Monomial> monos;
  for (std::size_t n = 0; n < x.support(); ++n) {
    bool last = n + 1 == x.support();
    if (last || x[n] != hyper_e(1, x[n + 1])) monos.push_back({n, x[n]});
  }
  MonomialNormalForm psi = MonomialNormalForm::make(std::move(monos));
  if (point_of_mnf(psi) != x) throw NotRepresentable("normal form does not reproduce " + to_string(x));
  return psi;
}

MonomialNormalForm normalize(const Formula& f) { return mnf_of_point(minimal_point(f)); }

Formula to_formula(const MonomialNormalForm& psi) {
  std::vector<Formula> parts;
  for (const auto& m : psi.monomials()) parts.push_back(Formula::diamond(m.base, m.exponent, Formula::top()));
  return conjunction_of(parts);
}

bool is_mnf(const Formula& f) {
  if (f.is_top()) return true;
  std::vector<Monomial> monos;
  for (const auto& part : flatten_conjunction(f)) {
    const auto* d = std::get_if<Diamond>(&part.node().value);
    if (d == nullptr || !d->body.is_top()) return false;
    monos.push_back({d->base, d->exponent});
  }
  try {
    MonomialNormalForm::make(std::move(monos));
  } catch (const NotRepresentable&) {
    return false;
  }
  return true;
}

Verdict derives(const Sequent& s) {
  Point x = minimal_point(s.lhs);
  if (in_cone(x, minimal_point(s.rhs))) return {true, std::nullopt};
  return {false, std::move(x)};
}

bool equiv(const Formula& f, const Formula& g) { return minimal_point(f) == minimal_point(g); }

std::string to_string(const MonomialNormalForm& psi) { return to_string(to_formula(psi)); }

std::ostream& operator<<(std::ostream& os, const MonomialNormalForm& psi) { return os << to_string(psi); }

std::string to_string(const Sequent& s) { return to_string(s.lhs) + " |- " + to_string(s.rhs); }

std::string to_machine_string(const Verdict& v) {
  if (v.derivable) return "derivable=true";
  return "derivable=false; countermodel=" + to_string(*v.countermodel);
}

Sequent parse_sequent(std::string_view text) {
  detail::Scanner in(text);
  Formula lhs = detail::parse_formula(in);
  in.expect("|-");
  Formula rhs = detail::parse_formula(in);
  in.expect_end();
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace tsc
