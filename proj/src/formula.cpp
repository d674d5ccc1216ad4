#include "tsc/formula.hpp"

#include <algorithm>
#include <ostream>

#include "scanner.hpp"

namespace tsc {

namespace {

const std::shared_ptr<const FormulaNode>& top_node() {
  static const auto node = std::make_shared<const FormulaNode>(FormulaNode{Top{}});
  return node;
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void collect_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (const auto* c = std::get_if<Conj>(&f.node().value)) {
    collect_conjuncts(c->lhs, out);
    collect_conjuncts(c->rhs, out);
  } else {
    out.push_back(f);
  }
}

void write(std::string& out, const Formula& f) {
  std::visit(Overloaded{
                 [&](const Top&) { out += "T"; },
                 [&](const Conj& c) {
                   write(out, c.lhs);
                   out += " & ";
                   bool wrap = std::holds_alternative<Conj>(c.rhs.node().value);
                   if (wrap) out += "(";
                   write(out, c.rhs);
                   if (wrap) out += ")";
                 },
                 [&](const Diamond& d) {
                   out += "<" + std::to_string(d.base) + "^" + to_atom_string(d.exponent) + ">";
                   bool wrap = std::holds_alternative<Conj>(d.body.node().value);
                   if (wrap) out += "(";
                   write(out, d.body);
                   if (wrap) out += ")";
                 },
             },
             f.node().value);
}

}  // namespace

Formula::Formula() : node_(top_node()) {}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const FormulaNode>(FormulaNode{Conj{std::move(lhs), std::move(rhs)}}));
}

Formula Formula::diamond(std::size_t base, Ordinal exponent, Formula body) {
  if (exponent.is_zero()) return body;
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Diamond{base, std::move(exponent), std::move(body)}}));
}

bool Formula::is_top() const noexcept { return std::holds_alternative<Top>(node_->value); }

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

std::set<std::size_t> n_mod(const Formula& f) {
  std::set<std::size_t> bases;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (const auto* c = std::get_if<Conj>(&g->node().value)) {
      stack.push_back(&c->lhs);
      stack.push_back(&c->rhs);
    } else if (const auto* d = std::get_if<Diamond>(&g->node().value)) {
      bases.insert(d->base);
      stack.push_back(&d->body);
    }
  }
  return bases;
}

std::vector<Formula> flatten_conjunction(const Formula& f) {
  std::vector<Formula> out;
  collect_conjuncts(f, out);
  return out;
}

Formula conjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
  return acc;
}

std::size_t depth(const Formula& f) {
  return std::visit(Overloaded{
                        [](const Top&) -> std::size_t { return 0; },
                        [](const Conj& c) -> std::size_t { return 1 + std::max(depth(c.lhs), depth(c.rhs)); },
                        [](const Diamond& d) -> std::size_t { return 1 + depth(d.body); },
                    },
                    f.node().value);
}

std::string to_string(const Formula& f) {
  std::string out;
  write(out, f);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

namespace detail {

namespace {

Formula parse_conjunction(Scanner& in);

Formula parse_unary(Scanner& in) {
  if (in.accept('T')) return Formula::top();
  if (in.accept('(')) {
    Formula inner = parse_conjunction(in);
    in.expect(')');
    return inner;
  }
  if (in.accept('<')) {
    std::size_t at = in.position();
    Natural base = in.natural();
    if (base > kMaxParsedBase)
      throw ParseError("modality base exceeds " + std::to_string(kMaxParsedBase), at);
    in.expect('^');
    // The printer wraps compound exponents in parentheses.
    Ordinal exponent;
    if (in.accept('(')) {
      exponent = parse_ordinal(in);
      in.expect(')');
    } else {
      exponent = parse_ordinal(in);
    }
    in.expect('>');
    Formula body = parse_unary(in);
    return Formula::diamond(base.convert_to<std::size_t>(), std::move(exponent), std::move(body));
  }
  in.fail("expected 'T', '(' or '<'");
}

Formula parse_conjunction(Scanner& in) {
  Formula acc = parse_unary(in);
  while (in.accept('&')) acc = Formula::conj(acc, parse_unary(in));
  return acc;
}

}  // namespace

Formula parse_formula(Scanner& in) { return parse_conjunction(in); }

}  // namespace detail

Formula parse_formula(std::string_view text) {
  detail::Scanner in(text);
  Formula f = detail::parse_formula(in);
  in.expect_end();
  return f;
}

}  // namespace tsc
