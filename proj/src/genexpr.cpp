#include "autfn/genexpr.hpp"

#include "autfn/nielsen.hpp"

namespace autfn {

namespace {

std::string special_name(Special s) {
  switch (s) {
    case Special::Iota:
      return "iota";
    case Special::Z:
      return "z";
    case Special::Alpha:
      return "alpha";
    case Special::Beta:
      return "beta";
    case Special::Theta:
      return "theta";
  }
  return "?";
}

std::string cycles_string(const GenExpr::Cycles& cycles) {
  std::string out;
  for (const auto& cyc : cycles) {
    out.push_back('(');
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out.push_back(' ');
      out += std::to_string(cyc[k]);
    }
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

bool is_seq(const GenExpr& e) { return std::holds_alternative<GenExpr::Seq>(e.node()); }

}  // namespace

bool equal_trees(const GenExpr& a, const GenExpr& b) {
  const auto& na = a.node();
  const auto& nb = b.node();
  if (na.index() != nb.index()) return false;
  if (auto* l = std::get_if<GenExpr::LambdaAtom>(&na)) {
    return *l == std::get<GenExpr::LambdaAtom>(nb);
  }
  if (auto* r = std::get_if<GenExpr::RhoAtom>(&na)) {
    return *r == std::get<GenExpr::RhoAtom>(nb);
  }
  if (auto* e = std::get_if<GenExpr::EpsAtom>(&na)) {
    return *e == std::get<GenExpr::EpsAtom>(nb);
  }
  if (auto* p = std::get_if<GenExpr::PermAtom>(&na)) {
    return *p == std::get<GenExpr::PermAtom>(nb);
  }
  if (auto* s = std::get_if<GenExpr::SigAtom>(&na)) {
    return *s == std::get<GenExpr::SigAtom>(nb);
  }
  if (auto* sp = std::get_if<GenExpr::SpecialAtom>(&na)) {
    return *sp == std::get<GenExpr::SpecialAtom>(nb);
  }
  if (auto* seq = std::get_if<GenExpr::Seq>(&na)) {
    const auto& other = std::get<GenExpr::Seq>(nb);
    if (seq->factors.size() != other.factors.size()) return false;
    for (std::size_t k = 0; k < seq->factors.size(); ++k) {
      if (!equal_trees(*seq->factors[k], *other.factors[k])) return false;
    }
    return true;
  }
  if (auto* inv = std::get_if<GenExpr::Inverse>(&na)) {
    return equal_trees(*inv->inner, *std::get<GenExpr::Inverse>(nb).inner);
  }
  if (auto* pow = std::get_if<GenExpr::Power>(&na)) {
    const auto& other = std::get<GenExpr::Power>(nb);
    return pow->exponent == other.exponent && equal_trees(*pow->base, *other.base);
  }
  if (auto* com = std::get_if<GenExpr::Commutator>(&na)) {
    const auto& other = std::get<GenExpr::Commutator>(nb);
    return equal_trees(*com->left, *other.left) && equal_trees(*com->right, *other.right);
  }
  const auto& ca = std::get<GenExpr::Conj>(na);
  const auto& cb = std::get<GenExpr::Conj>(nb);
  return ca.orientation == cb.orientation && equal_trees(*ca.conjugator, *cb.conjugator) &&
         equal_trees(*ca.element, *cb.element);
}

Endo evaluate(const GenExpr& expr, int n) {
  const auto& node = expr.node();
  if (auto* l = std::get_if<GenExpr::LambdaAtom>(&node)) {
    return lambda(l->i, l->j, n);
  }
  if (auto* r = std::get_if<GenExpr::RhoAtom>(&node)) {
    return rho(r->i, r->j, n);
  }
  if (auto* e = std::get_if<GenExpr::EpsAtom>(&node)) {
    return eps(e->i, n);
  }
  if (auto* p = std::get_if<GenExpr::PermAtom>(&node)) {
    return perm_endo(Perm::from_cycles(p->cycles, n), n);
  }
  if (auto* s = std::get_if<GenExpr::SigAtom>(&node)) {
    return lemma3_embed(Perm::from_cycles(s->cycles, n + 1), n);
  }
  if (auto* sp = std::get_if<GenExpr::SpecialAtom>(&node)) {
    return special(sp->which, n);
  }
  if (auto* seq = std::get_if<GenExpr::Seq>(&node)) {
    Endo out = Endo::identity(n);
    for (const auto& f : seq->factors) out = compose(out, evaluate(*f, n));
    return out;
  }
  if (auto* inv = std::get_if<GenExpr::Inverse>(&node)) {
    return inverse(evaluate(*inv->inner, n));
  }
  if (auto* pow = std::get_if<GenExpr::Power>(&node)) {
    return power(evaluate(*pow->base, n), pow->exponent);
  }
  if (auto* com = std::get_if<GenExpr::Commutator>(&node)) {
    Endo x = evaluate(*com->left, n);
    Endo y = evaluate(*com->right, n);
    return compose(compose(compose(x, y), inverse(x)), inverse(y));
  }
  const auto& conj = std::get<GenExpr::Conj>(node);
  Endo g = evaluate(*conj.conjugator, n);
  Endo x = evaluate(*conj.element, n);
  Endo ginv = inverse(g);
  return conj.orientation == ConjOrientation::Left ? compose(compose(g, x), ginv)
                                                   : compose(compose(ginv, x), g);
}

std::string render(const GenExpr& expr) {
  const auto& node = expr.node();
  if (auto* l = std::get_if<GenExpr::LambdaAtom>(&node)) {
    return "l(" + std::to_string(l->i) + "," + std::to_string(l->j) + ")";
  }
  if (auto* r = std::get_if<GenExpr::RhoAtom>(&node)) {
    return "r(" + std::to_string(r->i) + "," + std::to_string(r->j) + ")";
  }
  if (auto* e = std::get_if<GenExpr::EpsAtom>(&node)) {
    return "e(" + std::to_string(e->i) + ")";
  }
  if (auto* p = std::get_if<GenExpr::PermAtom>(&node)) {
    return "p" + cycles_string(p->cycles);
  }
  if (auto* s = std::get_if<GenExpr::SigAtom>(&node)) {
    return "sig" + cycles_string(s->cycles);
  }
  if (auto* sp = std::get_if<GenExpr::SpecialAtom>(&node)) {
    return special_name(sp->which);
  }
  if (auto* seq = std::get_if<GenExpr::Seq>(&node)) {
    std::string out;
    for (const auto& f : seq->factors) {
      if (!out.empty()) out.push_back(' ');
      out += is_seq(*f) ? "(" + render(*f) + ")" : render(*f);
    }
    return out;
  }
  if (auto* inv = std::get_if<GenExpr::Inverse>(&node)) {
    bool wrap = is_seq(*inv->inner);
    return (wrap ? "(" + render(*inv->inner) + ")" : render(*inv->inner)) + "'";
  }
  if (auto* pow = std::get_if<GenExpr::Power>(&node)) {
    bool wrap = is_seq(*pow->base);
    return (wrap ? "(" + render(*pow->base) + ")" : render(*pow->base)) + "^" +
           std::to_string(pow->exponent);
  }
  if (auto* com = std::get_if<GenExpr::Commutator>(&node)) {
    return "[" + render(*com->left) + ", " + render(*com->right) + "]";
  }
  // Conj has no surface syntax; render through its definition.
  const auto& conj = std::get<GenExpr::Conj>(node);
  std::string g = is_seq(*conj.conjugator) ? "(" + render(*conj.conjugator) + ")"
                                           : render(*conj.conjugator);
  std::string x = is_seq(*conj.element) ? "(" + render(*conj.element) + ")"
                                        : render(*conj.element);
  if (conj.orientation == ConjOrientation::Left) {
    return g + " " + x + " " + g + "'";
  }
  return g + "' " + x + " " + g;
}

}  // namespace autfn
