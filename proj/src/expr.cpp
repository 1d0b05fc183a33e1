#include "colhopf/expr.hpp"

#include <stdexcept>

namespace colhopf {

struct TensorExpr::Node {
  Kind kind;
  int leg = 0;
  GenId gen;
  Complex value = 0.0;
  Series series = Series::Exp;
  std::vector<TensorExpr> children;
};

TensorExpr TensorExpr::atom(int leg, GenId gen) {
  if (leg < 1) throw std::invalid_argument("TensorExpr::atom: leg indices are 1-based");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->leg = leg;
  n->gen = std::move(gen);
  return TensorExpr(std::move(n));
}

TensorExpr TensorExpr::scalar(Complex value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ScalarLit;
  n->value = value;
  return TensorExpr(std::move(n));
}

TensorExpr TensorExpr::scale(Complex factor, TensorExpr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scale;
  n->value = factor;
  n->children.push_back(std::move(inner));
  return TensorExpr(std::move(n));
}

TensorExpr TensorExpr::sum(std::vector<TensorExpr> terms) {
  if (terms.empty()) throw std::invalid_argument("TensorExpr::sum: empty term list");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = std::move(terms);
  return TensorExpr(std::move(n));
}

TensorExpr TensorExpr::prod(std::vector<TensorExpr> factors) {
  if (factors.empty()) throw std::invalid_argument("TensorExpr::prod: empty factor list");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  n->children = std::move(factors);
  return TensorExpr(std::move(n));
}

TensorExpr TensorExpr::func(Series series, TensorExpr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Func;
  n->series = series;
  n->children.push_back(std::move(arg));
  return TensorExpr(std::move(n));
}

TensorExpr::Kind TensorExpr::kind() const { return node_->kind; }
int TensorExpr::leg() const { return node_->leg; }
const GenId& TensorExpr::gen() const { return node_->gen; }
Complex TensorExpr::value() const { return node_->value; }
Series TensorExpr::series() const { return node_->series; }
const std::vector<TensorExpr>& TensorExpr::children() const { return node_->children; }

TensorExpr operator+(const TensorExpr& a, const TensorExpr& b) { return TensorExpr::sum({a, b}); }
TensorExpr operator-(const TensorExpr& a, const TensorExpr& b) {
  return TensorExpr::sum({a, TensorExpr::scale(-1.0, b)});
}
TensorExpr operator*(const TensorExpr& a, const TensorExpr& b) { return TensorExpr::prod({a, b}); }
TensorExpr operator*(Complex c, const TensorExpr& e) { return TensorExpr::scale(c, e); }
TensorExpr operator-(const TensorExpr& e) { return TensorExpr::scale(-1.0, e); }

long AtomAssignment::total_dim() const {
  long total = 1;
  for (int d : dims) total *= d;
  return total;
}

const std::vector<int>& AtomAssignment::group_for(int leg) const {
  static const std::vector<int> empty;
  auto it = leg_groups.find(leg);
  if (it != leg_groups.end()) return it->second;
  return empty;  // caller substitutes the identity group {leg}
}

long AtomAssignment::group_dim(int leg) const {
  auto it = leg_groups.find(leg);
  if (it == leg_groups.end()) {
    if (leg < 1 || leg > static_cast<int>(dims.size()))
      throw std::invalid_argument("AtomAssignment: leg out of range");
    return dims[leg - 1];
  }
  long d = 1;
  for (int phys : it->second) d *= dims[phys - 1];
  return d;
}

AtomAssignment& AtomAssignment::map_leg(int leg, std::vector<int> physical_legs) {
  leg_groups[leg] = std::move(physical_legs);
  return *this;
}

AtomAssignment& AtomAssignment::assign(int leg, const GenId& gen, ComplexMatrix m) {
  matrices[{leg, gen}] = std::move(m);
  return *this;
}

const ComplexMatrix& AtomAssignment::matrix_for(int leg, const GenId& gen) const {
  auto it = matrices.find({leg, gen});
  if (it == matrices.end())
    throw std::invalid_argument("AtomAssignment: no matrix for generator '" + gen + "' on leg " +
                                std::to_string(leg));
  return it->second;
}

namespace {

ComplexMatrix eval_impl(const TensorExpr& expr, const AtomAssignment& asg, bool reverse_products) {
  switch (expr.kind()) {
    case TensorExpr::Kind::Atom: {
      const ComplexMatrix& m = asg.matrix_for(expr.leg(), expr.gen());
      std::vector<int> legs = asg.group_for(expr.leg());
      if (legs.empty()) legs = {expr.leg()};
      if (m.rows() != asg.group_dim(expr.leg()))
        throw std::invalid_argument("eval: matrix for '" + expr.gen() +
                                    "' does not match its leg group dimension");
      return embed(m, legs, asg.dims);
    }
    case TensorExpr::Kind::ScalarLit:
      return expr.value() * ComplexMatrix::identity(static_cast<int>(asg.total_dim()));
    case TensorExpr::Kind::Scale:
      return expr.value() * eval_impl(expr.children()[0], asg, reverse_products);
    case TensorExpr::Kind::Sum: {
      ComplexMatrix acc = eval_impl(expr.children()[0], asg, reverse_products);
      for (std::size_t i = 1; i < expr.children().size(); ++i)
        acc += eval_impl(expr.children()[i], asg, reverse_products);
      return acc;
    }
    case TensorExpr::Kind::Prod: {
      const auto& ch = expr.children();
      ComplexMatrix acc;
      bool first = true;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        const std::size_t idx = reverse_products ? ch.size() - 1 - i : i;
        ComplexMatrix m = eval_impl(ch[idx], asg, reverse_products);
        acc = first ? std::move(m) : acc * m;
        first = false;
      }
      return acc;
    }
    case TensorExpr::Kind::Func:
      // An antihomomorphism fixes power series of a single element, so the
      // series is applied outside either way.
      return analytic_apply(expr.series(), eval_impl(expr.children()[0], asg, reverse_products));
  }
  throw std::logic_error("eval: unreachable expression kind");
}

}  // namespace

ComplexMatrix eval_hom(const TensorExpr& expr, const AtomAssignment& asg) {
  return eval_impl(expr, asg, false);
}

ComplexMatrix eval_antihom(const TensorExpr& expr, const AtomAssignment& asg) {
  return eval_impl(expr, asg, true);
}

TensorExpr map_generators(const TensorExpr& expr,
                          const std::function<GenRule(int, const GenId&)>& rule) {
  switch (expr.kind()) {
    case TensorExpr::Kind::Atom: {
      const GenRule r = rule(expr.leg(), expr.gen());
      return TensorExpr::scale(r.coeff, TensorExpr::atom(expr.leg(), r.target));
    }
    case TensorExpr::Kind::ScalarLit:
      return expr;
    case TensorExpr::Kind::Scale:
      return TensorExpr::scale(expr.value(), map_generators(expr.children()[0], rule));
    case TensorExpr::Kind::Sum: {
      std::vector<TensorExpr> terms;
      terms.reserve(expr.children().size());
      for (const auto& c : expr.children()) terms.push_back(map_generators(c, rule));
      return TensorExpr::sum(std::move(terms));
    }
    case TensorExpr::Kind::Prod: {
      std::vector<TensorExpr> factors;
      factors.reserve(expr.children().size());
      for (const auto& c : expr.children()) factors.push_back(map_generators(c, rule));
      return TensorExpr::prod(std::move(factors));
    }
    case TensorExpr::Kind::Func:
      return TensorExpr::func(expr.series(), map_generators(expr.children()[0], rule));
  }
  throw std::logic_error("map_generators: unreachable expression kind");
}

TensorExpr map_generators(const TensorExpr& expr, const std::map<GenId, GenRule>& gmap) {
  return map_generators(expr, [&gmap](int, const GenId& g) {
    auto it = gmap.find(g);
    if (it == gmap.end())
      throw std::invalid_argument("map_generators: unmapped generator '" + g + "'");
    return it->second;
  });
}

}  // namespace colhopf
