#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "colhopf/matrix.hpp"

namespace colhopf {

using GenId = std::string;

/// One coefficient-and-target rewrite of a generator, g -> coeff * target.
struct GenRule {
  Complex coeff;
  GenId target;
};

/// Immutable expression tree over leg-tagged generator atoms. Legs are
/// 1-based. An expression denotes an element of H^(x)n; evaluation turns it
/// into a matrix once every (leg, generator) atom has been assigned one.
class TensorExpr {
 public:
  enum class Kind { Atom, ScalarLit, Scale, Sum, Prod, Func };

  /// An empty expression; using one before assignment is a logic error.
  TensorExpr() = default;

  static TensorExpr atom(int leg, GenId gen);
  static TensorExpr scalar(Complex value);
  static TensorExpr scale(Complex factor, TensorExpr inner);
  static TensorExpr sum(std::vector<TensorExpr> terms);
  static TensorExpr prod(std::vector<TensorExpr> factors);
  static TensorExpr func(Series series, TensorExpr arg);

  Kind kind() const;
  int leg() const;                // Atom
  const GenId& gen() const;       // Atom
  Complex value() const;          // ScalarLit / Scale factor
  Series series() const;          // Func
  const std::vector<TensorExpr>& children() const;  // Scale/Sum/Prod/Func

  bool valid() const { return node_ != nullptr; }

 private:
  struct Node;
  explicit TensorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

TensorExpr operator+(const TensorExpr& a, const TensorExpr& b);
TensorExpr operator-(const TensorExpr& a, const TensorExpr& b);
TensorExpr operator*(const TensorExpr& a, const TensorExpr& b);
TensorExpr operator*(Complex c, const TensorExpr& e);
TensorExpr operator-(const TensorExpr& e);

/// Matrices for the atoms of an expression. Each expression leg maps to a
/// group of physical legs (by default, leg l -> physical leg l); atoms on
/// that leg are assigned matrices acting on the group's product space. A
/// coproduct image occupying two legs is expressed by mapping one expression
/// leg to a two-leg group.
struct AtomAssignment {
  std::vector<int> dims;  // physical leg dimensions; index 0 is leg 1
  std::map<int, std::vector<int>> leg_groups;
  std::map<std::pair<int, GenId>, ComplexMatrix> matrices;

  AtomAssignment() = default;
  explicit AtomAssignment(std::vector<int> physical_dims) : dims(std::move(physical_dims)) {}

  long total_dim() const;
  const std::vector<int>& group_for(int leg) const;
  long group_dim(int leg) const;
  AtomAssignment& map_leg(int leg, std::vector<int> physical_legs);
  AtomAssignment& assign(int leg, const GenId& gen, ComplexMatrix m);
  const ComplexMatrix& matrix_for(int leg, const GenId& gen) const;
};

/// Homomorphic evaluation: Prod multiplies in written order.
ComplexMatrix eval_hom(const TensorExpr& expr, const AtomAssignment& asg);

/// Antihomomorphic evaluation: every Prod multiplies in reversed order;
/// Func(f, x) evaluates as f(eval_antihom(x)).
ComplexMatrix eval_antihom(const TensorExpr& expr, const AtomAssignment& asg);

/// Replace each Atom(leg, g) by Scale(rule(leg, g).coeff, Atom(leg, rule(leg, g).target)).
TensorExpr map_generators(const TensorExpr& expr,
                          const std::function<GenRule(int, const GenId&)>& rule);

/// Same rule on every leg; throws on a generator the map does not cover.
TensorExpr map_generators(const TensorExpr& expr, const std::map<GenId, GenRule>& gmap);

}  // namespace colhopf
