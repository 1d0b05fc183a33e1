#pragma once

#include <string>

#include "colhopf/matrix.hpp"

namespace colhopf {

/// The colour groups appearing in the catalog. S2 is the two-element sign
/// group; GL1C/GL1R are the multiplicative groups of C\{0} and R\{0}; the
/// pair variants are direct products; SemiDirect is Gl(1,C) x| S2 with the
/// law (a1,a2)(b1,b2) = (a1 * b1^a2, a2*b2).
enum class ColourGroupKind { S2, GL1C, GL1R, SemiDirect, GL1CPair, GL1RPair };

const char* group_name(ColourGroupKind kind);
bool group_abelian(ColourGroupKind kind);
/// Number of continuous GL1 factors (0 for S2).
int group_continuous_rank(ColourGroupKind kind);

class ColourPoint {
 public:
  static ColourPoint s2(int sign);
  static ColourPoint gl1c(Complex nu);
  static ColourPoint gl1r(double nu);
  static ColourPoint semidirect(Complex nu1, int sign);
  static ColourPoint gl1c_pair(Complex a, Complex b);
  static ColourPoint gl1r_pair(double a, double b);

  ColourGroupKind kind() const { return kind_; }
  Complex c1() const { return c1_; }
  Complex c2() const { return c2_; }
  /// Sign component: the S2 value, or the second slot of SemiDirect.
  int sign() const;

  std::string str() const;

 private:
  ColourPoint(ColourGroupKind kind, Complex c1, Complex c2) : kind_(kind), c1_(c1), c2_(c2) {}
  ColourGroupKind kind_;
  Complex c1_;
  Complex c2_;
};

ColourPoint group_identity(ColourGroupKind kind);
ColourPoint compose(const ColourPoint& a, const ColourPoint& b);
ColourPoint invert(const ColourPoint& a);

}  // namespace colhopf
