#include "colhopf/colour.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace colhopf {

const char* group_name(ColourGroupKind kind) {
  switch (kind) {
    case ColourGroupKind::S2:
      return "S2";
    case ColourGroupKind::GL1C:
      return "Gl(1,C)";
    case ColourGroupKind::GL1R:
      return "Gl(1,R)";
    case ColourGroupKind::SemiDirect:
      return "Gl(1,C)x|S2";
    case ColourGroupKind::GL1CPair:
      return "Gl(1,C)^2";
    case ColourGroupKind::GL1RPair:
      return "Gl(1,R)^2";
  }
  return "?";
}

bool group_abelian(ColourGroupKind kind) { return kind != ColourGroupKind::SemiDirect; }

int group_continuous_rank(ColourGroupKind kind) {
  switch (kind) {
    case ColourGroupKind::S2:
      return 0;
    case ColourGroupKind::GL1C:
    case ColourGroupKind::GL1R:
    case ColourGroupKind::SemiDirect:
      return 1;
    case ColourGroupKind::GL1CPair:
    case ColourGroupKind::GL1RPair:
      return 2;
  }
  return 0;
}

namespace {

void require_nonzero(Complex v, const char* what) {
  if (v == Complex(0.0)) throw std::invalid_argument(std::string(what) + ": colour must be nonzero");
}

void require_sign(int s, const char* what) {
  if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + ": sign must be +1 or -1");
}

}  // namespace

ColourPoint ColourPoint::s2(int sign) {
  require_sign(sign, "ColourPoint::s2");
  return ColourPoint(ColourGroupKind::S2, Complex(sign), 0.0);
}

ColourPoint ColourPoint::gl1c(Complex nu) {
  require_nonzero(nu, "ColourPoint::gl1c");
  return ColourPoint(ColourGroupKind::GL1C, nu, 0.0);
}

ColourPoint ColourPoint::gl1r(double nu) {
  require_nonzero(nu, "ColourPoint::gl1r");
  return ColourPoint(ColourGroupKind::GL1R, nu, 0.0);
}

ColourPoint ColourPoint::semidirect(Complex nu1, int sign) {
  require_nonzero(nu1, "ColourPoint::semidirect");
  require_sign(sign, "ColourPoint::semidirect");
  return ColourPoint(ColourGroupKind::SemiDirect, nu1, Complex(sign));
}

ColourPoint ColourPoint::gl1c_pair(Complex a, Complex b) {
  require_nonzero(a, "ColourPoint::gl1c_pair");
  require_nonzero(b, "ColourPoint::gl1c_pair");
  return ColourPoint(ColourGroupKind::GL1CPair, a, b);
}

ColourPoint ColourPoint::gl1r_pair(double a, double b) {
  require_nonzero(a, "ColourPoint::gl1r_pair");
  require_nonzero(b, "ColourPoint::gl1r_pair");
  return ColourPoint(ColourGroupKind::GL1RPair, a, b);
}

int ColourPoint::sign() const {
  switch (kind_) {
    case ColourGroupKind::S2:
      return static_cast<int>(c1_.real());
    case ColourGroupKind::SemiDirect:
      return static_cast<int>(c2_.real());
    default:
      throw std::invalid_argument("ColourPoint::sign: group has no sign component");
  }
}

std::string ColourPoint::str() const {
  std::ostringstream os;
  auto put = [&os](Complex v) {
    os << v.real();
    if (v.imag() != 0.0) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
  };
  switch (kind_) {
    case ColourGroupKind::S2:
      os << (sign() > 0 ? "+" : "-");
      break;
    case ColourGroupKind::GL1C:
    case ColourGroupKind::GL1R:
      put(c1_);
      break;
    case ColourGroupKind::SemiDirect:
      os << "(";
      put(c1_);
      os << "," << (sign() > 0 ? "+" : "-") << ")";
      break;
    case ColourGroupKind::GL1CPair:
    case ColourGroupKind::GL1RPair:
      os << "(";
      put(c1_);
      os << ",";
      put(c2_);
      os << ")";
      break;
  }
  return os.str();
}

ColourPoint group_identity(ColourGroupKind kind) {
  switch (kind) {
    case ColourGroupKind::S2:
      return ColourPoint::s2(1);
    case ColourGroupKind::GL1C:
      return ColourPoint::gl1c(1.0);
    case ColourGroupKind::GL1R:
      return ColourPoint::gl1r(1.0);
    case ColourGroupKind::SemiDirect:
      return ColourPoint::semidirect(1.0, 1);
    case ColourGroupKind::GL1CPair:
      return ColourPoint::gl1c_pair(1.0, 1.0);
    case ColourGroupKind::GL1RPair:
      return ColourPoint::gl1r_pair(1.0, 1.0);
  }
  throw std::logic_error("group_identity: unreachable");
}

ColourPoint compose(const ColourPoint& a, const ColourPoint& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("compose: colour points belong to different groups");
  switch (a.kind()) {
    case ColourGroupKind::S2:
      return ColourPoint::s2(a.sign() * b.sign());
    case ColourGroupKind::GL1C:
      return ColourPoint::gl1c(a.c1() * b.c1());
    case ColourGroupKind::GL1R:
      return ColourPoint::gl1r(a.c1().real() * b.c1().real());
    case ColourGroupKind::SemiDirect: {
      // (a1,a2)(b1,b2) = (a1 * b1^a2, a2*b2)
      const Complex b1 = a.sign() > 0 ? b.c1() : 1.0 / b.c1();
      return ColourPoint::semidirect(a.c1() * b1, a.sign() * b.sign());
    }
    case ColourGroupKind::GL1CPair:
      return ColourPoint::gl1c_pair(a.c1() * b.c1(), a.c2() * b.c2());
    case ColourGroupKind::GL1RPair:
      return ColourPoint::gl1r_pair(a.c1().real() * b.c1().real(),
                                    a.c2().real() * b.c2().real());
  }
  throw std::logic_error("compose: unreachable");
}

ColourPoint invert(const ColourPoint& a) {
  switch (a.kind()) {
    case ColourGroupKind::S2:
      return a;
    case ColourGroupKind::GL1C:
      return ColourPoint::gl1c(1.0 / a.c1());
    case ColourGroupKind::GL1R:
      return ColourPoint::gl1r(1.0 / a.c1().real());
    case ColourGroupKind::SemiDirect: {
      // (n1, n2)^-1 = (n1^(-n2), n2)
      const Complex inv1 = a.sign() > 0 ? 1.0 / a.c1() : a.c1();
      return ColourPoint::semidirect(inv1, a.sign());
    }
    case ColourGroupKind::GL1CPair:
      return ColourPoint::gl1c_pair(1.0 / a.c1(), 1.0 / a.c2());
    case ColourGroupKind::GL1RPair:
      return ColourPoint::gl1r_pair(1.0 / a.c1().real(), 1.0 / a.c2().real());
  }
  throw std::logic_error("invert: unreachable");
}

}  // namespace colhopf
