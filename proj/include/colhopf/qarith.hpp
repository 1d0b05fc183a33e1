#pragma once

#include <map>
#include <string>

#include "colhopf/matrix.hpp"

namespace colhopf {

/// Deformation parameters of one catalog algebra, stored by name. The
/// standard deformation is parameterized by eta with q = exp(eta), so that
/// non-integer q-powers q^x = exp(eta*x) never touch a logarithm branch cut.
class QParams {
 public:
  QParams() = default;

  bool has(const std::string& name) const { return values_.count(name) != 0; }
  Complex get(const std::string& name) const;
  QParams& set(const std::string& name, Complex value);

  Complex eta() const { return get("eta"); }
  Complex q() const { return std::exp(eta()); }

  const std::map<std::string, Complex>& values() const { return values_; }

 private:
  std::map<std::string, Complex> values_;
};

/// [x]_q = (q^x - q^-x)/(q - q^-1). Throws at the q = +-1 poles.
Complex q_number(Complex x, Complex q);

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
Complex q_factorial(int n, Complex q);

/// q^x computed as exp(eta*x), branch-free.
Complex q_pow(Complex eta, Complex x);

/// [x]_q with q = exp(eta), avoiding the logarithm entirely.
Complex q_number_eta(Complex x, Complex eta);

Complex q_factorial_eta(int n, Complex eta);

/// n-th coefficient x^{-n(n-1)/4} / [n]_{x^{1/2}}! of the q-exponential
/// E_x(A), with x = exp(eta_x) so the quarter-powers are branch-free.
Complex q_exponential_coefficient(int n, Complex eta_x);

}  // namespace colhopf
