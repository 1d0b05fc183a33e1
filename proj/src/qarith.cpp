#include "colhopf/qarith.hpp"

#include <cmath>
#include <stdexcept>

namespace colhopf {

Complex QParams::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("QParams: missing parameter '" + name + "'");
  return it->second;
}

QParams& QParams::set(const std::string& name, Complex value) {
  values_[name] = value;
  return *this;
}

Complex q_number(Complex x, Complex q) {
  constexpr double kPole = 1e-14;
  if (std::abs(q - 1.0) < kPole || std::abs(q + 1.0) < kPole)
    throw std::domain_error("q_number: q = +-1 is a pole of (q - q^-1)");
  const Complex qx = std::pow(q, x);
  return (qx - 1.0 / qx) / (q - 1.0 / q);
}

Complex q_factorial(int n, Complex q) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative n");
  Complex f = 1.0;
  for (int k = 1; k <= n; ++k) f *= q_number(Complex(k), q);
  return f;
}

Complex q_pow(Complex eta, Complex x) { return std::exp(eta * x); }

Complex q_number_eta(Complex x, Complex eta) {
  const Complex denom = std::exp(eta) - std::exp(-eta);
  constexpr double kPole = 1e-14;
  if (std::abs(denom) < kPole) throw std::domain_error("q_number_eta: q = +-1 pole");
  return (std::exp(eta * x) - std::exp(-eta * x)) / denom;
}

Complex q_factorial_eta(int n, Complex eta) {
  if (n < 0) throw std::invalid_argument("q_factorial_eta: negative n");
  Complex f = 1.0;
  for (int k = 1; k <= n; ++k) f *= q_number_eta(Complex(k), eta);
  return f;
}

Complex q_exponential_coefficient(int n, Complex eta_x) {
  if (n < 0) throw std::invalid_argument("q_exponential_coefficient: negative n");
  const Complex prefactor = std::exp(-eta_x * (n * (n - 1) / 4.0));
  return prefactor / q_factorial_eta(n, eta_x / 2.0);
}

}  // namespace colhopf
