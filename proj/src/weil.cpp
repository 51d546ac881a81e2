#include "rsdl/weil.hpp"

#include <algorithm>
#include <complex>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Eigenvalues>

namespace rsdl {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::cpp_bin_float<80>, mp::et_off>;
using Complex = std::complex<Real>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

Complex embed(const Cyclo& v) {
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  Complex out(0, 0);
  const auto& c = v.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const Real angle = two_pi * static_cast<long long>(j) / static_cast<long long>(v.order());
    out += Complex(mp::cos(angle), mp::sin(angle)) * Real(static_cast<long long>(c[j]));
  }
  return out;
}

}  // namespace

WeilReport weil_check(const LFunction& L, std::uint32_t q, double tolerance) {
  WeilReport report;
  report.tolerance = tolerance;
  report.degree = L.degree();
  const Real sqrt_q = mp::sqrt(Real(q));
  report.sqrt_q = static_cast<double>(sqrt_q);
  const std::size_t D = report.degree;
  if (D == 0) return report;

  std::vector<Complex> coeffs(D + 1);
  for (std::size_t k = 0; k <= D; ++k) coeffs[k] = embed(L.coeffs[k]);

  // Roots of t^D + M_1 t^{D-1} + ... + M_D.
  Matrix companion = Matrix::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
  for (std::size_t j = 0; j < D; ++j) companion(0, static_cast<Eigen::Index>(j)) = -coeffs[j + 1] / coeffs[0];
  for (std::size_t i = 1; i < D; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = Complex(1, 0);
  Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::NumericalInstability, "eigenvalue iteration failed");
  const auto& roots = solver.eigenvalues();

  // prod (t - rho_i) must reproduce the coefficients.
  std::vector<Complex> rebuilt{Complex(1, 0)};
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    std::vector<Complex> next(rebuilt.size() + 1, Complex(0, 0));
    for (std::size_t j = 0; j < rebuilt.size(); ++j) {
      next[j] += rebuilt[j];
      next[j + 1] -= rebuilt[j] * roots(i);
    }
    rebuilt = std::move(next);
  }
  Real scale = 1, worst = 0;
  for (std::size_t k = 0; k <= D; ++k) scale = std::max(scale, Real(std::abs(coeffs[k])));
  for (std::size_t k = 0; k <= D; ++k) worst = std::max(worst, Real(std::abs(rebuilt[k] - coeffs[k] / coeffs[0])));
  report.residual = static_cast<double>(worst / scale);
  if (report.residual > kWeilResidualLimit)
    throw Error(ErrorKind::NumericalInstability, "companion roots do not reproduce the L-polynomial");

  const Real limit = sqrt_q * (1 + Real(tolerance));
  Real worst_ratio = 0;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const Real modulus = std::abs(roots(i));
    report.root_moduli.push_back(static_cast<double>(modulus));
    worst_ratio = std::max(worst_ratio, modulus / sqrt_q);
    if (modulus > limit) report.pass = false;
  }
  std::sort(report.root_moduli.begin(), report.root_moduli.end());
  report.max_ratio = static_cast<double>(worst_ratio);
  return report;
}

}  // namespace rsdl
