#include "qdm/polarization.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "json.hpp"

namespace qdm {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

BigInt factorial(long n) {
  if (n < 0) throw InvalidAngularMomenta("factorial of negative integer in CG sum");
  BigInt r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

// Twice-value representation: tj = 2j must be a nonnegative integer.
long twice(double j, const char* what) {
  double t = 2.0 * j;
  long r = std::lround(t);
  if (std::abs(t - r) > 1e-9)
    throw InvalidAngularMomenta(std::string("non-half-integer ") + what);
  return r;
}

double to_double(const BigRat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

double clebsch_gordan(double j1, double m1, double j2, double m2, double j, double m) {
  long tj1 = twice(j1, "j1"), tm1 = twice(m1, "m1"), tj2 = twice(j2, "j2"),
       tm2 = twice(m2, "m2"), tj = twice(j, "j"), tm = twice(m, "m");
  if (tj1 < 0 || tj2 < 0 || tj < 0) throw InvalidAngularMomenta("negative angular momentum");
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj)
    throw InvalidAngularMomenta("|m| > j");
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj + tm) % 2 != 0)
    throw InvalidAngularMomenta("m not of the same integer/half-integer type as j");
  if (tm1 + tm2 != tm) return 0.0;
  // triangle rule
  if (tj > tj1 + tj2 || tj < std::labs(tj1 - tj2) || (tj1 + tj2 + tj) % 2 != 0) return 0.0;

  // All factorial arguments below are true integers (twice-values are even sums).
  auto f = [](long twice_val) { return factorial(twice_val / 2); };

  BigRat prefactor =
      BigRat(BigInt(tj + 1), 1) * BigRat(f(tj1 + tj2 - tj), 1) * BigRat(f(tj1 - tj2 + tj), 1) *
      BigRat(f(-tj1 + tj2 + tj), 1) / BigRat(f(tj1 + tj2 + tj + 2), 1);
  prefactor *= BigRat(f(tj + tm) * f(tj - tm) * f(tj1 + tm1) * f(tj1 - tm1) * f(tj2 + tm2) *
                          f(tj2 - tm2),
                      1);

  // Racah sum over k with all factorial arguments nonnegative.
  long k_min = std::max(0L, std::max((tj2 - tj - tm1) / 2, (tj1 - tj + tm2) / 2));
  long k_max = std::min((tj1 + tj2 - tj) / 2, std::min((tj1 - tm1) / 2, (tj2 + tm2) / 2));
  BigRat sum(0);
  for (long k = k_min; k <= k_max; ++k) {
    BigInt denom = factorial(k) * f(tj1 + tj2 - tj - 2 * k) * f(tj1 - tm1 - 2 * k) *
                   f(tj2 + tm2 - 2 * k) * f(tj - tj2 + tm1 + 2 * k) *
                   f(tj - tj1 - tm2 + 2 * k);
    BigRat term(1, denom);
    if (k % 2 != 0) term = -term;
    sum += term;
  }
  if (sum == BigRat(0)) return 0.0;
  double value = to_double(sum) * std::sqrt(to_double(prefactor));
  return value;
}

const Matrix& PolarizationBasis::at(int L, int M) const {
  auto it = operators.find({L, M});
  if (it == operators.end()) throw InvalidAngularMomenta("no such (L, M) operator");
  return it->second;
}

PolarizationBasis polarization_ops(int n) {
  if (n < 2) throw InvalidAngularMomenta("polarization_ops: n must be >= 2");
  PolarizationBasis b;
  b.n = n;
  const double s = (n - 1) / 2.0;
  for (int L = 0; L <= n - 1; ++L)
    for (int M = -L; M <= L; ++M) {
      Matrix t = Matrix::Zero(n, n);
      double scale = std::sqrt((2.0 * L + 1.0) / n);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double mk = s - k, ml = s - l;
          t(k, l) = scale * clebsch_gordan(s, ml, L, M, s, mk);
        }
      b.operators[{L, M}] = std::move(t);
    }
  return b;
}

double PolarizationBloch::norm2() const {
  double r = 0.0;
  for (const auto& [lm, v] : components) r += std::norm(v);
  return r;
}

std::string PolarizationBloch::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  nlohmann::json comp = nlohmann::json::object();
  for (const auto& [lm, v] : components)
    comp[std::to_string(lm.first) + "," + std::to_string(lm.second)] = {v.real(), v.imag()};
  j["components"] = std::move(comp);
  return j.dump();
}

PolarizationBloch PolarizationBloch::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PolarizationBloch v;
  v.n = j.at("n").get<int>();
  for (const auto& [key, val] : j.at("components").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw InvalidAngularMomenta("component key must be \"L,M\"");
    int L = std::stoi(key.substr(0, comma));
    int M = std::stoi(key.substr(comma + 1));
    v.components[{L, M}] = cxd(val.at(0).get<double>(), val.at(1).get<double>());
  }
  return v;
}

PolarizationBloch po_from_density(const Matrix& rho, const PolarizationBasis& basis,
                                  double tol) {
  if (rho.rows() != basis.n || rho.cols() != basis.n)
    throw DimensionMismatch("po_from_density: dimension mismatch");
  PolarizationBloch v;
  v.n = basis.n;
  for (const auto& [lm, t] : basis.operators) {
    if (lm.first == 0) continue;
    v.components[lm] = (t.adjoint() * rho).trace();
  }
  for (const auto& [lm, val] : v.components) {
    cxd mirror = v.components.at({lm.first, -lm.second});
    double sign = lm.second % 2 == 0 ? 1.0 : -1.0;
    if (std::abs(val - sign * std::conj(mirror)) > 1e-10 * std::max(1.0, std::abs(val)) &&
        std::abs(val - sign * std::conj(mirror)) > tol * 100)
      throw HermiticityViolation("po_from_density: components violate the conjugation rule");
  }
  return v;
}

Matrix po_to_density(const PolarizationBloch& v, const PolarizationBasis& basis) {
  if (v.n != basis.n) throw DimensionMismatch("po_to_density: dimension mismatch");
  Matrix rho = Matrix::Identity(basis.n, basis.n) / static_cast<double>(basis.n);
  for (const auto& [lm, val] : v.components) rho += val * basis.at(lm.first, lm.second);
  return rho;
}

bool po_physicality(const PolarizationBloch& v, const PolarizationBasis& basis, double eps,
                    CharCoeffs* coeffs) {
  Matrix rho = po_to_density(v, basis);
  rho = (rho + Matrix(rho.adjoint())) / 2.0;
  CharCoeffs c = char_coeffs_newton(rho);
  if (coeffs) *coeffs = c;
  return c.nonnegative(eps);
}

}  // namespace qdm
