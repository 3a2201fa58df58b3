#include "qdm/jarlskog.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace qdm {

namespace {
void check_unit(const ComplexVector& z, double tol = 1e-12) {
  if (std::abs(z.norm() - 1.0) > 1e-6)
    throw NotUnitVector("z must be a unit vector");
  (void)tol;
}
}  // namespace

void JarlskogParams::validate() const {
  if (n < 2) throw InvalidParams("JarlskogParams: n must be >= 2");
  if (eigenvalues.size() != n) throw InvalidParams("JarlskogParams: need n eigenvalues");
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    if (eigenvalues(i) < -1e-12) throw InvalidParams("JarlskogParams: negative eigenvalue");
    if (i > 0 && eigenvalues(i) > eigenvalues(i - 1) + 1e-12)
      throw InvalidParams("JarlskogParams: eigenvalues must be sorted descending");
    sum += eigenvalues(i);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidParams("JarlskogParams: eigenvalues must sum to 1");
  if (static_cast<int>(levels.size()) != n - 1)
    throw InvalidParams("JarlskogParams: need n-1 levels (j = 2..n)");
  for (int j = 2; j <= n; ++j) {
    const auto& lvl = levels[j - 2];
    if (lvl.theta < -1e-12 || lvl.theta > M_PI / 2 + 1e-12)
      throw InvalidParams("JarlskogParams: theta_j outside [0, pi/2]");
    if (lvl.z.size() != j - 1)
      throw InvalidParams("JarlskogParams: z_j must live in C^{j-1}");
    check_unit(lvl.z);
  }
  if (phases) {
    if (phases->size() != n) throw InvalidParams("JarlskogParams: need n phases");
    if (std::abs(phases->sum()) > 1e-9)
      throw InvalidParams("JarlskogParams: phases must sum to 0");
  }
}

Matrix v_matrix(int j, double theta, const ComplexVector& z) {
  if (j < 2) throw IndexOutOfRange("v_matrix: j must be >= 2");
  if (z.size() != j - 1) throw DimensionMismatch("v_matrix: z must have j-1 components");
  check_unit(z);
  ComplexVector zn = z / z.norm();
  double c = std::cos(theta), s = std::sin(theta);
  Matrix v = Matrix::Identity(j, j);
  v.topLeftCorner(j - 1, j - 1) -= (1.0 - c) * (zn * zn.adjoint());
  v.topRightCorner(j - 1, 1) = s * zn;
  v.bottomLeftCorner(1, j - 1) = -s * zn.adjoint();
  v(j - 1, j - 1) = c;
  return v;
}

Matrix a_matrix(int n, int j, double theta, const ComplexVector& z) {
  if (j < 2 || j > n) throw IndexOutOfRange("a_matrix: need 2 <= j <= n");
  Matrix a = Matrix::Identity(n, n);
  a.topLeftCorner(j, j) = v_matrix(j, theta, z);
  return a;
}

Matrix phase_matrix(const RealVector& alpha) {
  Matrix d = Matrix::Zero(alpha.size(), alpha.size());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) d(i, i) = std::exp(cxd(0, alpha(i)));
  return d;
}

Matrix su_from_params(const JarlskogParams& p) {
  p.validate();
  Matrix u = p.phases ? phase_matrix(*p.phases) : Matrix::Identity(p.n, p.n);
  for (int j = 2; j <= p.n; ++j)
    u = u * a_matrix(p.n, j, p.levels[j - 2].theta, p.levels[j - 2].z);
  return u;
}

Matrix density_from_params(const JarlskogParams& p) {
  p.validate();
  Matrix d = Matrix::Zero(p.n, p.n);
  for (int i = 0; i < p.n; ++i) d(i, i) = p.eigenvalues(i);
  // Phases commute with D and cancel; build the phase-free product.
  Matrix u = Matrix::Identity(p.n, p.n);
  for (int j = 2; j <= p.n; ++j)
    u = u * a_matrix(p.n, j, p.levels[j - 2].theta, p.levels[j - 2].z);
  return u.adjoint() * d * u;
}

Matrix recursive_embed(const Matrix& rho_low, double lambda_new, double theta,
                       const ComplexVector& z, double tol) {
  const int n = static_cast<int>(rho_low.rows()) + 1;
  if (std::abs(rho_low.trace().real() + lambda_new - 1.0) > tol)
    throw TraceMismatch("recursive_embed: Tr rho_low + lambda_new must be 1");
  Matrix block = Matrix::Zero(n, n);
  block.topLeftCorner(n - 1, n - 1) = rho_low;
  block(n - 1, n - 1) = lambda_new;
  Matrix a = a_matrix(n, n, theta, z);
  return a.adjoint() * block * a;
}

JarlskogParams sample(int n, std::mt19937_64 rng) {
  JarlskogParams p;
  p.n = n;
  // Uniform on the simplex: normalized Exp(1) draws, then sort descending.
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> ev(n);
  double sum = 0.0;
  for (auto& e : ev) {
    e = expo(rng);
    sum += e;
  }
  for (auto& e : ev) e /= sum;
  std::sort(ev.begin(), ev.end(), std::greater<>());
  p.eigenvalues = Eigen::Map<const RealVector>(ev.data(), n);

  std::uniform_real_distribution<double> uni(0.0, M_PI / 2);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int j = 2; j <= n; ++j) {
    JarlskogLevel lvl;
    lvl.theta = uni(rng);
    lvl.z.resize(j - 1);
    do {
      for (int i = 0; i < j - 1; ++i) lvl.z(i) = cxd(gauss(rng), gauss(rng));
    } while (lvl.z.norm() < 1e-8);
    lvl.z /= lvl.z.norm();
    p.levels.push_back(std::move(lvl));
  }
  return p;
}

JarlskogParams sample(int n, std::uint64_t seed) {
  return sample(n, std::mt19937_64(seed));
}

ExtractionResult extract_params(const Matrix& u, double tol) {
  const int n = static_cast<int>(u.rows());
  if (n < 2 || u.cols() != n) throw DimensionMismatch("extract_params: need square n >= 2");
  ExtractionResult out;
  out.levels.resize(n - 1);
  Matrix cur = u;
  for (int j = n; j >= 2; --j) {
    cxd cnn = cur(j - 1, j - 1);
    if (std::abs(cnn.imag()) > 1e-8 || cnn.real() < -1e-8 || cnn.real() > 1 + 1e-8)
      throw InvalidParams("extract_params: matrix is not in the canonical product form");
    double c = std::clamp(cnn.real(), 0.0, 1.0);
    double theta = std::acos(c);
    double s = std::sin(theta);
    JarlskogLevel lvl;
    lvl.theta = theta;
    lvl.z = ComplexVector::Zero(j - 1);
    if (s > tol) {
      for (int i = 0; i < j - 1; ++i) lvl.z(i) = -std::conj(cur(j - 1, i)) / s;
      lvl.z /= lvl.z.norm();
    } else {
      lvl.z(0) = 1.0;  // canonical representative at the theta = 0 singularity
      out.canonical = false;
    }
    Matrix a = a_matrix(j, j, lvl.theta, lvl.z);
    cur = Matrix(cur.topLeftCorner(j, j)) * a.adjoint();
    cur.conservativeResize(j - 1, j - 1);
    out.levels[j - 2] = std::move(lvl);
  }
  return out;
}

CommutantStructure commutant_structure(const RealVector& eigenvalues, double degeneracy_tol) {
  CommutantStructure out;
  const int n = static_cast<int>(eigenvalues.size());
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && std::abs(eigenvalues(j + 1) - eigenvalues(i)) <= degeneracy_tol) ++j;
    int m = j - i + 1;
    out.multiplicities.push_back({eigenvalues(i), m});
    out.block_sizes.push_back(m);
    out.real_dimension += m * m;
    i = j + 1;
  }
  out.real_dimension -= 1;
  return out;
}

std::string JarlskogParams::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["eigenvalues"] = std::vector<double>(eigenvalues.data(), eigenvalues.data() + n);
  auto lv = nlohmann::json::array();
  for (const auto& lvl : levels) {
    nlohmann::json e;
    e["theta"] = lvl.theta;
    auto zz = nlohmann::json::array();
    for (Eigen::Index i = 0; i < lvl.z.size(); ++i)
      zz.push_back({lvl.z(i).real(), lvl.z(i).imag()});
    e["z"] = std::move(zz);
    lv.push_back(std::move(e));
  }
  j["levels"] = std::move(lv);
  if (phases)
    j["phases"] = std::vector<double>(phases->data(), phases->data() + phases->size());
  return j.dump();
}

JarlskogParams JarlskogParams::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  JarlskogParams p;
  p.n = j.at("n").get<int>();
  auto ev = j.at("eigenvalues").get<std::vector<double>>();
  p.eigenvalues = Eigen::Map<const RealVector>(ev.data(), ev.size());
  for (const auto& e : j.at("levels")) {
    JarlskogLevel lvl;
    lvl.theta = e.at("theta").get<double>();
    const auto& zz = e.at("z");
    lvl.z.resize(zz.size());
    for (size_t i = 0; i < zz.size(); ++i)
      lvl.z(i) = cxd(zz.at(i).at(0).get<double>(), zz.at(i).at(1).get<double>());
    p.levels.push_back(std::move(lvl));
  }
  if (j.contains("phases")) {
    auto ph = j.at("phases").get<std::vector<double>>();
    p.phases = Eigen::Map<const RealVector>(ph.data(), ph.size());
  }
  p.validate();
  return p;
}

}  // namespace qdm
