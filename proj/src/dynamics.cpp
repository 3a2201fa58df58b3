#include "qdm/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qdm {

HamiltonianBloch hamiltonian_bloch(const Matrix& H, const BasisSet& basis, double tol) {
  if (H.rows() != basis.n || H.cols() != basis.n)
    throw DimensionMismatch("hamiltonian_bloch: dimension mismatch");
  if (!is_hermitian(H, tol)) throw NotHermitian("hamiltonian_bloch: input not Hermitian");
  HamiltonianBloch h;
  h.n = basis.n;
  h.basis = basis.ordering;
  h.h0 = H.trace().real();
  h.h.resize(basis.count());
  for (int j = 0; j < basis.count(); ++j) h.h(j) = (basis.generators[j] * H).trace().real();
  return h;
}

BlochVector bloch_rhs(const HamiltonianBloch& h, const BlochVector& v, const BasisSet& basis) {
  if (h.n != basis.n || v.n != basis.n || h.basis != basis.ordering ||
      v.basis != basis.ordering)
    throw BasisMismatch("bloch_rhs: Hamiltonian, state and basis disagree");
  BlochVector out;
  out.n = basis.n;
  out.basis = basis.ordering;
  out.components = RealVector::Zero(basis.count());
  for (const auto& t : basis.f.expanded())
    out.components(t.i) += t.v * h.h(t.j) * v.components(t.k);
  return out;
}

double ThreeLevelModel::epsilon(double t) const {
  return omega0(t) * std::sqrt(a * a + b * b);
}

Matrix three_level_hamiltonian(const ThreeLevelModel& m, double t) {
  double w = m.omega0 ? m.omega0(t) : 0.0;
  Matrix H = Matrix::Zero(3, 3);
  H(0, 1) = H(1, 0) = -m.a * w;  // -Omega_12/2
  H(1, 2) = H(2, 1) = -m.b * w;  // -Omega_23/2
  H(1, 1) = -m.delta;
  return H;
}

Eigen::MatrixXd coupling_matrix(const ThreeLevelModel& m, double t) {
  double w = m.omega0 ? m.omega0(t) : 0.0;
  double aw = m.a * w, bw = m.b * w, d = m.delta, s3 = std::sqrt(3.0);
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(8, 8);
  auto set = [&](int i, int j, double val) {
    V(i - 1, j - 1) = val;
    V(j - 1, i - 1) = -val;
  };
  set(1, 4, -d);
  set(1, 5, -bw);
  set(2, 4, -bw);
  set(2, 6, aw);
  set(3, 5, aw);
  set(3, 6, d);
  set(4, 7, 2 * aw);
  set(6, 7, -bw);
  set(6, 8, s3 * bw);
  return V;
}

Eigen::MatrixXd basis_change_B(double a, double b) {
  double r2 = a * a + b * b;
  if (r2 <= 0.0) throw DegenerateAmplitudes("basis_change_B: need a^2 + b^2 > 0");
  double r = std::sqrt(r2);
  double s3 = std::sqrt(3.0);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(8, 8);
  B(0, 0) = a;
  B(0, 2) = b;
  B(1, 3) = a;
  B(1, 5) = -b;
  B(2, 1) = a * b / r;
  B(2, 6) = (2 * a * a + b * b) / (2 * r);
  B(2, 7) = -s3 * b * b / (2 * r);
  B(3, 4) = -r;  // so the full row is (0,0,0,0,-1,0,0,0) after the 1/r prefactor
  B(4, 0) = b;
  B(4, 2) = -a;
  B(5, 3) = -b;
  B(5, 5) = -a;
  B(6, 1) = (-a * a + b * b) / r;
  B(6, 6) = a * b / r;
  B(6, 7) = s3 * a * b / r;
  B(7, 1) = -s3 * a * b / r;
  B(7, 6) = s3 * b * b / (2 * r);
  B(7, 7) = (-2 * a * a + b * b) / (2 * r);
  return B / r;
}

BlockDecomposition block_decompose(const ThreeLevelModel& m, double t) {
  Eigen::MatrixXd B = basis_change_B(m.a, m.b);
  Eigen::MatrixXd Vp = B * coupling_matrix(m, t) * B.transpose();
  BlockDecomposition out;
  out.v3 = Vp.block(0, 0, 3, 3);
  out.v4 = Vp.block(3, 3, 4, 4);
  out.v1 = Vp(7, 7);
  return out;
}

Trajectory integrate(const BlochVector& v0,
                     const std::function<HamiltonianBloch(double)>& h, const BasisSet& basis,
                     double T, double dt) {
  if (!is_physical(v0, basis, kPhysicalityTol))
    throw NonPhysicalInitialState("integrate: initial state is not physical");
  if (dt <= 0.0) throw StepTooLarge("integrate: dt must be positive");
  const double norm0 = v0.components.norm();

  auto rhs = [&](double t, const RealVector& y) {
    BlochVector v = v0;
    v.components = y;
    return bloch_rhs(h(t), v, basis).components;
  };

  Trajectory traj;
  RealVector y = v0.components;
  double t = 0.0;
  const auto record = [&](double time, const RealVector& state) {
    BlochVector v = v0;
    v.components = state;
    traj.times.push_back(time);
    traj.states.push_back(v);
    traj.tr2.push_back(trace_invariant(v, basis, 2));
    traj.tr3.push_back(trace_invariant(v, basis, 3));
  };
  record(t, y);
  const long steps = static_cast<long>(std::llround(T / dt));
  for (long k = 0; k < steps; ++k) {
    RealVector k1 = rhs(t, y);
    RealVector k2 = rhs(t + dt / 2, y + dt / 2 * k1);
    RealVector k3 = rhs(t + dt / 2, y + dt / 2 * k2);
    RealVector k4 = rhs(t + dt, y + dt * k3);
    y += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    t = (k + 1) * dt;
    if (std::abs(y.norm() - norm0) > 1e-4)
      throw StepTooLarge("integrate: |lambda| drifted beyond 1e-4; reduce dt");
    record(t, y);
  }
  return traj;
}

ConservedLengths conserved_lengths(const BlochVector& v, const ThreeLevelModel& m) {
  if (v.n != 3 || v.basis != BasisOrdering::PaperGellMann3)
    throw ModelMismatch("conserved_lengths: state must be n=3 in paper-gellmann3 ordering");
  Eigen::MatrixXd B = basis_change_B(m.a, m.b);
  RealVector lp = B * v.components;
  ConservedLengths out;
  out.l3 = lp.segment(0, 3).norm();
  out.l4 = lp.segment(3, 4).norm();
  out.l1 = std::abs(lp(7));
  return out;
}

std::vector<ConservedLengths> conserved_lengths(const Trajectory& traj,
                                                const ThreeLevelModel& m) {
  std::vector<ConservedLengths> out;
  out.reserve(traj.states.size());
  for (const auto& v : traj.states) out.push_back(conserved_lengths(v, m));
  return out;
}

std::string Trajectory::to_csv(const ThreeLevelModel* model) const {
  std::ostringstream os;
  os.precision(15);
  os << "t";
  const int dim = states.empty() ? 0 : static_cast<int>(states[0].components.size());
  for (int j = 1; j <= dim; ++j) os << ",lambda" << j;
  os << ",tr_rho2,tr_rho3";
  if (model) os << ",len_L3,len_L4,len_L1";
  os << "\n";
  for (size_t i = 0; i < times.size(); ++i) {
    os << times[i];
    for (int j = 0; j < dim; ++j) os << "," << states[i].components(j);
    os << "," << tr2[i] << "," << tr3[i];
    if (model) {
      auto cl = conserved_lengths(states[i], *model);
      os << "," << cl.l3 << "," << cl.l4 << "," << cl.l1;
    }
    os << "\n";
  }
  return os.str();
}

std::string Trajectory::to_json(const ThreeLevelModel* model) const {
  nlohmann::json j;
  j["t"] = times;
  auto rows = nlohmann::json::array();
  for (const auto& s : states) {
    std::vector<double> c(s.components.data(), s.components.data() + s.components.size());
    rows.push_back(c);
  }
  j["lambda"] = std::move(rows);
  j["tr_rho2"] = tr2;
  j["tr_rho3"] = tr3;
  if (model) {
    std::vector<double> l3, l4, l1;
    for (const auto& s : states) {
      auto cl = conserved_lengths(s, *model);
      l3.push_back(cl.l3);
      l4.push_back(cl.l4);
      l1.push_back(cl.l1);
    }
    j["len_L3"] = l3;
    j["len_L4"] = l4;
    j["len_L1"] = l1;
  }
  return j.dump();
}

}  // namespace qdm
