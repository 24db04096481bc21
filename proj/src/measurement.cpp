#include "qlogic/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/random.hpp"
#include "qlogic/relations.hpp"

namespace qlogic {

namespace {

std::vector<double> merged_values(std::vector<double> a, const std::vector<double>& b, double snap) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  std::vector<double> out;
  for (double v : a)
    if (out.empty() || v - out.back() > snap) out.push_back(v);
  return out;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

void require_system(const MeasuringProcess& mp, const Observable& a, const DensityState& rho, const char* what) {
  if (a.dim() != mp.dim_h || rho.dim() != mp.dim_h) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": system dimension is " +
                                                  std::to_string(mp.dim_h) + ", observable " +
                                                  std::to_string(a.dim()) + ", state " + std::to_string(rho.dim()));
  }
}

double snap_for(const Observable& a, const POVM& povm, const Tolerance& tol) {
  double largest = 1.0;
  for (double v : povm.outcomes) largest = std::max(largest, std::abs(v));
  return std::max(a.snap_tolerance(tol), tol.cluster_tol * largest);
}

}  // namespace

CMatrix POVM::element(double outcome, double snap) const {
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (std::abs(outcomes[i] - outcome) <= snap) return elements[i];
  return CMatrix::Zero(dim(), dim());
}

void POVM::validate(const Tolerance& tol) const {
  if (outcomes.empty() || outcomes.size() != elements.size()) {
    throw Error(ErrorKind::NotAPOVM, "POVM needs one element per outcome and at least one outcome");
  }
  const Index n = dim();
  CMatrix sum = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const CMatrix& e = elements[i];
    if (e.rows() != n || e.cols() != n) throw Error(ErrorKind::NotAPOVM, "POVM elements differ in dimension");
    if (!is_hermitian(e, tol)) throw Error(ErrorKind::NotAPOVM, "POVM element " + std::to_string(i) + " is not Hermitian");
    const double low = hermitian_eig(hermitian_part(e), tol).values.minCoeff();
    if (low < -tol.assert_tol) {
      throw Error(ErrorKind::NotAPOVM, "POVM element " + std::to_string(i) + " has eigenvalue " + std::to_string(low));
    }
    sum += e;
    for (std::size_t j = 0; j < i; ++j) {
      if (outcomes[i] == outcomes[j]) throw Error(ErrorKind::NotAPOVM, "POVM outcomes repeat");
    }
  }
  const double off = (sum - CMatrix::Identity(n, n)).norm();
  if (off > tol.assert_tol) throw Error(ErrorKind::NotAPOVM, "POVM elements sum to the identity only within " + std::to_string(off));
}

void MeasuringProcess::validate(const Tolerance& tol) const {
  const Index n = dim_h * dim_k();
  if (dim_h <= 0 || u.rows() != n || u.cols() != n || meter.dim() != dim_k()) {
    throw Error(ErrorKind::DimensionMismatch, "measuring process: H has dimension " + std::to_string(dim_h) +
                                                  ", K " + std::to_string(dim_k()) + ", U is " +
                                                  std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                                                  ", meter " + std::to_string(meter.dim()));
  }
  if (!is_unitary(u, tol)) throw Error(ErrorKind::NotUnitary, "measuring process: interaction is not unitary");
  if (system_algebra && system_algebra->dim() != dim_h) {
    throw Error(ErrorKind::DimensionMismatch, "measuring process: system algebra has the wrong dimension");
  }
}

Observable meter_after(const MeasuringProcess& mp, const Tolerance& tol) {
  mp.validate(tol);
  return heisenberg(embed_second(mp.meter, mp.dim_h), mp.u, tol);
}

POVM povm_of_process(const MeasuringProcess& mp, const Tolerance& tol) {
  const Observable mt = meter_after(mp, tol);
  const CMatrix ones = kron(CMatrix::Identity(mp.dim_h, mp.dim_h), mp.sigma.matrix());
  POVM out;
  for (std::size_t k = 0; k < mt.size(); ++k) {
    out.outcomes.push_back(mt.spectrum()[k]);
    out.elements.push_back(hermitian_part(partial_trace_second(mt.projectors()[k].matrix() * ones, mp.dim_h, mp.dim_k())));
  }
  out.validate(tol);
  if (mp.system_algebra) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!contains(*mp.system_algebra, out.elements[k], tol)) {
        throw Error(ErrorKind::ValidationError,
                    "POVM element for outcome " + std::to_string(out.outcomes[k]) + " leaves the system algebra");
      }
    }
  }
  return out;
}

std::vector<OutcomeProbability> output_distribution(const MeasuringProcess& mp, const DensityState& rho,
                                                    const Tolerance& tol) {
  if (rho.dim() != mp.dim_h) throw Error(ErrorKind::DimensionMismatch, "output_distribution: state dimension");
  const Observable mt = meter_after(mp, tol);
  const POVM povm = povm_of_process(mp, tol);
  const CMatrix joint = kron(rho.matrix(), mp.sigma.matrix());
  std::vector<OutcomeProbability> out;
  for (std::size_t k = 0; k < mt.size(); ++k) {
    const double direct = (mt.projectors()[k].matrix() * joint).trace().real();
    const double reduced = (povm.elements[k] * rho.matrix()).trace().real();
    if (std::abs(direct - reduced) > kOutputRouteTol) {
      throw Error(ErrorKind::CrossCheckFailure, "output distribution routes differ by " +
                                                    std::to_string(std::abs(direct - reduced)));
    }
    out.push_back({mt.spectrum()[k], std::clamp(direct, 0.0, 1.0)});
  }
  return out;
}

namespace {

double measures_residual(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                         const Tolerance& tol) {
  require_system(mp, a, rho, "measures_in_state");
  const Projector eq = equality_projector(embed_first(a, mp.dim_k()), meter_after(mp, tol), tol);
  const DensityState joint = tensor(rho, mp.sigma);
  return (eq.matrix() * joint.matrix() - joint.matrix()).norm();
}

double weak_residual(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                     const Tolerance& tol) {
  require_system(mp, a, rho, "weakly_measures");
  const POVM povm = povm_of_process(mp, tol);
  const double snap = snap_for(a, povm, tol);
  const std::vector<double> values = merged_values(a.spectrum(), povm.outcomes, snap);
  double worst = 0.0;
  for (double d : values) {
    const CMatrix pi = povm.element(d, snap);
    for (double g : values) {
      const cplx lhs = (pi * point_projector(a, g, tol).matrix() * rho.matrix()).trace();
      const double rhs = d == g ? (point_projector(a, d, tol).matrix() * rho.matrix()).trace().real() : 0.0;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double bsf_residual(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                    const Tolerance& tol) {
  require_system(mp, a, rho, "satisfies_bsf");
  const POVM povm = povm_of_process(mp, tol);
  const double snap = snap_for(a, povm, tol);
  const Observable one[] = {a};
  const CMatrix b = cyclic_projector(one, rho, tol).basis();
  // Agreement of <psi, . psi> for all psi in the subspace is, by
  // polarization, agreement of the compressions.
  double worst = 0.0;
  for (double l : merged_values(a.spectrum(), povm.outcomes, snap)) {
    worst = std::max(worst, (b.adjoint() * (povm.element(l, snap) - point_projector(a, l, tol).matrix()) * b).norm());
  }
  return worst;
}

}  // namespace

bool measures_in_state(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                       const Tolerance& tol) {
  return measures_residual(mp, a, rho, tol) <= tol.assert_tol;
}

bool weakly_measures(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                     const Tolerance& tol) {
  return weak_residual(mp, a, rho, tol) <= tol.assert_tol;
}

bool satisfies_bsf(const MeasuringProcess& mp, const Observable& a, const DensityState& rho, const Tolerance& tol) {
  return bsf_residual(mp, a, rho, tol) <= tol.assert_tol;
}

Report mob_battery(const MeasuringProcess& mp, const Observable& a, const DensityState& rho, const Tolerance& tol) {
  Report r;
  r.title = "measurement of " + a.name();
  const double m = measures_residual(mp, a, rho, tol);
  const double w = weak_residual(mp, a, rho, tol);
  const double b = bsf_residual(mp, a, rho, tol);
  r.add("measures A in rho", m <= tol.assert_tol, m);
  r.add("weakly measures A in rho", w <= tol.assert_tol, w);
  r.add("satisfies the Born formula on C(A;rho)", b <= tol.assert_tol, b);
  if (!r.coherent()) throw InconsistentBattery(r);
  return r;
}

std::vector<DensityState> state_sample(Index dim, Rng& rng, int mixtures) {
  std::vector<DensityState> out;
  const double h = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < dim; ++i) out.push_back(DensityState::pure(CVector::Unit(dim, i)));
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j) {
      CVector v = CVector::Zero(dim);
      v(i) = h;
      v(j) = h;
      out.push_back(DensityState::pure(v));
      v(j) = cplx(0.0, h);
      out.push_back(DensityState::pure(v));
    }
  }
  for (int k = 0; k < mixtures; ++k) out.push_back(random_state(rng, dim));
  out.push_back(DensityState::maximally_mixed(dim));
  return out;
}

Report global_measurement_check(const MeasuringProcess& mp, const Observable& a,
                                std::span<const DensityState> sample, const Tolerance& tol) {
  std::size_t failing = 0;
  for (const DensityState& rho : sample)
    if (!measures_in_state(mp, a, rho, tol)) ++failing;
  const POVM povm = povm_of_process(mp, tol);
  const double snap = snap_for(a, povm, tol);
  double gap = 0.0;
  for (double l : merged_values(a.spectrum(), povm.outcomes, snap))
    gap = std::max(gap, (povm.element(l, snap) - point_projector(a, l, tol).matrix()).norm());
  Report r;
  r.title = "global measurement of " + a.name();
  r.add("measures A in every sampled state", failing == 0, static_cast<double>(failing),
        std::to_string(sample.size()) + " states");
  r.add("Pi = E^A", gap <= tol.assert_tol, gap);
  if (!r.coherent()) throw InconsistentBattery(r);
  return r;
}

MeasuringProcess naimark_process(const POVM& povm, const Tolerance& tol) {
  povm.validate(tol);
  const Index n = povm.dim();
  const Index m = static_cast<Index>(povm.size());
  const Index big = n * m;
  // V psi = sum_k (sqrt(Pi_k) psi) (x) e_k, stored at index h * m + k.
  CMatrix v = CMatrix::Zero(big, n);
  for (Index k = 0; k < m; ++k) {
    const CMatrix root = psd_sqrt(hermitian_part(povm.elements[static_cast<std::size_t>(k)]), tol);
    for (Index i = 0; i < n; ++i) v(Eigen::seqN(i * m + k, 1), Eigen::all) = root.row(i);
  }
  // Extend V to an orthonormal basis: repeatedly adjoin the standard basis
  // vector with the largest residual, lowest index on ties.
  CMatrix q = v;
  std::vector<CVector> extra;
  while (q.cols() < big) {
    Index best = -1;
    double best_norm = -1.0;
    CVector best_r;
    for (Index j = 0; j < big; ++j) {
      CVector r = CVector::Unit(big, j);
      r -= q * (q.adjoint() * r);
      r -= q * (q.adjoint() * r);
      const double nr = r.norm();
      if (nr > best_norm + 1e-12) {
        best = j;
        best_norm = nr;
        best_r = r;
      }
    }
    if (best < 0 || best_norm < 1e-6) throw Error(ErrorKind::NotAPOVM, "dilation: isometry has no completion");
    best_r /= best_norm;
    q.conservativeResize(Eigen::NoChange, q.cols() + 1);
    q.col(q.cols() - 1) = best_r;
    extra.push_back(best_r);
  }
  CMatrix u(big, big);
  std::size_t next = 0;
  for (Index h = 0; h < n; ++h) {
    u.col(h * m) = v.col(h);
    for (Index k = 1; k < m; ++k) u.col(h * m + k) = extra[next++];
  }

  std::vector<Projector> marks;
  for (Index k = 0; k < m; ++k) marks.push_back(Projector::from_orthonormal_basis(CVector::Unit(m, k)));
  MeasuringProcess mp;
  mp.dim_h = n;
  mp.sigma = DensityState::pure(CVector::Unit(m, 0));
  mp.u = std::move(u);
  mp.meter = Observable::from_spectral_data("M", povm.outcomes, std::move(marks), tol);

  const POVM back = povm_of_process(mp, tol);
  double gap = 0.0;
  for (std::size_t k = 0; k < povm.size(); ++k) gap = std::max(gap, (back.element(povm.outcomes[k]) - povm.elements[k]).norm());
  if (gap > tol.assert_tol) throw Error(ErrorKind::CrossCheckFailure, "dilation round trip off by " + std::to_string(gap));
  return mp;
}

MeasuringProcess with_meter_function(const MeasuringProcess& mp, const SpectralFunction& f, std::string name,
                                     const Tolerance& tol) {
  MeasuringProcess out = mp;
  out.meter = map_observable(mp.meter, f, std::move(name), tol);
  return out;
}

namespace {

// The observable XG as an operator on H: E^X(l) G at each l, plus 1 - G
// at 0.
Observable compressed_observable(const Observable& x, const Projector& g, const Tolerance& tol) {
  std::vector<double> values;
  std::vector<Projector> ps;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const CMatrix e = hermitian_part(x.projectors()[i].matrix() * g.matrix());
    if (e.norm() <= tol.assert_tol) continue;
    values.push_back(x.spectrum()[i]);
    ps.push_back(Projector::from_matrix(e, tol));
  }
  if (!g.is_identity()) {
    values.push_back(0.0);
    ps.push_back(ortho(g));
  }
  return Observable::from_spectral_data(x.name() + "G", std::move(values), std::move(ps), tol);
}

double marginal_gap(const POVM& marginal, const Observable& x, const Projector& on, const Tolerance& tol) {
  const double snap = snap_for(x, marginal, tol);
  double worst = 0.0;
  for (double l : merged_values(x.spectrum(), marginal.outcomes, snap))
    worst = std::max(worst, ((marginal.element(l, snap) - point_projector(x, l, tol).matrix()) * on.matrix()).norm());
  return worst;
}

}  // namespace

SimultaneousMeasurement simultaneous_measurability(const Observable& a, const Observable& b,
                                                   const DensityState& rho, const Tolerance& tol) {
  SimultaneousMeasurement out;
  Report& r = out.report;
  r.title = "simultaneous measurability of " + a.name() + " and " + b.name();
  const Observable pair[] = {a, b};
  const bool determinate = simultaneously_determinate(pair, rho, tol);
  r.add("simultaneously determinate", determinate);
  if (!determinate) {
    r.notes.push_back("no witness: the construction needs simultaneous determinateness, whose failure does not "
                      "rule out simultaneous measurability");
    return out;
  }

  const Projector g = com_observables(pair, tol);
  const Observable ag = compressed_observable(a, g, tol);
  const Observable bg = compressed_observable(b, g, tol);
  const std::size_t stride = bg.size();
  POVM joint;
  POVM fa, gb;
  fa.outcomes = ag.spectrum();
  fa.elements.assign(ag.size(), CMatrix::Zero(a.dim(), a.dim()));
  gb.outcomes = bg.spectrum();
  gb.elements.assign(bg.size(), CMatrix::Zero(a.dim(), a.dim()));
  std::map<long, std::pair<double, double>> table;
  for (std::size_t i = 0; i < ag.size(); ++i) {
    for (std::size_t j = 0; j < bg.size(); ++j) {
      const CMatrix e = hermitian_part(ag.projectors()[i].matrix() * bg.projectors()[j].matrix());
      fa.elements[i] += e;
      gb.elements[j] += e;
      if (e.norm() <= tol.assert_tol) continue;
      const long code = static_cast<long>(i * stride + j);
      joint.outcomes.push_back(static_cast<double>(code));
      joint.elements.push_back(e);
      table[code] = {ag.spectrum()[i], bg.spectrum()[j]};
      out.decode.emplace_back(ag.spectrum()[i], bg.spectrum()[j]);
    }
  }
  joint.validate(tol);
  fa.validate(tol);
  gb.validate(tol);

  const Observable one_a[] = {a};
  const Observable one_b[] = {b};
  const Projector ca = cyclic_projector(one_a, rho, tol);
  const Projector cb = cyclic_projector(one_b, rho, tol);
  const Projector cab = cyclic_projector(pair, rho, tol);
  const double ga = marginal_gap(fa, a, ca, tol);
  const double gbv = marginal_gap(gb, b, cb, tol);
  const double gab = std::max(marginal_gap(fa, a, cab, tol), marginal_gap(gb, b, cab, tol));
  r.add("Pi(D x R) = E^A(D) on C(A;rho)", ga <= tol.assert_tol, ga);
  r.add("Pi(R x G) = E^B(G) on C(B;rho)", gbv <= tol.assert_tol, gbv);
  r.add("both marginals on C(A,B;rho)", gab <= tol.assert_tol, gab);

  MeasuringProcess mp = naimark_process(joint, tol);
  auto decoder = [&table](bool first) {
    return [table, first](double code) -> std::optional<double> {
      auto it = table.find(std::lround(code));
      if (it == table.end()) return std::nullopt;
      return first ? it->second.first : it->second.second;
    };
  };
  const MeasuringProcess mf = with_meter_function(mp, decoder(true), "f(M)", tol);
  const MeasuringProcess mg = with_meter_function(mp, decoder(false), "g(M)", tol);
  r.add("f-marginal process measures A", measures_in_state(mf, a, rho, tol));
  r.add("g-marginal process measures B", measures_in_state(mg, b, rho, tol));
  out.joint = std::move(joint);
  out.witness = std::move(mp);
  return out;
}

}  // namespace qlogic
