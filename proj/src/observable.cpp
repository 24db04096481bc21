#include "qlogic/observable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"

namespace qlogic {

Observable Observable::decompose(std::string name, const CMatrix& m, const Tolerance& tol) {
  const EigenSystem eig = hermitian_eig(m, tol);
  Observable x;
  x.name_ = std::move(name);
  const Index n = m.rows();
  for (const auto& [first, last] : cluster_ranges(eig.values, tol)) {
    x.spectrum_.push_back(eig.values.segment(first, last - first).mean());
    x.projectors_.push_back(Projector::from_orthonormal_basis(eig.vectors.middleCols(first, last - first)));
  }
  x.matrix_ = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < x.spectrum_.size(); ++i) x.matrix_ += x.spectrum_[i] * x.projectors_[i].matrix();
  return x;
}

Observable Observable::from_spectral_data(std::string name, std::vector<double> values,
                                          std::vector<Projector> projectors, const Tolerance& tol) {
  if (values.size() != projectors.size() || values.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "spectral data: need one projector per value");
  }
  const Index n = projectors.front().dim();
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  Observable x;
  x.name_ = std::move(name);
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  CMatrix total = CMatrix::Zero(n, n);
  for (std::size_t k : order) {
    const Projector& p = projectors[k];
    if (p.dim() != n) throw Error(ErrorKind::DimensionMismatch, "spectral data: mixed dimensions");
    total += p.matrix();
    if (p.is_zero()) continue;
    if (!x.spectrum_.empty() && values[k] - x.spectrum_.back() <= tol.cluster_tol * scale) {
      x.projectors_.back() = join(x.projectors_.back(), p, tol);
    } else {
      x.spectrum_.push_back(values[k]);
      x.projectors_.push_back(p);
    }
  }
  if ((total - CMatrix::Identity(n, n)).norm() > tol.assert_tol) {
    throw Error(ErrorKind::ValidationError,
                "spectral data: projectors are not orthogonal or do not sum to the identity");
  }
  x.matrix_ = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < x.spectrum_.size(); ++i) x.matrix_ += x.spectrum_[i] * x.projectors_[i].matrix();
  return x;
}

double Observable::snap_tolerance(const Tolerance& tol) const {
  double scale = 1.0;
  for (double v : spectrum_) scale = std::max(scale, std::abs(v));
  return tol.cluster_tol * scale;
}

std::optional<std::size_t> Observable::index_of(double value, const Tolerance& tol) const {
  const double snap = snap_tolerance(tol);
  for (std::size_t i = 0; i < spectrum_.size(); ++i)
    if (std::abs(spectrum_[i] - value) <= snap) return i;
  return std::nullopt;
}

Observable Observable::renamed(std::string name) const {
  Observable x = *this;
  x.name_ = std::move(name);
  return x;
}

namespace {

Projector sum_of(const Observable& x, const std::vector<std::size_t>& indices) {
  if (indices.empty()) return Projector::zero(x.dim());
  if (indices.size() == x.size()) return Projector::identity(x.dim());
  Index total = 0;
  for (std::size_t i : indices) total += x.projectors()[i].rank();
  CMatrix cols(x.dim(), total);
  Index at = 0;
  for (std::size_t i : indices) {
    const Projector& p = x.projectors()[i];
    cols.middleCols(at, p.rank()) = p.basis();
    at += p.rank();
  }
  return Projector::from_orthonormal_basis(cols);
}

}  // namespace

Projector spectral_projector(const Observable& x, const BorelSet& d, const Tolerance& tol) {
  const double snap = x.snap_tolerance(tol);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (d.contains(x.spectrum()[i], snap)) picked.push_back(i);
  return sum_of(x, picked);
}

Projector threshold_projector(const Observable& x, double lambda, const Tolerance& tol) {
  return spectral_projector(x, BorelSet::at_most(lambda), tol);
}

Projector point_projector(const Observable& x, double t, const Tolerance& tol) {
  const auto idx = x.index_of(t, tol);
  if (!idx) return Projector::zero(x.dim());
  return x.projectors()[*idx];
}

CMatrix apply_function(const Observable& x, const SpectralFunction& f) {
  CMatrix out = CMatrix::Zero(x.dim(), x.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto v = f(x.spectrum()[i]);
    if (!v || !std::isfinite(*v)) {
      throw Error(ErrorKind::UndefinedAtSpectralPoint,
                  "function undefined at spectral point " + std::to_string(x.spectrum()[i]) + " of " +
                      x.name());
    }
    out += *v * x.projectors()[i].matrix();
  }
  return out;
}

Observable map_observable(const Observable& x, const SpectralFunction& f, std::string name,
                          const Tolerance& tol) {
  std::vector<double> values;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto v = f(x.spectrum()[i]);
    if (!v || !std::isfinite(*v)) {
      throw Error(ErrorKind::UndefinedAtSpectralPoint,
                  "function undefined at spectral point " + std::to_string(x.spectrum()[i]) + " of " +
                      x.name());
    }
    values.push_back(*v);
  }
  return Observable::from_spectral_data(std::move(name), std::move(values), x.projectors(), tol);
}

double delta(const Observable& x) {
  double best = 1.0;
  const auto& sp = x.spectrum();
  for (std::size_t i = 1; i < sp.size(); ++i) best = std::min(best, (sp[i] - sp[i - 1]) / 2.0);
  return best;
}

Observable embed_first(const Observable& x, Index dim_k) {
  const CMatrix id = CMatrix::Identity(dim_k, dim_k);
  std::vector<Projector> ps;
  for (const Projector& p : x.projectors()) ps.push_back(Projector::from_orthonormal_basis(kron(p.basis(), id)));
  return Observable::from_spectral_data(x.name(), x.spectrum(), std::move(ps));
}

Observable embed_second(const Observable& m, Index dim_h) {
  const CMatrix id = CMatrix::Identity(dim_h, dim_h);
  std::vector<Projector> ps;
  for (const Projector& p : m.projectors()) ps.push_back(Projector::from_orthonormal_basis(kron(id, p.basis())));
  return Observable::from_spectral_data(m.name(), m.spectrum(), std::move(ps));
}

Observable heisenberg(const Observable& x, const CMatrix& u, const Tolerance& tol) {
  if (u.rows() != x.dim() || u.cols() != x.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "heisenberg: unitary does not match observable dimension");
  }
  if (!is_unitary(u, tol)) throw Error(ErrorKind::NotUnitary, "heisenberg: matrix is not unitary");
  std::vector<Projector> ps;
  for (const Projector& p : x.projectors()) ps.push_back(Projector::from_orthonormal_basis(u.adjoint() * p.basis()));
  return Observable::from_spectral_data(x.name(), x.spectrum(), std::move(ps), tol);
}

std::vector<double> merged_spectrum(const Observable& x, const Observable& y, const Tolerance& tol) {
  std::vector<double> all = x.spectrum();
  all.insert(all.end(), y.spectrum().begin(), y.spectrum().end());
  std::sort(all.begin(), all.end());
  const double snap = std::max(x.snap_tolerance(tol), y.snap_tolerance(tol));
  std::vector<double> out;
  for (double v : all)
    if (out.empty() || v - out.back() > snap) out.push_back(v);
  return out;
}

bool observables_commute(const Observable& x, const Observable& y, const Tolerance& tol) {
  if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "observables_commute: dimensions differ");
  for (const Projector& p : x.projectors())
    for (const Projector& q : y.projectors())
      if (!commutes(p, q, tol)) return false;
  return true;
}

bool pairwise_commuting(std::span<const Observable> xs, const Tolerance& tol) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!observables_commute(xs[i], xs[j], tol)) return false;
  return true;
}

}  // namespace qlogic
