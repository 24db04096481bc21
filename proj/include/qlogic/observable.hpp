#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlogic/borel.hpp"
#include "qlogic/projector.hpp"

namespace qlogic {

/// Hermitian matrix with its spectral resolution: distinct eigenvalues in
/// ascending order and one eigenprojector per eigenvalue.
class Observable {
 public:
  /// Eigenvalues closer than cluster_tol * max(1, max|lambda|) merge into
  /// one spectral point whose value is the cluster mean.
  static Observable decompose(std::string name, const CMatrix& m, const Tolerance& tol = {});
  /// Builds X = sum_i values[i] * projectors[i]. Projectors must be
  /// mutually orthogonal and sum to the identity; equal values merge.
  static Observable from_spectral_data(std::string name, std::vector<double> values,
                                       std::vector<Projector> projectors, const Tolerance& tol = {});

  const std::string& name() const noexcept { return name_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }
  const std::vector<Projector>& projectors() const noexcept { return projectors_; }
  std::size_t size() const noexcept { return spectrum_.size(); }

  /// Literals within this distance of a spectral point denote that point.
  double snap_tolerance(const Tolerance& tol = {}) const;
  std::optional<std::size_t> index_of(double value, const Tolerance& tol = {}) const;

  Observable renamed(std::string name) const;

 private:
  Observable() = default;
  std::string name_;
  CMatrix matrix_;
  std::vector<double> spectrum_;
  std::vector<Projector> projectors_;
};

/// E^X(D): sum of the eigenprojectors at spectral points in D.
Projector spectral_projector(const Observable& x, const BorelSet& d, const Tolerance& tol = {});
/// E^X(lambda) = E^X((-inf, lambda]).
Projector threshold_projector(const Observable& x, double lambda, const Tolerance& tol = {});
/// E^X({t}); zero unless t snaps to a spectral point.
Projector point_projector(const Observable& x, double t, const Tolerance& tol = {});

using SpectralFunction = std::function<std::optional<double>(double)>;

/// sum_i f(lambda_i) P_i. Throws UndefinedAtSpectralPoint if f has no value
/// at some eigenvalue.
CMatrix apply_function(const Observable& x, const SpectralFunction& f);
/// f(X) as an observable, grouping eigenprojectors by image value.
Observable map_observable(const Observable& x, const SpectralFunction& f, std::string name,
                          const Tolerance& tol = {});

/// min over distinct spectral pairs of min(|x - y| / 2, 1); 1 for a
/// single-point spectrum.
double delta(const Observable& x);

/// X (x) 1_K and 1_H (x) M on the product space, H the first factor.
Observable embed_first(const Observable& x, Index dim_k);
Observable embed_second(const Observable& m, Index dim_h);

/// U^dag X U with the same spectrum and conjugated eigenprojectors.
/// Throws NotUnitary.
Observable heisenberg(const Observable& x, const CMatrix& u, const Tolerance& tol = {});

/// Sorted union of both spectra; values that snap to each other appear once.
std::vector<double> merged_spectrum(const Observable& x, const Observable& y, const Tolerance& tol = {});

/// Every pair of eigenprojectors commutes, i.e. [X, Y] = 0 independently
/// of the eigenvalue scale.
bool observables_commute(const Observable& x, const Observable& y, const Tolerance& tol = {});
bool pairwise_commuting(std::span<const Observable> xs, const Tolerance& tol = {});

}  // namespace qlogic
