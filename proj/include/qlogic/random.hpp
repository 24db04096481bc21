#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlogic/observable.hpp"
#include "qlogic/state.hpp"

namespace qlogic {

/// Seeded source for every randomized construction; runs are reproducible
/// from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double gauss() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  cplx complex_gauss() { return {gauss(), gauss()}; }
  CMatrix gaussian(Index rows, Index cols);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix random_unitary(Rng& rng, Index n);
Projector random_projector(Rng& rng, Index n, Index rank);
/// Random rank between 0 and n inclusive.
Projector random_projector(Rng& rng, Index n);
/// Integer eigenvalues drawn from {-k..k} (k = max(2, distinct)),
/// conjugated by a random unitary. Spectral gaps are at least 1.
Observable random_observable(Rng& rng, Index n, std::string name, int distinct = 3);
/// Integer eigenvalues in the basis given by the columns of `u`.
Observable observable_in_basis(Rng& rng, const CMatrix& u, std::string name, int distinct = 3);

std::vector<double> random_integer_spectrum(Rng& rng, Index n, int distinct);

CVector random_unit_vector(Rng& rng, Index n);
DensityState random_state(Rng& rng, Index n, Index rank);
/// Random rank between 1 and n.
DensityState random_state(Rng& rng, Index n);
/// State with support inside ran(p); p must be nonzero.
DensityState random_state_in(Rng& rng, const Projector& p);

/// Random POVM with m elements on C^n, normalized by S^{-1/2} A_k S^{-1/2}.
std::vector<CMatrix> random_povm_elements(Rng& rng, Index n, Index m);

/// Observables on C^(n1+n2) that commute on a first block of size n1 and
/// are independent random observables on the second block, with the
/// whole space rotated by a random unitary. Returns the projector onto
/// the rotated first block through `block`.
std::vector<Observable> block_commuting_family(Rng& rng, Index n1, Index n2, std::size_t count,
                                               Projector* block = nullptr);
/// Pair (X, Y) equal on a rotated first block of size n1 and independent
/// on the rest.
std::pair<Observable, Observable> block_equal_pair(Rng& rng, Index n1, Index n2, Projector* block = nullptr);

}  // namespace qlogic
