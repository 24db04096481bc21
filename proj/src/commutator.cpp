#include "qlogic/commutator.hpp"

#include <limits>
#include <string>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"

namespace qlogic {

ProjectorFamily ProjectorFamily::of(std::vector<Projector> items) {
  ProjectorFamily f;
  for (Projector& p : items) f.push(std::move(p));
  return f;
}

void ProjectorFamily::push(Projector p, std::string label) {
  if (items.empty() && dim == 0) dim = p.dim();
  if (p.dim() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "projector family: member of dimension " +
                                                  std::to_string(p.dim()) + " in a family of dimension " +
                                                  std::to_string(dim));
  }
  items.push_back(std::move(p));
  labels.push_back(std::move(label));
}

Projector com_marsden(const Projector& p, const Projector& q, const Tolerance& tol) {
  const Projector pc = ortho(p);
  const Projector qc = ortho(q);
  const Projector terms[] = {meet(p, q, tol), meet(p, qc, tol), meet(pc, q, tol), meet(pc, qc, tol)};
  return join_all(terms, p.dim(), tol);
}

Projector com_finite(const ProjectorFamily& f, const Tolerance& tol) {
  if (f.size() > kComFiniteLimit) {
    throw Error(ErrorKind::FamilyTooLarge, "com_finite: family of " + std::to_string(f.size()) +
                                               " members exceeds the limit of " +
                                               std::to_string(kComFiniteLimit));
  }
  if (f.items.empty()) return Projector::identity(f.dim);
  std::vector<Projector> complements;
  for (const Projector& p : f.items) complements.push_back(ortho(p));
  const std::size_t k = f.size();
  std::vector<Projector> terms;
  std::vector<Projector> signed_members(k, Projector::zero(f.dim));
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) signed_members[i] = (mask >> i) & 1U ? complements[i] : f.items[i];
    Projector m = meet_all(signed_members, f.dim, tol);
    if (!m.is_zero()) terms.push_back(std::move(m));
  }
  return join_all(terms, f.dim, tol);
}

Projector com_nullspace(const ProjectorFamily& f, const Tolerance& tol) {
  const Index n = f.dim;
  if (f.items.empty()) return Projector::identity(n);
  // [P1,P2] P3 psi = 0 for all triples iff R P3 psi = 0 for every P3, where
  // R is the triangular factor of the stacked commutators: R^dag R equals
  // sum_{i<j} [Pi,Pj]^dag [Pi,Pj].
  CMatrix stack(0, n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      CMatrix grown(stack.rows() + n, n);
      grown << stack, commutator(f.items[i].matrix(), f.items[j].matrix());
      stack = std::move(grown);
    }
  }
  if (stack.rows() == 0) return Projector::identity(n);
  CMatrix r = stack;
  if (stack.rows() > n) {
    const Eigen::HouseholderQR<CMatrix> qr(stack);
    r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  }
  std::vector<CMatrix> factors;
  for (const Projector& p : f.items) factors.push_back(r * p.matrix());
  return Projector::from_orthonormal_basis(common_kernel_basis(factors, n, tol, 1.0));
}

ProjectorFamily spectral_family(std::span<const Observable> xs) {
  ProjectorFamily f;
  if (!xs.empty()) f.dim = xs.front().dim();
  for (const Observable& x : xs) {
    // The last threshold is the identity and constrains nothing.
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      f.push(threshold_projector(x, x.spectrum()[i]), x.name() + "<=" + std::to_string(x.spectrum()[i]));
    }
  }
  return f;
}

std::vector<Projector> eigenprojectors(std::span<const Observable> xs) {
  std::vector<Projector> out;
  for (const Observable& x : xs) out.insert(out.end(), x.projectors().begin(), x.projectors().end());
  return out;
}

MatrixAlgebra generated_algebra(std::span<const Observable> xs, const Tolerance& tol) {
  if (xs.empty()) throw Error(ErrorKind::DimensionMismatch, "generated_algebra: no observables");
  const std::vector<Projector> ps = eigenprojectors(xs);
  return MatrixAlgebra::from_projectors(ps, xs.front().dim(), tol);
}

Projector com_algebra_route(const MatrixAlgebra& alg, const Tolerance& tol) {
  const Index n = alg.dim();
  const auto& b = alg.basis();
  std::vector<CMatrix> factors;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) factors.push_back(commutator(b[i], b[j]));
  // Basis elements have unit Hilbert-Schmidt norm.
  return Projector::from_orthonormal_basis(common_kernel_basis(factors, n, tol, 1.0));
}

Projector com_observables(std::span<const Observable> xs, const MatrixAlgebra& alg, const Tolerance& tol) {
  if (xs.empty()) throw Error(ErrorKind::DimensionMismatch, "com_observables: no observables");
  const Index n = xs.front().dim();
  for (const Observable& x : xs) {
    if (x.dim() != n) throw Error(ErrorKind::DimensionMismatch, "com_observables: observables differ in dimension");
  }
  const Projector by_thresholds = com_nullspace(spectral_family(xs), tol);
  const Projector by_algebra = com_algebra_route(alg, tol);
  if (!approx_equal(by_thresholds, by_algebra, tol)) {
    throw Error(ErrorKind::CrossCheckFailure,
                "com routes disagree: threshold rank " + std::to_string(by_thresholds.rank()) +
                    ", algebra rank " + std::to_string(by_algebra.rank()) + ", distance " +
                    std::to_string(distance(by_thresholds, by_algebra)));
  }
  return by_thresholds;
}

Projector com_observables(std::span<const Observable> xs, const Tolerance& tol) {
  if (xs.empty()) throw Error(ErrorKind::DimensionMismatch, "com_observables: no observables");
  return com_observables(xs, generated_algebra(xs, tol), tol);
}

namespace {

double max_pairwise_commutator(std::span<const CMatrix> ms) {
  double worst = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      worst = std::max(worst, commutator(ms[i], ms[j]).norm());
  return worst;
}

std::vector<CMatrix> compressed(std::span<const Projector> ps, const Projector& c) {
  std::vector<CMatrix> out;
  for (const Projector& p : ps) out.push_back(c.matrix() * p.matrix() * c.matrix());
  return out;
}

std::vector<CMatrix> compressed(std::span<const CMatrix> ms, const Projector& c) {
  std::vector<CMatrix> out;
  for (const CMatrix& m : ms) out.push_back(c.matrix() * m * c.matrix());
  return out;
}

double central_residual(const MatrixAlgebra& alg, const Projector& e) {
  double worst = 0.0;
  for (const CMatrix& b : alg.basis()) worst = std::max(worst, commutator(e.matrix(), b).norm());
  for (const CMatrix& b : alg.commutant_basis()) worst = std::max(worst, commutator(e.matrix(), b).norm());
  return worst;
}

}  // namespace

Report verify_subcommutator(const ProjectorFamily& f, const MatrixAlgebra& alg, const Tolerance& tol) {
  Report r;
  r.title = "maximum subcommutator";
  const Projector e = com_nullspace(f, tol);
  const double central = central_residual(alg, e);
  r.add("com(F) is central", central <= tol.assert_tol, central);

  const double below = max_pairwise_commutator(compressed(f.items, e));
  r.add("members commute under com(F)", below <= tol.assert_tol, below);

  const std::vector<Projector> atoms = minimal_central_projections(alg, tol);
  double interval = 0.0;
  std::vector<Projector> classical;
  for (const Projector& c : atoms) {
    const double local = max_pairwise_commutator(compressed(f.items, c));
    if (leq(c, e, tol)) interval = std::max(interval, local);
    if (local <= tol.assert_tol) classical.push_back(c);
  }
  r.add("members commute under every central atom below com(F)", interval <= tol.assert_tol, interval,
        std::to_string(atoms.size()) + " central atoms");

  const Projector sup = join_all(classical, alg.dim(), tol);
  const double gap = distance(sup, e);
  r.add("com(F) is the join of the commuting central atoms", gap <= tol.assert_tol, gap);
  r.notes.push_back("maximality is sampled through minimal central projections");
  return r;
}

Report boolean_factorization_check(const ProjectorFamily& f, const MatrixAlgebra& alg, const Tolerance& tol) {
  Report r;
  r.title = "boolean factorization";
  const Projector c = com_nullspace(f, tol);
  const double abelian = max_pairwise_commutator(compressed(alg.basis(), c));
  r.add("algebra is abelian under com(F)", abelian <= tol.assert_tol, abelian, "rank " + std::to_string(c.rank()));

  const Projector cc = ortho(c);
  const std::vector<Projector> atoms = minimal_central_projections(alg, tol);
  std::size_t straddling = 0;
  double weakest = std::numeric_limits<double>::infinity();
  std::size_t below_complement = 0;
  for (const Projector& e : atoms) {
    const bool in_c = leq(e, c, tol);
    const bool in_cc = leq(e, cc, tol);
    if (!in_c && !in_cc) ++straddling;
    if (!in_cc) continue;
    ++below_complement;
    weakest = std::min(weakest, max_pairwise_commutator(compressed(alg.basis(), e)));
  }
  r.add("com(F) is a sum of central atoms", straddling == 0, static_cast<double>(straddling));
  const bool vacuous = below_complement == 0;
  r.add("no abelian central summand under 1 - com(F)", vacuous || weakest > tol.assert_tol,
        vacuous ? 0.0 : weakest, vacuous ? "vacuous" : std::to_string(below_complement) + " summands");
  return r;
}

}  // namespace qlogic
