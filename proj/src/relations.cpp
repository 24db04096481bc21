#include "qlogic/relations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"

namespace qlogic {

namespace {

void require_family(std::span<const Observable> xs, const DensityState& rho, const char* what) {
  if (xs.empty()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": no observables");
  for (const Observable& x : xs) {
    if (x.dim() != rho.dim()) {
      throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": observable " + x.name() +
                                                    " has dimension " + std::to_string(x.dim()) +
                                                    ", state has " + std::to_string(rho.dim()));
    }
  }
}

double re_trace(const CMatrix& m, const DensityState& rho) { return (m * rho.matrix()).trace().real(); }

// Walks every tuple of eigenprojector indices, carrying the running meet so
// empty prefixes are pruned.
void for_each_atom(std::span<const Observable> xs, const Tolerance& tol,
                   const std::function<void(const std::vector<std::size_t>&, const Projector&)>& visit) {
  const Index n = xs.front().dim();
  std::vector<std::size_t> idx(xs.size(), 0);
  std::function<void(std::size_t, const Projector&)> rec = [&](std::size_t depth, const Projector& acc) {
    if (acc.is_zero()) return;
    if (depth == xs.size()) {
      visit(idx, acc);
      return;
    }
    for (std::size_t a = 0; a < xs[depth].size(); ++a) {
      idx[depth] = a;
      rec(depth + 1, meet(acc, xs[depth].projectors()[a], tol));
    }
  };
  rec(0, Projector::identity(n));
}

std::vector<double> values_at(std::span<const Observable> xs, const std::vector<std::size_t>& idx) {
  std::vector<double> v(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) v[j] = xs[j].spectrum()[idx[j]];
  return v;
}

struct GridAtom {
  std::vector<std::size_t> idx;
  double mass;
};

std::vector<GridAtom> grid_atoms(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol) {
  std::vector<GridAtom> out;
  for_each_atom(xs, tol, [&](const std::vector<std::size_t>& idx, const Projector& m) {
    out.push_back({idx, re_trace(m.matrix(), rho)});
  });
  return out;
}

JointDistribution to_distribution(std::span<const Observable> xs, const std::vector<GridAtom>& atoms,
                                  const Tolerance& tol) {
  JointDistribution d;
  for (const Observable& x : xs) d.names.push_back(x.name());
  for (const GridAtom& a : atoms) {
    if (std::abs(a.mass) <= tol.assert_tol) continue;
    d.atoms.push_back({values_at(xs, a.idx), a.mass});
  }
  // for_each_atom visits tuples in lexicographic index order, which is
  // ascending value order since spectra are sorted.
  return d;
}

Projector cyclic_from_basis(std::span<const CMatrix> basis, const DensityState& rho, const Tolerance& tol) {
  const Index n = rho.dim();
  const CMatrix& r = rho.factor();
  CMatrix cols(n, static_cast<Index>(basis.size()) * r.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) cols.middleCols(static_cast<Index>(i) * r.cols(), r.cols()) = basis[i] * r;
  return column_space_projector(cols, tol);
}

void throw_if_incoherent(Report r) {
  if (!r.coherent()) throw InconsistentBattery(std::move(r));
}

double observable_scale(const Observable& x, const Observable& y) {
  return std::max({1.0, x.matrix().norm(), y.matrix().norm()});
}

}  // namespace

double JointDistribution::total() const {
  double s = 0.0;
  for (const Atom& a : atoms) s += a.probability;
  return s;
}

double JointDistribution::at(std::span<const double> values, double snap) const {
  for (const Atom& a : atoms) {
    if (std::equal(a.values.begin(), a.values.end(), values.begin(), values.end(),
                   [snap](double u, double v) { return std::abs(u - v) <= snap; }))
      return a.probability;
  }
  return 0.0;
}

nlohmann::ordered_json JointDistribution::to_json() const {
  nlohmann::ordered_json j;
  j["observables"] = names;
  auto rows = nlohmann::ordered_json::array();
  for (const Atom& a : atoms) {
    auto vals = nlohmann::ordered_json::array();
    for (double v : a.values) vals.push_back(round_sig(v));
    rows.push_back({{"values", vals}, {"probability", round_sig(a.probability)}});
  }
  j["atoms"] = rows;
  j["total"] = round_sig(total());
  return j;
}

double born_joint(std::span<const Observable> xs, std::span<const double> thresholds, const DensityState& rho,
                  const Tolerance& tol) {
  require_family(xs, rho, "born_joint");
  if (thresholds.size() != xs.size()) {
    throw Error(ErrorKind::DimensionMismatch, "born_joint: " + std::to_string(xs.size()) + " observables but " +
                                                  std::to_string(thresholds.size()) + " values");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!observables_commute(xs[i], xs[j], tol)) {
        throw Error(ErrorKind::NotCommuting,
                    "born_joint: " + xs[i].name() + " and " + xs[j].name() + " do not commute");
      }
    }
  }
  CMatrix prod = CMatrix::Identity(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < xs.size(); ++i) prod = prod * threshold_projector(xs[i], thresholds[i], tol).matrix();
  return std::clamp(re_trace(prod, rho), 0.0, 1.0);
}

Projector cyclic_projector(const MatrixAlgebra& alg, const DensityState& rho, const Tolerance& tol) {
  if (alg.dim() != rho.dim()) throw Error(ErrorKind::DimensionMismatch, "cyclic_projector: dimensions differ");
  const Projector c = cyclic_from_basis(alg.basis(), rho, tol);
  if (!fixes(c, rho, tol)) throw Error(ErrorKind::CrossCheckFailure, "cyclic projector does not fix the state");
  double off = 0.0;
  for (const CMatrix& b : alg.basis()) off = std::max(off, commutator(b, c.matrix()).norm());
  if (off > tol.assert_tol) throw Error(ErrorKind::CrossCheckFailure, "cyclic projector is not in the commutant");
  return c;
}

Projector cyclic_projector(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol) {
  require_family(xs, rho, "cyclic_projector");
  if (xs.size() == 1) {
    // {X}'' is spanned by the eigenprojectors of X.
    std::vector<CMatrix> basis;
    for (const Projector& p : xs.front().projectors()) basis.push_back(p.matrix());
    const Projector c = cyclic_from_basis(basis, rho, tol);
    double off = 0.0;
    for (const Projector& p : xs.front().projectors()) off = std::max(off, commutator(p.matrix(), c.matrix()).norm());
    if (off > tol.assert_tol || !fixes(c, rho, tol)) {
      throw Error(ErrorKind::CrossCheckFailure, "cyclic projector of " + xs.front().name() + " failed its checks");
    }
    return c;
  }
  return cyclic_projector(generated_algebra(xs, tol), rho, tol);
}

bool simultaneously_determinate(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol) {
  require_family(xs, rho, "simultaneously_determinate");
  return holds(com_observables(xs, tol), rho, tol);
}

JointDistribution meet_distribution(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol) {
  require_family(xs, rho, "meet_distribution");
  return to_distribution(xs, grid_atoms(xs, rho, tol), tol);
}

JpdResult jpd_battery(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol) {
  require_family(xs, rho, "jpd_battery");
  const Index n = rho.dim();
  const MatrixAlgebra alg = generated_algebra(xs, tol);
  JpdResult out;
  out.com = com_observables(xs, alg, tol);
  out.cyclic = cyclic_projector(alg, rho, tol);
  Report& r = out.report;
  r.title = "simultaneous determinateness";

  const double tr = re_trace(out.com.matrix(), rho);
  r.add("(i) Tr[com rho] = 1", tr >= 1.0 - tol.assert_tol, 1.0 - tr);

  const double fixed = (out.com.matrix() * rho.matrix() - rho.matrix()).norm();
  r.add("(ii) com rho = rho", fixed <= tol.assert_tol, fixed);

  const double below = (out.com.matrix() * out.cyclic.matrix() - out.cyclic.matrix()).norm();
  r.add("(iii) C(Xs;rho) <= com", below <= tol.assert_tol, below);

  const auto& basis = alg.basis();
  double comm = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      comm = std::max(comm, (commutator(basis[i], basis[j]) * rho.matrix()).norm());
  r.add("(iv) [A, B] rho = 0 on the algebra", comm <= tol.assert_tol, comm);

  // Candidate measure from meets of eigenprojectors, tested against the
  // quantum moments Tr[P1 P2 P3 rho] of every word of length <= 3 in the
  // eigenprojectors (the empty word included).
  const std::vector<GridAtom> atoms = grid_atoms(xs, rho, tol);
  struct Letter {
    std::size_t obs;
    std::size_t atom;
  };
  std::vector<Letter> letters;
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t a = 0; a < xs[j].size(); ++a) letters.push_back({j, a});
  auto classical_moment = [&](std::span<const Letter> word) {
    double s = 0.0;
    for (const GridAtom& g : atoms) {
      bool inside = true;
      for (const Letter& l : word) inside = inside && g.idx[l.obs] == l.atom;
      if (inside) s += g.mass;
    }
    return s;
  };
  double moment_gap = 0.0;
  {
    std::vector<Letter> word;
    std::function<void(const CMatrix&)> rec = [&](const CMatrix& prefix) {
      const cplx q = (prefix * rho.matrix()).trace();
      moment_gap = std::max(moment_gap, std::abs(q - cplx(classical_moment(word), 0.0)));
      if (word.size() == 3) return;
      for (const Letter& l : letters) {
        word.push_back(l);
        rec(prefix * xs[l.obs].projectors()[l.atom].matrix());
        word.pop_back();
      }
    };
    rec(CMatrix::Identity(n, n));
  }
  r.add("(v) joint distribution reproduces moments of degree <= 3", moment_gap <= tol.assert_tol, moment_gap,
        std::to_string(letters.size()) + " letters");

  const CMatrix& c = out.cyclic.matrix();
  double pair = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t k = j + 1; k < xs.size(); ++k) {
      for (const Projector& p : xs[j].projectors()) {
        for (const Projector& q : xs[k].projectors()) {
          pair = std::max(pair, commutator(p.matrix() * c, q.matrix() * c).norm());
        }
      }
    }
  }
  r.add("(vi) X_j C and X_k C commute", pair <= tol.assert_tol, pair);

  // Additivity on rectangles whose sides are a single spectral atom or the
  // whole line; the full-line rectangle carries the mass condition.
  double additivity = 0.0;
  double negative = 0.0;
  for (const GridAtom& g : atoms) negative = std::max(negative, -g.mass);
  {
    std::vector<std::size_t> side(xs.size(), 0);  // 0 = whole line, a+1 = atom a
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
      if (depth == xs.size()) {
        std::vector<Projector> ps;
        std::vector<Letter> word;
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (side[j] == 0) continue;
          ps.push_back(xs[j].projectors()[side[j] - 1]);
          word.push_back({j, side[j] - 1});
        }
        const double direct = re_trace(meet_all(ps, n, tol).matrix(), rho);
        additivity = std::max(additivity, std::abs(direct - classical_moment(word)));
        return;
      }
      for (std::size_t s = 0; s <= xs[depth].size(); ++s) {
        side[depth] = s;
        rec(depth + 1);
      }
    };
    rec(0);
  }
  const double viii = std::max(additivity, negative);
  r.add("(viii) meet measure is additive with mass 1", viii <= tol.assert_tol, viii);

  throw_if_incoherent(r);
  if (r.verdict()) out.distribution = to_distribution(xs, atoms, tol);
  return out;
}

namespace {

// Lexicographic order on entries (real part, then imaginary part).
bool matrix_precedes(const CMatrix& a, const CMatrix& b) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j).real() != b(i, j).real()) return a(i, j).real() < b(i, j).real();
      if (a(i, j).imag() != b(i, j).imag()) return a(i, j).imag() < b(i, j).imag();
    }
  }
  return false;
}

}  // namespace

EqualityRoutes equality_routes(const Observable& x_in, const Observable& y_in, const Tolerance& tol) {
  if (x_in.dim() != y_in.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "equality_projector: " + x_in.name() + " and " + y_in.name() +
                                                  " differ in dimension");
  }
  // Fixed argument order, so swapping X and Y gives bit-identical results.
  const bool swap = matrix_precedes(y_in.matrix(), x_in.matrix());
  const Observable& x = swap ? y_in : x_in;
  const Observable& y = swap ? x_in : y_in;
  const Index n = x.dim();
  const std::vector<double> values = merged_spectrum(x, y, tol);

  // Thresholds: E^X(l) psi = E^Y(l) psi for every l. The difference is
  // constant between consecutive merged spectral points.
  std::vector<CMatrix> by_thresholds;
  for (double l : values) {
    by_thresholds.push_back(threshold_projector(x, l, tol).matrix() - threshold_projector(y, l, tol).matrix());
  }
  EqualityRoutes out;
  out.thresholds = Projector::from_orthonormal_basis(common_kernel_basis(by_thresholds, n, tol, 1.0));

  // Disjoint atoms: E^Y({b}) E^X({a}) psi = 0 whenever a != b.
  std::vector<CMatrix> px, py;
  for (double v : values) {
    px.push_back(point_projector(x, v, tol).matrix());
    py.push_back(point_projector(y, v, tol).matrix());
  }
  std::vector<CMatrix> by_atoms;
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = 0; b < values.size(); ++b)
      if (a != b) by_atoms.push_back(py[b] * px[a]);
  out.atoms = Projector::from_orthonormal_basis(common_kernel_basis(by_atoms, n, tol, 1.0));
  return out;
}

Projector equality_projector(const Observable& x, const Observable& y, const Tolerance& tol) {
  EqualityRoutes r = equality_routes(x, y, tol);
  if (!approx_equal(r.thresholds, r.atoms, tol)) {
    throw Error(ErrorKind::CrossCheckFailure,
                "equality routes disagree for " + x.name() + ", " + y.name() + ": ranks " +
                    std::to_string(r.thresholds.rank()) + " and " + std::to_string(r.atoms.rank()));
  }
  return std::move(r.thresholds);
}

IdResult id_battery(const Observable& x, const Observable& y, const DensityState& rho, const Tolerance& tol) {
  const Observable pair[] = {x, y};
  require_family(pair, rho, "id_battery");
  IdResult out;
  out.equality = equality_projector(x, y, tol);
  Report& r = out.report;
  r.title = "quantum equality";
  const double scale = observable_scale(x, y);

  const double fixed = (out.equality.matrix() * rho.matrix() - rho.matrix()).norm();
  r.add("(i) [[X = Y]] rho = rho", fixed <= tol.assert_tol, fixed);

  const std::vector<double> values = merged_spectrum(x, y, tol);
  std::vector<CMatrix> px, py;
  for (double v : values) {
    px.push_back(point_projector(x, v, tol).matrix());
    py.push_back(point_projector(y, v, tol).matrix());
  }
  double weak = 0.0;
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = 0; b < values.size(); ++b)
      if (a != b) weak = std::max(weak, std::abs((px[a] * py[b] * rho.matrix()).trace()));
  r.add("(ii) weak joint distribution vanishes off the diagonal", weak <= tol.assert_tol, weak);

  const Projector cx = cyclic_projector(std::span<const Observable>(pair, 1), rho, tol);
  const CMatrix& b = cx.basis();
  const CMatrix diff = x.matrix() - y.matrix();
  const double on_c = (diff * b).norm();
  r.add("(iii) X psi = Y psi on C(X;rho)", on_c <= tol.assert_tol * scale, on_c);

  double expect = 0.0;
  for (std::size_t a = 0; a < values.size(); ++a)
    expect = std::max(expect, (b.adjoint() * (px[a] - py[a]) * b).norm());
  r.add("(iv) spectral expectations agree on C(X;rho)", expect <= tol.assert_tol, expect);

  double per_atom = 0.0;
  for (std::size_t a = 0; a < values.size(); ++a)
    per_atom = std::max(per_atom, ((px[a] - py[a]) * rho.matrix()).norm());
  r.add("(v) E^X(D) rho = E^Y(D) rho", per_atom <= tol.assert_tol, per_atom);

  const Projector cy = cyclic_projector(std::span<const Observable>(pair + 1, 1), rho, tol);
  const double gap = distance(cx, cy);
  const double xc = (diff * cx.matrix()).norm();
  r.add("(vii) C(X;rho) = C(Y;rho) and XC = YC", gap <= tol.assert_tol && xc <= tol.assert_tol * scale,
        std::max(gap, xc / scale));

  const std::vector<GridAtom> atoms = grid_atoms(pair, rho, tol);
  double mass = 0.0;
  double diagonal = 0.0;
  for (const GridAtom& g : atoms) {
    mass += g.mass;
    if (std::abs(x.spectrum()[g.idx[0]] - y.spectrum()[g.idx[1]]) <= std::max(x.snap_tolerance(tol), y.snap_tolerance(tol)))
      diagonal += g.mass;
  }
  const double viii = std::max(1.0 - mass, 1.0 - diagonal);
  r.add("(viii) joint distribution concentrates on x = y", viii <= tol.assert_tol, viii);

  throw_if_incoherent(r);
  if (r.verdict()) out.distribution = to_distribution(pair, atoms, tol);
  return out;
}

Report equivalence_relation_check(const Observable& x, const Observable& y, const Observable& z,
                                  const Tolerance& tol) {
  Report r;
  r.title = "equality is an equivalence";
  const Observable* obs[] = {&x, &y, &z};
  double reflexive = 0.0;
  for (const Observable* o : obs) {
    reflexive = std::max(reflexive, distance(equality_projector(*o, *o, tol), Projector::identity(o->dim())));
  }
  r.add("reflexivity", reflexive <= tol.assert_tol, reflexive);

  double symmetric = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      symmetric = std::max(symmetric, distance(equality_projector(*obs[i], *obs[j], tol),
                                               equality_projector(*obs[j], *obs[i], tol)));
  r.add("symmetry", symmetric <= tol.assert_tol, symmetric);

  const Projector xy = equality_projector(x, y, tol);
  const Projector yz = equality_projector(y, z, tol);
  const Projector xz = equality_projector(x, z, tol);
  const Projector both = meet(xy, yz, tol);
  const double trans = (xz.matrix() * both.matrix() - both.matrix()).norm();
  r.add("transitivity", trans <= tol.assert_tol, trans);
  return r;
}

Projector common_eigenvector_analysis(std::span<const Observable> xs, EigenMode mode, const Tolerance& tol) {
  if (xs.empty()) throw Error(ErrorKind::DimensionMismatch, "common_eigenvector_analysis: no observables");
  const Index n = xs.front().dim();
  std::vector<Projector> parts;
  Projector expected = Projector::zero(n);
  if (mode == EigenMode::Determinate) {
    for_each_atom(xs, tol, [&](const std::vector<std::size_t>&, const Projector& m) { parts.push_back(m); });
    expected = com_observables(xs, tol);
  } else {
    if (xs.size() != 2) {
      throw Error(ErrorKind::DimensionMismatch, "common_eigenvector_analysis: equal mode takes two observables");
    }
    for (double v : merged_spectrum(xs[0], xs[1], tol)) {
      Projector m = meet(point_projector(xs[0], v, tol), point_projector(xs[1], v, tol), tol);
      if (!m.is_zero()) parts.push_back(std::move(m));
    }
    expected = equality_projector(xs[0], xs[1], tol);
  }
  Projector span = join_all(parts, n, tol);
  if (!approx_equal(span, expected, tol)) {
    throw Error(ErrorKind::CrossCheckFailure, std::string("common eigenvectors disagree with ") +
                                                  (mode == EigenMode::Determinate ? "com" : "the equality projector") +
                                                  ": ranks " + std::to_string(span.rank()) + " and " +
                                                  std::to_string(expected.rank()));
  }
  return span;
}

}  // namespace qlogic
