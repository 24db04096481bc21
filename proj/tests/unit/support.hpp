#pragma once

#include <cmath>

#include "qlogic/matrix.hpp"
#include "qlogic/projector.hpp"

namespace qlogic::testing {

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

inline CMatrix diag(std::initializer_list<double> values) {
  const Index n = static_cast<Index>(values.size());
  CMatrix m = CMatrix::Zero(n, n);
  Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

inline CMatrix identity(Index n) { return CMatrix::Identity(n, n); }

inline CVector basis_vector(Index n, Index k) {
  CVector v = CVector::Zero(n);
  v(k) = 1.0;
  return v;
}

inline CVector ket(std::initializer_list<cplx> entries) {
  CVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (cplx c : entries) v(i++) = c;
  return v;
}

/// Z-up |0><0| and X-up |+><+| on C^2.
inline Projector z_up() { return Projector::from_matrix(diag({1, 0})); }
inline Projector x_up() {
  CMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return Projector::from_matrix(m);
}

/// CNOT with the first qubit as control, basis order |00>,|01>,|10>,|11>.
inline CMatrix cnot() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

inline CVector bell() {
  const double s = 1.0 / std::sqrt(2.0);
  return ket({s, 0, 0, s});
}

}  // namespace qlogic::testing
