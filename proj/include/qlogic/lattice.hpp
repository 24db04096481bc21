#pragma once

#include <span>

#include "qlogic/projector.hpp"

namespace qlogic {

/// ran(P) intersected with ran(Q): the common kernel of 1-P and 1-Q.
Projector meet(const Projector& p, const Projector& q, const Tolerance& tol = {});
/// Closed span of both ranges, through De Morgan on meet.
Projector join(const Projector& p, const Projector& q, const Tolerance& tol = {});
/// 1 - P, rebuilt from a basis of the complement.
Projector ortho(const Projector& p);

Projector meet_all(std::span<const Projector> ps, Index dim, const Tolerance& tol = {});
Projector join_all(std::span<const Projector> ps, Index dim, const Tolerance& tol = {});

/// ||PQ - QP|| <= assert_tol.
bool commutes(const Projector& p, const Projector& q, const Tolerance& tol = {});
/// ||QP - P|| <= assert_tol, i.e. ran P is contained in ran Q.
bool leq(const Projector& p, const Projector& q, const Tolerance& tol = {});
bool approx_equal(const Projector& p, const Projector& q, const Tolerance& tol = {});
/// ||P - Q||, the residual used by approx_equal.
double distance(const Projector& p, const Projector& q);

/// Sasaki arrow P^perp v (P ^ Q).
Projector sasaki_implies(const Projector& p, const Projector& q, const Tolerance& tol = {});
/// (P -> Q) ^ (Q -> P).
Projector logical_equiv(const Projector& p, const Projector& q, const Tolerance& tol = {});

}  // namespace qlogic
