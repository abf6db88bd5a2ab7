#pragma once

#include "sturmkit/decision.hpp"
#include "sturmkit/real.hpp"

namespace sturmkit {

// Topological conjugacy of Sturmian systems: alpha = +-beta mod Z, decided
// exactly. Doubles as the lattice-equality decision for Z + alpha*Z.
Decision sturmian_conjugate(const RealValue& alpha, const RealValue& beta);

// Flow equivalence = PGL_2(Z)-equivalence, decided by comparing canonical CF
// period cycles up to rotation; YES carries a GL_2(Z) witness assembled from
// convergent matrices. Quadratic inputs decide; formal inputs answer only the
// conjugate fast path.
Decision sturmian_flow_equivalent(const RealValue& alpha, const RealValue& beta);

// Isogeny = PGL_2(Q)-equivalence: for quadratic inputs, same squarefree core;
// YES carries an explicit GL_2(Q) witness mapping alpha to beta.
Decision sturmian_isogenous(const RealValue& alpha, const RealValue& beta);

// Eventual flow equivalence: YES iff conjugate; NO when alpha != +-beta mod Q
// or when some n <= n_max has n*alpha, n*beta inequivalent (quadratic inputs
// are totally equivalent or not eventually equivalent at all); UNKNOWN
// otherwise, annotated as conjecturally NO.
Decision sturmian_eventually_flow_equivalent(const RealValue& alpha, const RealValue& beta,
                                             long n_max);

// Is alpha PGL_2(Z)-equivalent to m*alpha? Decided through the divisibility
// and Pell-solution-class criterion; the certificate matrix is rebuilt from
// the solution and cross-checkable against the CF-tail decision.
Decision self_mult_equivalent(const RealValue& alpha, long m);

}  // namespace sturmkit
