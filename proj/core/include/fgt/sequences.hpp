#pragma once

#include "fgt/rational.hpp"

namespace fgt {

// Parameters of the contraction recurrence a_{m+1} = 1 / (2 - a_m (1 - delta))
// with a_0 = a0. Requires 0 < a0 < 1 and 0 <= delta < 1.
struct SequenceParams {
  Rational a0;
  Rational delta;
};

// Exact m-th iterate of the recurrence.
Rational a_m_recurrence(const SequenceParams& params, unsigned m);

// Closed form of the delta = 0 case: a_m = 1 - (1 - a0) / (m (1 - a0) + 1).
// Agrees with a_m_recurrence(.., delta = 0) exactly.
Rational a_m_closed(const Rational& a0, unsigned m);

// Limit of the iterates, 1 / (1 + sqrt(delta)), valid when
// a0 <= 1/(1 + sqrt(delta)). Floating point (sqrt); everything else in
// this module stays exact.
double a_m_delta_limit(const Rational& delta);

// Exact test of the convergence precondition a0 <= 1/(1 + sqrt(delta)),
// rearranged to the rational inequality (1 - a0)^2 >= delta * a0^2.
bool limit_precondition_holds(const Rational& a0, const Rational& delta);

// Iterates the recurrence until successive values differ by less than
// `tolerance` (in double precision) or `step_cap` steps elapse.
struct LimitIteration {
  Rational value;
  unsigned long steps = 0;
  bool converged = false;
};

LimitIteration iterate_to_limit(const SequenceParams& params,
                                double tolerance = 1e-12,
                                unsigned long step_cap = 1000000);

// Smallest integer strictly greater than (1 - c)/(c * eps) + 1: the number
// of sampling times that guarantees a recurrence witness below it.
// Requires 0 < c <= 1 and 0 < eps <= 1.
long long recurrence_sample_bound(const Rational& c, const Rational& eps);

}  // namespace fgt
