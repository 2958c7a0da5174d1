#include "fgt/sequences.hpp"

#include <cmath>
#include <cstdlib>

#include "fgt/errors.hpp"

namespace fgt {

namespace {

void validate(const SequenceParams& params) {
  if (!(params.a0 > 0 && params.a0 < 1)) {
    throw Error("recurrence requires 0 < a0 < 1");
  }
  if (!(params.delta >= 0 && params.delta < 1)) {
    throw Error("recurrence requires 0 <= delta < 1");
  }
}

Rational step(const Rational& a, const Rational& one_minus_delta) {
  return Rational(1) / (Rational(2) - a * one_minus_delta);
}

}  // namespace

Rational a_m_recurrence(const SequenceParams& params, unsigned m) {
  validate(params);
  Rational one_minus_delta = Rational(1) - params.delta;
  Rational a = params.a0;
  for (unsigned i = 0; i < m; ++i) a = step(a, one_minus_delta);
  return a;
}

Rational a_m_closed(const Rational& a0, unsigned m) {
  if (!(a0 > 0 && a0 < 1)) throw Error("closed form requires 0 < a0 < 1");
  Rational one_minus = Rational(1) - a0;
  return Rational(1) - one_minus / (Rational(m) * one_minus + 1);
}

double a_m_delta_limit(const Rational& delta) {
  if (!(delta >= 0 && delta < 1)) throw Error("limit requires 0 <= delta < 1");
  return 1.0 / (1.0 + std::sqrt(delta.convert_to<double>()));
}

bool limit_precondition_holds(const Rational& a0, const Rational& delta) {
  Rational one_minus = Rational(1) - a0;
  return one_minus * one_minus >= delta * a0 * a0;
}

LimitIteration iterate_to_limit(const SequenceParams& params, double tolerance,
                                unsigned long step_cap) {
  validate(params);
  Rational one_minus_delta = Rational(1) - params.delta;
  LimitIteration out;
  out.value = params.a0;
  while (out.steps < step_cap) {
    Rational next = step(out.value, one_minus_delta);
    ++out.steps;
    bool settled =
        std::fabs((next - out.value).convert_to<double>()) < tolerance;
    out.value = next;
    if (settled) {
      out.converged = true;
      break;
    }
  }
  return out;
}

long long recurrence_sample_bound(const Rational& c, const Rational& eps) {
  if (!(c > 0 && c <= 1)) throw Error("sample bound requires 0 < c <= 1");
  if (!(eps > 0 && eps <= 1)) throw Error("sample bound requires 0 < eps <= 1");
  Rational value = (Rational(1) - c) / (c * eps) + 1;
  // Smallest integer strictly greater than `value` (value > 0 here).
  Integer floor = numerator(value) / denominator(value);
  Integer bound = floor + 1;
  if (bound > Integer(1) << 62) {
    throw ResourceError("recurrence sample bound does not fit in 63 bits");
  }
  return bound.convert_to<long long>();
}

}  // namespace fgt
