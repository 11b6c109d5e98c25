// Copyright 2026 The qseries Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qseries/dsl/evaluator.hpp"

#include <algorithm>

#include "qseries/appell.hpp"
#include "qseries/dissect.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/theta.hpp"

namespace qseries::dsl {

namespace {

std::int64_t sat(std::int64_t a, std::int64_t b) { return saturating_add(a, b); }

std::int64_t sat_mul(std::int64_t a, std::int64_t k) {
  if (a >= kExact) return kExact;
  std::int64_t p = 0;
  if (__builtin_mul_overflow(a, k, &p)) return (a < 0) != (k < 0) ? -kExact : kExact;
  return std::clamp(p, -kExact, kExact);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

EvalError::Cause cause_of(const Error& e) {
  if (dynamic_cast<const NonUnitError*>(&e)) return EvalError::Cause::kNonUnit;
  if (dynamic_cast<const IntegralityError*>(&e)) return EvalError::Cause::kIntegrality;
  if (dynamic_cast<const PrecisionError*>(&e)) return EvalError::Cause::kPrecision;
  if (dynamic_cast<const ArgumentError*>(&e)) return EvalError::Cause::kArgument;
  return EvalError::Cause::kOther;
}

// Cap on how far past its valuation bound a divisor is probed.
constexpr std::int64_t kMaxProbe = 1 << 14;

}  // namespace

Evaluator::Evaluator(Ring ring) : ring_(std::move(ring)) {}

Evaluator::~Evaluator() = default;

Evaluator& Evaluator::probe() {
  if (ring_.is_rational()) return *this;
  if (!probe_) probe_ = std::make_unique<Evaluator>(Ring::rational());
  return *probe_;
}

Series Evaluator::eval(const Expr& e, std::int64_t order) { return eval_node(e, order); }

std::int64_t Evaluator::valuation_bound(const Expr& e) {
  const std::string key = to_string(e);
  if (auto it = bounds_.find(key); it != bounds_.end()) return it->second;
  std::int64_t b = 0;
  switch (e.kind) {
    case ExprKind::kInteger:
      b = sgn(e.integer) == 0 ? kExact : 0;
      break;
    case ExprKind::kQPower:
      b = e.n1;
      break;
    case ExprKind::kBuiltin:
      b = (e.builtin == Builtin::kPhiMock || e.builtin == Builtin::kMu) ? 1 : 0;
      break;
    case ExprKind::kEuler:
    case ExprKind::kTheta:
    case ExprKind::kThetaProd:
    case ExprKind::kPochhammer:
    case ExprKind::kAjp:
      b = 0;
      break;
    case ExprKind::kNeg:
      b = valuation_bound(*e.args[0]);
      break;
    case ExprKind::kAdd:
    case ExprKind::kSub:
      b = std::min(valuation_bound(*e.args[0]), valuation_bound(*e.args[1]));
      break;
    case ExprKind::kMul:
      b = sat(valuation_bound(*e.args[0]), valuation_bound(*e.args[1]));
      break;
    case ExprKind::kDiv: {
      const std::int64_t num = valuation_bound(*e.args[0]);
      b = num >= kExact ? kExact : sat(num, -exact_valuation(*e.args[1]));
      break;
    }
    case ExprKind::kPow:
      if (e.n1 == 0) {
        b = 0;
      } else if (e.n1 > 0) {
        b = sat_mul(valuation_bound(*e.args[0]), e.n1);
      } else {
        b = sat_mul(exact_valuation(*e.args[0]), e.n1);
      }
      break;
    case ExprKind::kSubst:
      b = sat_mul(valuation_bound(*e.args[0]), e.n1);
      break;
    case ExprKind::kExtract: {
      const std::int64_t inner = valuation_bound(*e.args[0]);
      b = inner >= kExact ? kExact : ceil_div(inner - e.n2, e.n1);
      break;
    }
  }
  bounds_.emplace(key, b);
  return b;
}

std::int64_t Evaluator::exact_valuation(const Expr& e) {
  const std::string key = to_string(e);
  if (auto it = valuations_.find(key); it != valuations_.end()) return it->second;
  Evaluator& p = probe();
  const std::int64_t lb = p.valuation_bound(e);
  if (lb >= kExact) throw EvalError("division by zero in `" + key + "`", EvalError::Cause::kNonUnit);
  for (std::int64_t extra = 8; extra <= kMaxProbe; extra *= 2) {
    const Series s = p.eval_node(e, lb + extra);
    if (!s.is_zero()) {
      valuations_.emplace(key, s.valuation());
      return s.valuation();
    }
    if (s.is_exact()) break;
  }
  throw EvalError("divisor `" + key + "` vanishes to every probed order", EvalError::Cause::kNonUnit);
}

Series Evaluator::eval_node(const Expr& e, std::int64_t need) {
  const std::string key = to_string(e);
  if (auto it = cache_.find(key); it != cache_.end() && it->second.prec() >= need) return it->second;
  Series s;
  try {
    s = compute(e, need);
  } catch (const EvalError&) {
    throw;
  } catch (const Error& err) {
    throw EvalError(std::string(err.what()) + " (in `" + key + "`)", cause_of(err));
  }
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    cache_.emplace(key, s);
  } else if (s.prec() > it->second.prec()) {
    it->second = s;
  }
  return s;
}

// 1/divisor, trusted below `need`.
Series Evaluator::reciprocal(const Expr& divisor, std::int64_t need) {
  const std::int64_t v = exact_valuation(divisor);
  const Series b = eval_node(divisor, sat(need, 2 * v));
  if (b.is_zero() || b.valuation() != v) {
    throw EvalError("leading coefficient of `" + to_string(divisor) + "` (at q^" + std::to_string(v) +
                        ") vanishes in " + ring_.descriptor(),
                    EvalError::Cause::kNonUnit);
  }
  if (b.is_exact() && b.stored_terms() == 1) {
    const Scalar c = b.coeff(v);
    return Series::monomial(ring_, Scalar(1) / c, -v);
  }
  return invert(b, need);
}

Series Evaluator::compute(const Expr& e, std::int64_t need) {
  const std::int64_t p = std::max<std::int64_t>(need, 1);
  switch (e.kind) {
    case ExprKind::kInteger:
      return Series::constant(ring_, Scalar(e.integer));
    case ExprKind::kQPower:
      return Series::monomial(ring_, 1, e.n1);
    case ExprKind::kEuler:
      return euler(e.n1, p, ring_);
    case ExprKind::kBuiltin:
      switch (e.builtin) {
        case Builtin::kPhi:
          return phi_sum(p, ring_);
        case Builtin::kPsi:
          return psi_sum(p, ring_);
        case Builtin::kPhiProd:
          return phi_prod(p, ring_);
        case Builtin::kPsiProd:
          return psi_prod(p, ring_);
        case Builtin::kPhiMock:
          return phi_mock(p, ring_);
        case Builtin::kRho:
          return rho(p, ring_);
        case Builtin::kMu:
          return mu(p, ring_);
        case Builtin::kLambda:
          return lambda_fn(p, ring_);
        case Builtin::kA:
          return A_series(p, ring_);
        case Builtin::kT:
          return rr_T(p, ring_);
        case Builtin::kK:
          return rr_K(p, ring_);
        case Builtin::kPartition:
          return pochhammer_inf_inverse(Monomial::q(1), Monomial::q(1), p, ring_);
        case Builtin::kJacobiCube:
          return jacobi_cube(p, ring_);
        case Builtin::kCubeAnalog:
          return cube_analog(p, ring_);
      }
      break;
    case ExprKind::kTheta:
      return f_sum(e.m1, e.m2, p, ring_);
    case ExprKind::kThetaProd:
      return f_prod(e.m1, e.m2, p, ring_);
    case ExprKind::kPochhammer:
      if (e.n1 < 0) return pochhammer_inf(e.m1, e.m2, p, ring_);
      return pochhammer_finite(e.m1, e.m2, e.n1, p, ring_);
    case ExprKind::kAjp:
      return a_jp(e.n1, e.n2, p, ring_);
    case ExprKind::kNeg:
      return neg(eval_node(*e.args[0], need));
    case ExprKind::kAdd:
      return add(eval_node(*e.args[0], need), eval_node(*e.args[1], need));
    case ExprKind::kSub:
      return sub(eval_node(*e.args[0], need), eval_node(*e.args[1], need));
    case ExprKind::kMul: {
      const std::int64_t la = valuation_bound(*e.args[0]);
      const std::int64_t lb = valuation_bound(*e.args[1]);
      if (la >= kExact || lb >= kExact) return Series(ring_, kExact);
      const Series a = eval_node(*e.args[0], sat(need, -lb));
      const Series b = eval_node(*e.args[1], sat(need, -la));
      return mul(a, b);
    }
    case ExprKind::kDiv: {
      const std::int64_t la = valuation_bound(*e.args[0]);
      if (la >= kExact) return Series(ring_, kExact);
      const Series inv = reciprocal(*e.args[1], sat(need, -la));
      const Series a = eval_node(*e.args[0], sat(need, -inv.valuation()));
      return mul(a, inv);
    }
    case ExprKind::kPow: {
      const Expr& base = *e.args[0];
      const std::int64_t k = e.n1;
      if (k == 0) return Series::one(ring_);
      if (k > 0) {
        const std::int64_t lb = valuation_bound(base);
        if (lb >= kExact) return Series(ring_, kExact);
        return pow(eval_node(base, sat(need, -sat_mul(lb, k - 1))), k);
      }
      const std::int64_t v = exact_valuation(base);
      const Series inv = reciprocal(base, sat(need, sat_mul(v, -k - 1)));
      return pow(inv, -k);
    }
    case ExprKind::kSubst: {
      const Series inner = eval_node(*e.args[0], need >= kExact ? kExact : ceil_div(need, e.n1));
      return subst(inner, static_cast<int>(e.n2), e.n1);
    }
    case ExprKind::kExtract: {
      const Series inner = eval_node(*e.args[0], sat(sat_mul(need, e.n1), e.n2));
      return extract(inner, e.n1, e.n2);
    }
  }
  throw EvalError("unhandled expression kind", EvalError::Cause::kOther);
}

Series evaluate(const Expr& e, std::int64_t order, const Ring& ring) {
  Evaluator ev(ring);
  return ev.eval(e, order);
}

}  // namespace qseries::dsl
