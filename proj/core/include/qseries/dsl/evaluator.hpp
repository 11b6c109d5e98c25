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

#ifndef QSERIES_DSL_EVALUATOR_HPP
#define QSERIES_DSL_EVALUATOR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>

#include "qseries/dsl/ast.hpp"
#include "qseries/errors.hpp"
#include "qseries/ring.hpp"
#include "qseries/series.hpp"

namespace qseries::dsl {

// A math-module error annotated with the subexpression that raised it.
class EvalError : public Error {
 public:
  enum class Cause { kNonUnit, kIntegrality, kPrecision, kArgument, kOther };

  EvalError(const std::string& message, Cause cause) : Error(message), cause_(cause) {}

  Cause cause() const { return cause_; }

 private:
  Cause cause_;
};

// Evaluates expression trees to truncated series over one ring.
//
// Precision is demand-driven: each node is asked for the exponent bound its
// parent needs and asks its children for whatever that implies (products
// account for the other factor's valuation, quotients for the divisor's).
// Divisor valuations are found by probing the divisor over the rationals, so
// a divisor whose leading coefficient vanishes modulo m is reported instead
// of silently shifting the valuation.
//
// Results are memoized per structurally identical subtree. An Evaluator is
// not thread-safe; use one per thread.
class Evaluator {
 public:
  explicit Evaluator(Ring ring);
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  const Ring& ring() const { return ring_; }

  // All coefficients of q^n with n < order are trusted in the result.
  Series eval(const Expr& e, std::int64_t order);

  // A lower bound on the valuation of e (kExact for a literal zero).
  std::int64_t valuation_bound(const Expr& e);

  // The valuation of e, determined over the rationals.
  std::int64_t exact_valuation(const Expr& e);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  Series eval_node(const Expr& e, std::int64_t need);
  Series compute(const Expr& e, std::int64_t need);
  Series reciprocal(const Expr& divisor, std::int64_t need);
  Evaluator& probe();

  Ring ring_;
  std::unordered_map<std::string, Series> cache_;
  std::unordered_map<std::string, std::int64_t> bounds_;
  std::unordered_map<std::string, std::int64_t> valuations_;
  std::unique_ptr<Evaluator> probe_;
};

// One-shot convenience wrapper.
Series evaluate(const Expr& e, std::int64_t order, const Ring& ring);

}  // namespace qseries::dsl

#endif  // QSERIES_DSL_EVALUATOR_HPP
