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

#ifndef QSERIES_DSL_AST_HPP
#define QSERIES_DSL_AST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qseries/monomial.hpp"
#include "qseries/ring.hpp"

namespace qseries::dsl {

enum class Builtin {
  kPhi,         // sum q^{j^2}
  kPsi,         // sum q^{j(j+1)/2}
  kPhiProd,     // E2^5/(E1^2 E4^2)
  kPsiProd,     // E2^2/E1
  kPhiMock,     // the Appell-Lerch sum of a(n)
  kRho,
  kMu,
  kLambda,
  kA,           // A(q)
  kT,           // Rogers-Ramanujan quotient T(q)
  kK,           // E2 E5^5 / (E1 E10^5)
  kPartition,   // 1/E1
  kJacobiCube,  // sum (-1)^k (2k+1) q^{k(k+1)/2}
  kCubeAnalog,  // sum (3n+1) q^{3n^2+2n}
};

std::string_view builtin_name(Builtin b);
std::optional<Builtin> builtin_from_name(std::string_view name);

enum class ExprKind {
  kInteger,     // integer
  kQPower,      // q^n1
  kEuler,       // E[n1]
  kBuiltin,     // builtin
  kTheta,       // f(m1, m2)
  kThetaProd,   // fprod(m1, m2)
  kPochhammer,  // poch(m1; m2)_n1, n1 < 0 for _inf
  kAjp,         // ajp(n1, n2)
  kNeg,         // -args[0]
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,      // args[0]^n1
  kSubst,    // subst(args[0], n2, n1): q -> n2 * q^n1
  kExtract,  // extract(args[0], n1, n2)
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::kInteger;
  mpz_class integer = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  Builtin builtin = Builtin::kPhi;
  Monomial m1;
  Monomial m2;
  std::vector<ExprPtr> args;
};

ExprPtr make_integer(const mpz_class& value);
ExprPtr make_qpower(std::int64_t exponent);
ExprPtr make_euler(std::int64_t dilation);
ExprPtr make_builtin(Builtin b);
ExprPtr make_theta(Monomial a, Monomial b, bool product_form = false);
ExprPtr make_pochhammer(Monomial a, Monomial base, std::optional<std::int64_t> length);
ExprPtr make_ajp(std::int64_t j, std::int64_t p);
ExprPtr make_neg(ExprPtr e);
ExprPtr make_binary(ExprKind op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_pow(ExprPtr base, std::int64_t exponent);
ExprPtr make_subst(ExprPtr e, int sign, std::int64_t k);
ExprPtr make_extract(ExprPtr e, std::int64_t m, std::int64_t r);

// Canonical text that parses back to a structurally equal tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace qseries::dsl

#endif  // QSERIES_DSL_AST_HPP
