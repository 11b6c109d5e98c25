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

#include "qseries/dsl/ast.hpp"

#include <array>
#include <utility>

#include "qseries/errors.hpp"

namespace qseries::dsl {

namespace {

constexpr std::array<std::pair<Builtin, std::string_view>, 14> kBuiltinNames{{
    {Builtin::kPhi, "phi"},
    {Builtin::kPsi, "psi"},
    {Builtin::kPhiProd, "phiProd"},
    {Builtin::kPsiProd, "psiProd"},
    {Builtin::kPhiMock, "phiMock"},
    {Builtin::kRho, "rho"},
    {Builtin::kMu, "mu"},
    {Builtin::kLambda, "lambda"},
    {Builtin::kA, "A"},
    {Builtin::kT, "T"},
    {Builtin::kK, "K"},
    {Builtin::kPartition, "p_partition"},
    {Builtin::kJacobiCube, "jacobiCube"},
    {Builtin::kCubeAnalog, "cubeAnalog"},
}};

std::shared_ptr<Expr> node(ExprKind kind) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  return e;
}

// Binding strength used by the printer; higher binds tighter.
int level(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kAdd:
    case ExprKind::kSub:
      return 1;
    case ExprKind::kMul:
    case ExprKind::kDiv:
      return 2;
    case ExprKind::kNeg:
      return 3;
    case ExprKind::kPow:
    case ExprKind::kQPower:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + to_string(e) + ")" : to_string(e);
}

std::string mono(Monomial m) {
  std::string s = m.sign < 0 ? "-q" : "q";
  if (m.exp != 1) s += "^" + std::to_string(m.exp);
  return s;
}

}  // namespace

std::string_view builtin_name(Builtin b) {
  for (const auto& [k, name] : kBuiltinNames) {
    if (k == b) return name;
  }
  return "?";
}

std::optional<Builtin> builtin_from_name(std::string_view name) {
  for (const auto& [k, n] : kBuiltinNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

ExprPtr make_integer(const mpz_class& value) {
  if (sgn(value) < 0) return make_neg(make_integer(-value));
  auto e = node(ExprKind::kInteger);
  e->integer = value;
  return e;
}

ExprPtr make_qpower(std::int64_t exponent) {
  auto e = node(ExprKind::kQPower);
  e->n1 = exponent;
  return e;
}

ExprPtr make_euler(std::int64_t dilation) {
  auto e = node(ExprKind::kEuler);
  e->n1 = dilation;
  return e;
}

ExprPtr make_builtin(Builtin b) {
  auto e = node(ExprKind::kBuiltin);
  e->builtin = b;
  return e;
}

ExprPtr make_theta(Monomial a, Monomial b, bool product_form) {
  auto e = node(product_form ? ExprKind::kThetaProd : ExprKind::kTheta);
  e->m1 = a;
  e->m2 = b;
  return e;
}

ExprPtr make_pochhammer(Monomial a, Monomial base, std::optional<std::int64_t> length) {
  auto e = node(ExprKind::kPochhammer);
  e->m1 = a;
  e->m2 = base;
  e->n1 = length ? *length : -1;
  return e;
}

ExprPtr make_ajp(std::int64_t j, std::int64_t p) {
  auto e = node(ExprKind::kAjp);
  e->n1 = j;
  e->n2 = p;
  return e;
}

ExprPtr make_neg(ExprPtr inner) {
  auto e = node(ExprKind::kNeg);
  e->args.push_back(std::move(inner));
  return e;
}

ExprPtr make_binary(ExprKind op, ExprPtr lhs, ExprPtr rhs) {
  if (op != ExprKind::kAdd && op != ExprKind::kSub && op != ExprKind::kMul && op != ExprKind::kDiv) {
    throw ArgumentError("make_binary: not a binary operator");
  }
  auto e = node(op);
  e->args = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr make_pow(ExprPtr base, std::int64_t exponent) {
  auto e = node(ExprKind::kPow);
  e->args.push_back(std::move(base));
  e->n1 = exponent;
  return e;
}

ExprPtr make_subst(ExprPtr inner, int sign, std::int64_t k) {
  auto e = node(ExprKind::kSubst);
  e->args.push_back(std::move(inner));
  e->n1 = k;
  e->n2 = sign < 0 ? -1 : 1;
  return e;
}

ExprPtr make_extract(ExprPtr inner, std::int64_t m, std::int64_t r) {
  auto e = node(ExprKind::kExtract);
  e->args.push_back(std::move(inner));
  e->n1 = m;
  e->n2 = r;
  return e;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kInteger:
      return e.integer.get_str();
    case ExprKind::kQPower:
      return e.n1 == 1 ? "q" : "q^" + std::to_string(e.n1);
    case ExprKind::kEuler:
      return "E[" + std::to_string(e.n1) + "]";
    case ExprKind::kBuiltin:
      return std::string(builtin_name(e.builtin));
    case ExprKind::kTheta:
      return "f(" + mono(e.m1) + ", " + mono(e.m2) + ")";
    case ExprKind::kThetaProd:
      return "fprod(" + mono(e.m1) + ", " + mono(e.m2) + ")";
    case ExprKind::kPochhammer:
      return "poch(" + mono(e.m1) + "; " + mono(e.m2) + ")_" +
             (e.n1 < 0 ? std::string("inf") : std::to_string(e.n1));
    case ExprKind::kAjp:
      return "ajp(" + std::to_string(e.n1) + ", " + std::to_string(e.n2) + ")";
    case ExprKind::kNeg:
      return "-" + wrap(*e.args[0], level(*e.args[0]) < 3);
    case ExprKind::kAdd:
    case ExprKind::kSub:
    case ExprKind::kMul:
    case ExprKind::kDiv: {
      const int own = level(e);
      const char* op = e.kind == ExprKind::kAdd   ? " + "
                       : e.kind == ExprKind::kSub ? " - "
                       : e.kind == ExprKind::kMul ? "*"
                                                  : "/";
      return wrap(*e.args[0], level(*e.args[0]) < own) + op + wrap(*e.args[1], level(*e.args[1]) <= own);
    }
    case ExprKind::kPow:
      return wrap(*e.args[0], level(*e.args[0]) < 5) + "^" + std::to_string(e.n1);
    case ExprKind::kSubst:
      return "subst(" + to_string(*e.args[0]) + ", " + std::to_string(e.n2) + ", " + std::to_string(e.n1) + ")";
    case ExprKind::kExtract:
      return "extract(" + to_string(*e.args[0]) + ", " + std::to_string(e.n1) + ", " + std::to_string(e.n2) + ")";
  }
  return "?";
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.n1 != b.n1 || a.n2 != b.n2 || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case ExprKind::kInteger:
      if (a.integer != b.integer) return false;
      break;
    case ExprKind::kBuiltin:
      if (a.builtin != b.builtin) return false;
      break;
    case ExprKind::kTheta:
    case ExprKind::kThetaProd:
    case ExprKind::kPochhammer:
      if (!(a.m1 == b.m1) || !(a.m2 == b.m2)) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

}  // namespace qseries::dsl
