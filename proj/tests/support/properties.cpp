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

#include "properties.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "qseries/appell.hpp"
#include "qseries/dissect.hpp"
#include "qseries/dsl/evaluator.hpp"
#include "qseries/dsl/parser.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"
#include "qseries/theta.hpp"

namespace props {

namespace {

using qseries::Monomial;
using qseries::Ring;
using qseries::Scalar;
using qseries::Series;

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return range(0, 1) == 1; }

  Scalar scalar(const Ring& ring) {
    if (ring.is_rational() && range(0, 3) == 0) return Scalar(range(-30, 30), range(1, 7));
    return Scalar(range(-30, 30));
  }

  // A series with the given valuation and precision; the leading
  // coefficient is +-1 so it stays a unit in every ring.
  Series series(const Ring& ring, std::int64_t valuation, std::int64_t prec) {
    std::vector<Scalar> c;
    for (std::int64_t n = valuation; n < prec; ++n) c.push_back(scalar(ring));
    if (!c.empty()) c[0] = coin() ? 1 : -1;
    return Series::from_coefficients(ring, valuation, c, prec);
  }

  Ring ring() {
    switch (range(0, 3)) {
      case 0:
        return Ring::rational();
      case 1:
        return Ring::modular(125);
      default:
        return Ring::integer();
    }
  }

  Monomial monomial(std::int64_t max_exp) { return Monomial(coin() ? 1 : -1, range(1, max_exp)); }

 private:
  std::mt19937 rng_;
};

Result fail(Result r, const std::string& what) {
  r.ok = false;
  r.message = what;
  return r;
}

Result done(Result r, int cases) {
  r.message = std::to_string(cases) + " cases";
  return r;
}

std::string describe(const Series& f) { return f.to_string(8); }

bool same(const Series& a, const Series& b, std::int64_t n) {
  return qseries::eq_to_order(a, b, n) && std::min(a.prec(), b.prec()) >= n;
}

}  // namespace

Result ring_axioms(std::uint32_t seed, int triples, std::int64_t order) {
  Result r{"ring axioms", true, ""};
  Gen g(seed);
  for (int i = 0; i < triples; ++i) {
    const Ring ring = g.ring();
    const Series a = g.series(ring, g.range(-2, 3), order);
    const Series b = g.series(ring, g.range(-2, 3), order);
    const Series c = g.series(ring, g.range(-2, 3), order);
    const std::int64_t n = order - 8;
    const std::string where = " (triple " + std::to_string(i) + " over " + ring.descriptor() + ")";
    if (!same(a + b, b + a, n)) return fail(r, "add not commutative" + where);
    if (!same((a + b) + c, a + (b + c), n)) return fail(r, "add not associative" + where);
    if (!same(a * b, b * a, n - 4)) return fail(r, "mul not commutative" + where);
    if (!same((a * b) * c, a * (b * c), n - 8)) return fail(r, "mul not associative" + where);
    if (!same(a * (b + c), a * b + a * c, n - 8)) return fail(r, "mul does not distribute" + where);
    if (!same(a - a, Series(ring, n), n)) return fail(r, "a - a is not zero" + where);
  }
  return done(r, triples);
}

Result invert_roundtrip(std::uint32_t seed, int cases) {
  Result r{"invert", true, ""};
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const Ring ring = g.ring();
    const std::int64_t v = g.range(-3, 4);
    const std::int64_t p = g.range(20, 80);
    const Series f = g.series(ring, v, p);
    const Series prod = f * qseries::invert(f);
    if (prod.prec() != p - v) return fail(r, "f * 1/f has precision " + std::to_string(prod.prec()));
    if (!same(prod, Series::one(ring), p - v)) return fail(r, "f * 1/f != 1 for " + describe(f));
  }
  return done(r, cases);
}

Result subst_homomorphism(std::uint32_t seed, int cases) {
  Result r{"subst homomorphism", true, ""};
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const Ring ring = g.ring();
    const Series a = g.series(ring, g.range(-2, 3), g.range(10, 60));
    const Series b = g.series(ring, g.range(-2, 3), g.range(10, 60));
    const int sign = g.coin() ? 1 : -1;
    const std::int64_t k = g.range(1, 5);
    const Series lhs = qseries::subst(a * b, sign, k);
    const Series rhs = qseries::subst(a, sign, k) * qseries::subst(b, sign, k);
    if (lhs.prec() != rhs.prec() || !qseries::eq_to_order(lhs, rhs, lhs.prec())) {
      return fail(r, "subst(a*b) != subst(a)*subst(b) at k=" + std::to_string(sign * k));
    }
    const Series sum_l = qseries::subst(a + b, sign, k);
    const Series sum_r = qseries::subst(a, sign, k) + qseries::subst(b, sign, k);
    if (!qseries::eq_to_order(sum_l, sum_r, sum_l.prec())) return fail(r, "subst(a+b) != subst(a)+subst(b)");
  }
  return done(r, cases);
}

Result to_ring_commutation(std::uint32_t seed, int cases) {
  Result r{"to_ring commutation", true, ""};
  Gen g(seed);
  for (std::int64_t m : {5, 25, 125}) {
    const Ring target = Ring::modular(m);
    for (int i = 0; i < cases; ++i) {
      const Series a = g.series(Ring::integer(), g.range(-2, 3), g.range(10, 70));
      const Series b = g.series(Ring::integer(), g.range(-2, 3), g.range(10, 70));
      const Series ab = qseries::to_ring(a * b, target);
      const Series ab2 = qseries::to_ring(a, target) * qseries::to_ring(b, target);
      if (ab.prec() != ab2.prec() || !qseries::eq_to_order(ab, ab2, ab.prec())) {
        return fail(r, "to_ring(a*b) != to_ring(a)*to_ring(b) mod " + std::to_string(m));
      }
      const Series s = qseries::to_ring(a + b, target);
      const Series s2 = qseries::to_ring(a, target) + qseries::to_ring(b, target);
      if (!qseries::eq_to_order(s, s2, s.prec())) return fail(r, "to_ring(a+b) mismatch mod " + std::to_string(m));
      const Series inv = qseries::to_ring(qseries::invert(a), target);
      const Series inv2 = qseries::invert(qseries::to_ring(a, target));
      if (!qseries::eq_to_order(inv, inv2, inv.prec())) return fail(r, "to_ring(1/a) mismatch mod " + std::to_string(m));
    }
  }
  return done(r, 3 * cases);
}

Result precision_honesty(std::uint32_t seed, int cases) {
  Result r{"precision honesty", true, ""};
  Gen g(seed);
  using Builder = std::function<Series(std::int64_t)>;
  const std::vector<std::pair<std::string, Builder>> pipelines = {
      {"eta quotient", [](std::int64_t p) { return qseries::eta_quotient({{2, 8}, {1, -7}}, p); }},
      {"T^5 - q^2/T^5", [](std::int64_t p) {
         const Series t = qseries::rr_T(p);
         return qseries::pow(t, 5) - qseries::shift(qseries::pow(t, -5), 2);
       }},
      {"phiMock mod 25", [](std::int64_t p) { return qseries::phi_mock(p, Ring::modular(25)); }},
      {"ajp(3,10)", [](std::int64_t p) { return qseries::a_jp(3, 10, p); }},
      {"A(q)", [](std::int64_t p) { return qseries::A_series(p); }},
      {"fprod(-q^3,-q^7)/E1", [](std::int64_t p) {
         return qseries::f_prod(Monomial::minus_q(3), Monomial::minus_q(7), p) *
                qseries::invert(qseries::euler(1, p));
       }},
      {"extract(1/E1, 5, 4)", [](std::int64_t p) {
         return qseries::extract(qseries::invert(qseries::euler(1, 5 * p)), 5, 4);
       }},
  };
  for (int i = 0; i < cases; ++i) {
    const auto& [name, build] = pipelines[static_cast<std::size_t>(i) % pipelines.size()];
    const std::int64_t p = g.range(5, 60);
    const std::int64_t p2 = p + g.range(1, 60);
    const Series lo = build(p);
    const Series hi = build(p2);
    if (lo.prec() < p || hi.prec() < p2) return fail(r, name + " under-delivers precision");
    if (!qseries::eq_to_order(lo, hi, p)) return fail(r, name + " changes coefficients below " + std::to_string(p));
  }
  return done(r, cases);
}

Result pochhammer_step(std::uint32_t seed, int cases) {
  Result r{"pochhammer step", true, ""};
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const Ring ring = g.ring();
    const Monomial a = g.monomial(6);
    const std::int64_t base = g.range(1, 5);
    const std::int64_t n = g.range(0, 8);
    const std::int64_t p = g.range(10, 80);
    const Series lhs = qseries::pochhammer_finite(a, base, n, p, ring) *
                       (Series::one(ring) - Series::monomial(ring, a.sign, a.exp + base * n));
    const Series rhs = qseries::pochhammer_finite(a, base, n + 1, p, ring);
    if (!same(lhs, rhs, p)) {
      return fail(r, "(a;q^b)_n (1 - a q^{bn}) != (a;q^b)_{n+1} for a=" + a.to_string() +
                         " b=" + std::to_string(base) + " n=" + std::to_string(n));
    }
  }
  return done(r, cases);
}

Result pochhammer_inf_vs_finite(std::uint32_t seed, int cases) {
  Result r{"pochhammer inf vs finite", true, ""};
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const Monomial a = g.monomial(5);
    const std::int64_t base = g.range(1, 6);
    const std::int64_t p = g.range(20, 100);
    const Series inf = qseries::pochhammer_inf(a, base, p);
    for (std::int64_t n = 0; n < 12; ++n) {
      const Series fin = qseries::pochhammer_finite(a, base, n, p);
      const std::int64_t upto = std::min(p, a.exp + n * base);
      if (!qseries::eq_to_order(inf, fin, upto)) {
        return fail(r, "(a;q^b)_inf and (a;q^b)_" + std::to_string(n) + " differ below q^" + std::to_string(upto));
      }
    }
  }
  return done(r, cases);
}

Result fprod_equals_fsum(std::uint32_t seed, int pairs, std::int64_t order) {
  Result r{"f_prod = f_sum", true, ""};
  Gen g(seed);
  for (int i = 0; i < pairs; ++i) {
    const Monomial a = g.monomial(12);
    const Monomial b = g.monomial(12);
    const Series s = qseries::f_sum(a, b, order);
    const Series p = qseries::f_prod(a, b, order);
    if (!same(s, p, order)) return fail(r, "f(" + a.to_string() + ", " + b.to_string() + ")");
  }
  return done(r, pairs);
}

Result fsum_symmetry(std::uint32_t seed, int pairs) {
  Result r{"f_sum symmetry", true, ""};
  Gen g(seed);
  for (int i = 0; i < pairs; ++i) {
    const Monomial a = g.monomial(12);
    const Monomial b = g.monomial(12);
    if (!same(qseries::f_sum(a, b, 120), qseries::f_sum(b, a, 120), 120)) {
      return fail(r, "f(a,b) != f(b,a) for " + a.to_string() + ", " + b.to_string());
    }
  }
  return done(r, pairs);
}

Result reconstruct_extract(std::uint32_t seed, int cases) {
  Result r{"reconstruct of extract", true, ""};
  Gen g(seed);
  for (std::int64_t m : {2, 5, 10}) {
    for (int i = 0; i < cases; ++i) {
      const Ring ring = g.ring();
      const std::int64_t p = g.range(1, 150);
      const Series f = g.series(ring, g.range(0, std::min<std::int64_t>(p - 1, 6)), p);
      const std::vector<Series> parts = qseries::dissect(f, m);
      const Series back = qseries::reconstruct(parts);
      if (!same(back, f, p)) {
        return fail(r, "m=" + std::to_string(m) + " prec=" + std::to_string(p) + ": " + describe(f));
      }
    }
  }
  return done(r, 3 * cases);
}

Result extract_dilated_factor(std::uint32_t seed, int cases) {
  Result r{"extract passes dilated factors", true, ""};
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const Ring ring = g.ring();
    const std::int64_t m = g.range(2, 7);
    const std::int64_t res = g.range(0, m - 1);
    const Series f = g.series(ring, g.range(0, 4), g.range(30, 120));
    const Series h = g.series(ring, 0, g.range(10, 40));
    const Series lhs = qseries::extract(f * qseries::subst(h, 1, m), m, res);
    const Series rhs = qseries::extract(f, m, res) * h;
    const std::int64_t n = std::min(lhs.prec(), rhs.prec());
    if (!qseries::eq_to_order(lhs, rhs, n)) return fail(r, "m=" + std::to_string(m) + " r=" + std::to_string(res));
  }
  return done(r, cases);
}

Result extract_shift(std::uint32_t seed, int cases) {
  Result r{"extract of shift", true, ""};
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const Ring ring = g.ring();
    const std::int64_t m = g.range(2, 10);
    const std::int64_t res = g.range(0, m - 1);
    const Series f = g.series(ring, g.range(0, 4), g.range(30, 120));
    const Series lhs = qseries::extract(qseries::shift(f, m), m, res);
    const Series rhs = qseries::shift(qseries::extract(f, m, res), 1);
    if (!same(lhs, rhs, rhs.prec())) return fail(r, "m=" + std::to_string(m) + " r=" + std::to_string(res));
  }
  return done(r, cases);
}

Result ajp12_is_twice_phi(std::int64_t count) {
  Result r{"2a(n) = a_{1,2}(n)", true, ""};
  const Series lhs = qseries::a_jp(1, 2, count);
  const Series rhs = qseries::scale(qseries::phi_mock(count), 2);
  if (auto n = qseries::first_difference(lhs, rhs, count)) return fail(r, "differs at n=" + std::to_string(*n));
  if (std::min(lhs.prec(), rhs.prec()) < count) return fail(r, "precision below " + std::to_string(count));
  r.message = "n < " + std::to_string(count);
  return r;
}

namespace {

namespace d = qseries::dsl;

d::ExprPtr random_expr(Gen& g, int depth) {
  if (depth == 0 || g.range(0, 3) == 0) {
    switch (g.range(0, 8)) {
      case 0:
        return d::make_integer(g.range(0, 1000));
      case 1:
        return d::make_qpower(g.range(-5, 9));
      case 2:
        return d::make_euler(g.range(1, 40));
      case 3:
        return d::make_builtin(static_cast<d::Builtin>(g.range(0, 13)));
      case 4:
        return d::make_theta(g.monomial(9), g.monomial(9), g.coin());
      case 5: {
        std::optional<std::int64_t> n;
        if (g.coin()) n = g.range(0, 6);
        return d::make_pochhammer(g.monomial(5), Monomial::q(g.range(1, 5)), n);
      }
      case 6:
        return d::make_ajp(g.range(1, 3), g.range(4, 10));
      default:
        return d::make_builtin(d::Builtin::kPhiMock);
    }
  }
  switch (g.range(0, 8)) {
    case 0:
      return d::make_neg(random_expr(g, depth - 1));
    case 1:
      return d::make_binary(d::ExprKind::kAdd, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 2:
      return d::make_binary(d::ExprKind::kSub, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 3:
      return d::make_binary(d::ExprKind::kMul, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 4:
      return d::make_binary(d::ExprKind::kDiv, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 5:
      return d::make_pow(random_expr(g, depth - 1), g.range(-4, 6));
    case 6:
      return d::make_subst(random_expr(g, depth - 1), g.coin() ? 1 : -1, g.range(1, 6));
    default: {
      const std::int64_t m = g.range(2, 10);
      return d::make_extract(random_expr(g, depth - 1), m, g.range(0, m - 1));
    }
  }
}

}  // namespace

Result parse_print_roundtrip(std::uint32_t seed, int cases) {
  Result r{"parse of print", true, ""};
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const d::ExprPtr e = random_expr(g, 4);
    const std::string text = d::to_string(*e);
    d::ExprPtr back;
    try {
      back = d::parse_expression(text);
    } catch (const qseries::Error& err) {
      return fail(r, "'" + text + "' does not parse: " + err.what());
    }
    if (!d::structurally_equal(*e, *back)) return fail(r, "'" + text + "' reparses as '" + d::to_string(*back) + "'");
  }
  return done(r, cases);
}

Result eval_precision_monotone(std::uint32_t seed, int cases) {
  Result r{"eval precision monotone", true, ""};
  Gen g(seed);
  const std::vector<std::string> pool = {
      "E[2]^8/E[1]^7",
      "extract(phiMock, 2, 1)",
      "q^-1*phiMock(q^3) + E[2]^2/E[3]",
      "T^5 - q^2/T^5",
      "f(q, q^9)^2*E[10]^5/(f(-q, -q^9)^2*E[20]^4)",
      "extract(E[5]*E[10]^2/E[2]^2, 5, 1)",
      "ajp(1, 6)",
      "phi(-q^5)/phi(-q)",
      "rho - 2*q^-1*phiMock(q^3)",
      "mu*lambda + psi^3",
  };
  for (int i = 0; i < cases; ++i) {
    const std::string text = pool[static_cast<std::size_t>(g.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
    const Ring ring = g.coin() ? Ring::rational() : Ring::modular(125);
    const d::ExprPtr e = d::parse_expression(text);
    const std::int64_t n = g.range(1, 50);
    const std::int64_t n2 = n + g.range(1, 50);
    const Series lo = d::evaluate(*e, n, ring);
    const Series hi = d::evaluate(*e, n2, ring);
    if (lo.prec() < n || hi.prec() < n2) return fail(r, text + " under-delivers precision");
    if (!qseries::eq_to_order(lo, hi, n)) return fail(r, text + " changes below q^" + std::to_string(n));
  }
  return done(r, cases);
}

std::vector<Result> all(std::uint32_t seed) {
  return {
      ring_axioms(seed),
      invert_roundtrip(seed + 1),
      subst_homomorphism(seed + 2),
      to_ring_commutation(seed + 3),
      precision_honesty(seed + 4),
      pochhammer_step(seed + 5),
      pochhammer_inf_vs_finite(seed + 6),
      fprod_equals_fsum(seed + 7),
      fsum_symmetry(seed + 8),
      reconstruct_extract(seed + 9),
      extract_dilated_factor(seed + 10),
      extract_shift(seed + 11),
      ajp12_is_twice_phi(),
      parse_print_roundtrip(seed + 12),
      eval_precision_monotone(seed + 13),
  };
}

}  // namespace props
