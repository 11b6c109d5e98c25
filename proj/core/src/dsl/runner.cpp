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

#include "qseries/dsl/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "qseries/dsl/evaluator.hpp"

namespace qseries::dsl {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t witness_count(const Progression& p, std::int64_t trusted) {
  if (trusted <= p.b) return 0;
  return (trusted - 1 - p.b) / p.a + 1;
}

std::string scalar_text(const Scalar& c) { return c.get_str(); }

// Evaluates over `first`, falling back to the integers and then the rationals
// when a divisor is not invertible or a coefficient is not integral.
Series eval_with_fallback(const Expr& e, std::int64_t order, const Ring& first, Ring& used) {
  std::vector<Ring> chain{first};
  if (first.is_modular()) chain.push_back(Ring::integer());
  if (!first.is_rational()) chain.push_back(Ring::rational());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    try {
      used = chain[i];
      Evaluator ev(chain[i]);
      return ev.eval(e, order);
    } catch (const EvalError& err) {
      const bool retry = err.cause() == EvalError::Cause::kNonUnit ||
                         err.cause() == EvalError::Cause::kIntegrality;
      if (!retry || i + 1 == chain.size()) throw;
    }
  }
  throw EvalError("no ring could evaluate the expression", EvalError::Cause::kOther);
}

void run_verify(const Statement& s, const RunOptions& o, Report& r) {
  const Ring ring = s.ring.value_or(o.ring.value_or(Ring::integer()));
  r.order = o.order.value_or(s.order.value_or(o.default_order));
  r.ring = ring.descriptor();
  Evaluator ev(ring);
  const Series lhs = ev.eval(*s.lhs, r.order);
  const Series rhs = ev.eval(*s.rhs, r.order);
  const std::int64_t trusted = std::min({r.order, lhs.prec(), rhs.prec()});
  if (auto n = first_difference(lhs, rhs, trusted)) {
    r.verdict = Verdict::kFail;
    r.detail = "q^" + std::to_string(*n) + ": lhs " + scalar_text(lhs.coeff(*n)) + ", rhs " +
               scalar_text(rhs.coeff(*n));
  } else if (trusted < r.order) {
    r.verdict = Verdict::kInsufficientPrecision;
    r.detail = "agree below q^" + std::to_string(trusted) + " only";
  } else {
    r.verdict = Verdict::kPass;
    r.detail = "agree below q^" + std::to_string(trusted);
  }
}

void run_congruence(const Statement& s, const RunOptions& o, Report& r) {
  const Progression& p = s.progression;
  const std::int64_t needed = p.a * (s.witnesses - 1) + p.b + 1;
  r.order = o.order.value_or(s.order.value_or(needed));
  Ring first = s.ring.value_or(o.ring.value_or(Ring::modular(p.modulus)));
  if (first.is_modular() && first.modulus() % p.modulus != 0) {
    throw ArgumentError("ring " + first.descriptor() + " cannot decide congruences mod " +
                        std::to_string(p.modulus));
  }
  Ring used = first;
  const Series f = eval_with_fallback(*s.lhs, r.order, first, used);
  r.ring = used.descriptor();
  const std::int64_t trusted = std::min(r.order, f.prec());
  const std::int64_t count = witness_count(p, trusted);
  for (std::int64_t n = 0; n < count; ++n) {
    const std::int64_t k = p.a * n + p.b;
    const Scalar c = f.coeff(k);
    if (!divisible(c, p.modulus)) {
      r.verdict = Verdict::kFail;
      r.detail = "q^" + std::to_string(k) + ": coefficient " + scalar_text(c) + " is not 0 mod " +
                 std::to_string(p.modulus);
      return;
    }
  }
  if (count < s.witnesses) {
    r.verdict = Verdict::kInsufficientPrecision;
    r.detail = std::to_string(count) + " of " + std::to_string(s.witnesses) + " witnesses trusted";
  } else {
    r.verdict = Verdict::kPass;
    r.detail = std::to_string(count) + " witnesses";
  }
}

std::string progression_list(std::span<const Progression> ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(ps[i]);
  }
  return out + "}";
}

void run_scan(const Statement& s, const RunOptions& o, Report& r) {
  r.order = o.order.value_or(s.order.value_or(s.max_a * s.min_witnesses));
  std::int64_t lcm = 1;
  for (std::int64_t m : s.moduli) lcm = std::lcm(lcm, m);
  const Ring first = s.ring.value_or(o.ring.value_or(Ring::modular(lcm)));
  if (first.is_modular() && first.modulus() % lcm != 0) {
    throw ArgumentError("ring " + first.descriptor() + " cannot decide congruences mod " +
                        std::to_string(lcm));
  }
  Ring used = first;
  const Series f = eval_with_fallback(*s.lhs, r.order, first, used);
  r.ring = used.descriptor();
  const std::int64_t trusted = std::min(r.order, f.prec());
  r.progressions = scan_progressions(f, s.max_a, s.moduli, s.min_witnesses, trusted);
  const std::string found = progression_list(r.progressions);
  if (s.expect) {
    std::vector<Progression> want = *s.expect;
    std::sort(want.begin(), want.end());
    if (want == r.progressions) {
      r.verdict = Verdict::kPass;
      r.detail = "found " + found;
    } else {
      r.verdict = Verdict::kFail;
      r.detail = "found " + found + ", expected " + progression_list(want);
    }
  } else {
    r.verdict = Verdict::kPass;
    r.detail = "found " + found;
  }
  if (r.verdict == Verdict::kPass && trusted < s.max_a * s.min_witnesses) {
    r.verdict = Verdict::kInsufficientPrecision;
    r.detail += " below q^" + std::to_string(trusted);
  }
}

}  // namespace

bool divisible(const Scalar& c, std::int64_t m) {
  const mpz_class mm(static_cast<long>(m));
  if (mpz_divisible_p(c.get_num_mpz_t(), mm.get_mpz_t()) == 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c.get_den_mpz_t(), mm.get_mpz_t());
  return g == 1;
}

std::vector<Progression> scan_progressions(const Series& f, std::int64_t max_a,
                                           std::span<const std::int64_t> moduli,
                                           std::int64_t min_witnesses, std::int64_t order) {
  const std::int64_t trusted = std::min(order, f.prec());
  std::vector<std::int64_t> sorted_moduli(moduli.begin(), moduli.end());
  std::sort(sorted_moduli.begin(), sorted_moduli.end());
  sorted_moduli.erase(std::unique(sorted_moduli.begin(), sorted_moduli.end()), sorted_moduli.end());
  std::vector<Scalar> coeffs;
  if (trusted > 0) coeffs = f.coefficients(0, trusted);
  std::vector<Progression> found;
  for (std::int64_t a = 1; a <= max_a; ++a) {
    for (std::int64_t b = 0; b < a; ++b) {
      for (std::int64_t m : sorted_moduli) {
        const Progression p{a, b, m};
        const bool covered = std::any_of(found.begin(), found.end(), [&](const Progression& q) {
          return q.modulus == m && a % q.a == 0 && b % q.a == q.b;
        });
        if (covered || witness_count(p, trusted) < min_witnesses) continue;
        bool holds = true;
        for (std::int64_t k = b; k < trusted && holds; k += a) {
          holds = divisible(coeffs[static_cast<std::size_t>(k)], m);
        }
        if (holds) found.push_back(p);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Report run_statement(const Statement& s, const RunOptions& options) {
  Report r;
  r.label = s.label;
  r.ring = s.ring.value_or(options.ring.value_or(Ring::integer())).descriptor();
  const auto start = Clock::now();
  try {
    switch (s.kind) {
      case StatementKind::kVerify:
        run_verify(s, options, r);
        break;
      case StatementKind::kCongruence:
        run_congruence(s, options, r);
        break;
      case StatementKind::kScan:
        run_scan(s, options, r);
        break;
    }
  } catch (const Error& err) {
    r.verdict = Verdict::kFail;
    r.detail = std::string("error: ") + err.what();
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return r;
}

std::vector<Report> run(std::span<const Statement> statements, const RunOptions& options) {
  std::vector<Report> reports(statements.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, statements.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < statements.size(); ++i) reports[i] = run_statement(statements[i], options);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < statements.size(); i = next++) {
        reports[i] = run_statement(statements[i], options);
      }
    });
  }
  for (std::thread& th : pool) th.join();
  return reports;
}

}  // namespace qseries::dsl
