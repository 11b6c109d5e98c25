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

#include "qseries/qproducts.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

Series pochhammer_finite(Monomial a, Monomial base, std::int64_t n, std::int64_t prec,
                         const Ring& ring) {
  if (n < 0) throw ArgumentError("pochhammer_finite: negative length");
  Series result = truncate(Series::one(ring), prec);
  for (std::int64_t k = 0; k < n; ++k) {
    const Monomial factor = a * base.pow(k);
    if (factor.exp < 0) throw ArgumentError("pochhammer_finite: negative exponent in factor");
    if (factor.exp >= prec && factor.exp > 0) continue;
    result = mul_binomial(result, factor);
  }
  return result;
}

namespace {

void check_inf_args(Monomial a, Monomial base, const char* op) {
  if (a.exp < 1 || base.exp < 1) {
    throw ArgumentError(std::string(op) + ": (" + a.to_string() + "; " + base.to_string() +
                        ")_inf needs positive exponents");
  }
}

bool is_euler(Monomial a, Monomial base) { return a == base && a.sign > 0; }

// (q^j; q^j)_inf from the pentagonal number theorem.
Series pentagonal(std::int64_t j, std::int64_t prec, const Ring& ring) {
  if (prec <= 0) return truncate(Series::one(ring), prec);
  std::vector<long> c(static_cast<std::size_t>(prec), 0);
  c[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t lo = j * (k * (3 * k - 1) / 2);
    if (lo >= prec) break;
    const long sign = k % 2 == 0 ? 1 : -1;
    c[static_cast<std::size_t>(lo)] = sign;
    const std::int64_t hi = lo + j * k;
    if (hi < prec) c[static_cast<std::size_t>(hi)] = sign;
  }
  return Series::from_integers(ring, 0, c, prec);
}

}  // namespace

Series pochhammer_inf(Monomial a, Monomial base, std::int64_t prec, const Ring& ring) {
  check_inf_args(a, base, "pochhammer_inf");
  if (is_euler(a, base)) return pentagonal(a.exp, prec, ring);
  Series result = truncate(Series::one(ring), prec);
  for (Monomial factor = a; factor.exp < prec; factor = factor * base) {
    result = mul_binomial(result, factor);
  }
  return result;
}

Series pochhammer_inf_inverse(Monomial a, Monomial base, std::int64_t prec, const Ring& ring) {
  check_inf_args(a, base, "pochhammer_inf_inverse");
  if (is_euler(a, base) && prec > 0) return invert(pentagonal(a.exp, prec, ring));
  Series result = truncate(Series::one(ring), prec);
  for (Monomial factor = a; factor.exp < prec; factor = factor * base) {
    result = div_binomial(result, factor);
  }
  return result;
}

Series euler(std::int64_t j, std::int64_t prec, const Ring& ring) {
  if (j < 1) throw ArgumentError("euler: dilation must be positive");
  return pochhammer_inf(Monomial::q(j), Monomial::q(j), prec, ring);
}

EtaQuotient::EtaQuotient(std::initializer_list<std::pair<std::int64_t, std::int64_t>> factors) {
  for (const auto& [j, d] : factors) times(j, d);
}

EtaQuotient& EtaQuotient::times(std::int64_t dilation, std::int64_t exponent) {
  if (dilation < 1) throw ArgumentError("eta quotient dilation must be positive");
  auto it = std::lower_bound(factors_.begin(), factors_.end(), dilation,
                             [](const auto& f, std::int64_t j) { return f.first < j; });
  if (it != factors_.end() && it->first == dilation) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  } else if (exponent != 0) {
    factors_.insert(it, {dilation, exponent});
  }
  return *this;
}

std::string EtaQuotient::to_string() const {
  auto render = [](const std::vector<std::pair<std::int64_t, std::int64_t>>& fs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) os << "*";
      os << "E" << fs[i].first;
      if (fs[i].second != 1) os << "^" << fs[i].second;
    }
    return os.str();
  };
  std::vector<std::pair<std::int64_t, std::int64_t>> num, den;
  for (const auto& [j, d] : factors_) (d > 0 ? num : den).push_back({j, std::abs(d)});
  std::string s = num.empty() ? "1" : render(num);
  if (!den.empty()) s += den.size() == 1 ? "/" + render(den) : "/(" + render(den) + ")";
  return s;
}

Series eta_quotient(const EtaQuotient& eq, std::int64_t prec, const Ring& ring) {
  Series result = truncate(Series::one(ring), prec);
  for (const auto& [j, d] : eq.factors()) {
    const Monomial qj = Monomial::q(j);
    Series base = d > 0 ? pochhammer_inf(qj, qj, prec, ring) : pochhammer_inf_inverse(qj, qj, prec, ring);
    result = mul(result, pow(base, std::abs(d)));
  }
  return result;
}

Series rr_T(std::int64_t prec, const Ring& ring) {
  const Monomial q5 = Monomial::q(5);
  Series t = truncate(Series::one(ring), prec);
  for (std::int64_t start : {2, 3}) {
    for (Monomial factor = Monomial::q(start); factor.exp < prec; factor = factor * q5) {
      t = mul_binomial(t, factor);
    }
  }
  for (std::int64_t start : {1, 4}) {
    for (Monomial factor = Monomial::q(start); factor.exp < prec; factor = factor * q5) {
      t = div_binomial(t, factor);
    }
  }
  return t;
}

Series rr_K(std::int64_t prec, const Ring& ring) {
  return eta_quotient(EtaQuotient{{2, 1}, {5, 5}, {1, -1}, {10, -5}}, prec, ring);
}

}  // namespace qseries
