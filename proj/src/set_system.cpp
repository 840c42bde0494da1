#include "icover/set_system.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace icover {

CounterexampleSpec counterexample_preset_u2() {
  return {2, Rational(3, 5), Rational(3, 4), Rational(19, 20)};
}

void validate_counterexample_spec(const CounterexampleSpec& spec) {
  const auto fail = [](const char* ineq) {
    throw std::invalid_argument(std::string("counterexample spec violates ") + ineq);
  };
  if (spec.u < 2) fail("u ≥ 2");
  const Rational zero(0, 1), one(1, 1);
  if (!(zero < spec.alpha)) fail("0 < α");
  if (!(spec.alpha < spec.beta)) fail("α < β");
  if (!(spec.beta < spec.gamma)) fail("β < γ");
  if (!(spec.gamma < one)) fail("γ < 1");
  // beta - alpha < gamma - beta  <=>  2*beta < alpha + gamma.
  const Rational lhs(spec.beta.num * 2, spec.beta.den);
  const __int128 a = static_cast<__int128>(spec.alpha.num) * spec.gamma.den +
                     static_cast<__int128>(spec.gamma.num) * spec.alpha.den;
  // Compare 2*beta vs alpha + gamma without building the sum rational.
  const __int128 l = static_cast<__int128>(lhs.num) * spec.alpha.den * spec.gamma.den;
  const __int128 r = a * lhs.den;
  if (!(l < r)) fail("β − α < γ − β");
  const Rational g_share(spec.gamma.num, spec.gamma.den * (spec.u + 2));
  const Rational b_share(spec.beta.num, spec.beta.den * (spec.u + 1));
  const Rational a_share(spec.alpha.num, spec.alpha.den * spec.u);
  if (!(g_share < b_share)) fail("γ/(u+2) < β/(u+1)");
  if (!(b_share < a_share)) fail("β/(u+1) < α/u");
}

namespace {

// Smallest positive n with (r*n) integral and divisible by m.
std::int64_t needed_multiple(const Rational& r, std::int64_t m) {
  // n = den*s, r*n = num*s; need m | num*s, i.e. s a multiple of m/gcd(num, m).
  const std::int64_t g = std::gcd(r.num, m);
  return r.den * (m / g);
}

std::int64_t lcm3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::lcm(std::lcm(a, b), c);
}

// r*n as an exact integer; requires divisibility (guaranteed by ground size).
std::int64_t scale(const Rational& r, std::int64_t n) {
  assert(n % r.den == 0);
  return (n / r.den) * r.num;
}

}  // namespace

SetSystem build_counterexample(const CounterexampleSpec& spec) {
  validate_counterexample_spec(spec);
  const std::int64_t u = spec.u;
  const Rational beta_minus_alpha(
      spec.beta.num * spec.alpha.den - spec.alpha.num * spec.beta.den,
      spec.beta.den * spec.alpha.den);
  const Rational gamma_minus_beta(
      spec.gamma.num * spec.beta.den - spec.beta.num * spec.gamma.den,
      spec.gamma.den * spec.beta.den);
  const std::int64_t n =
      lcm3(needed_multiple(spec.alpha, u * (u + 1) * (u + 2)),
           needed_multiple(beta_minus_alpha, (u + 1) * (u + 2)),
           needed_multiple(gamma_minus_beta, u + 2));

  const std::int64_t an = scale(spec.alpha, n);   // elements in some B
  const std::int64_t bn = scale(spec.beta, n);    // elements in some C
  const std::int64_t cn = scale(spec.gamma, n);   // elements in some D
  const std::int64_t block = an / u;              // per B-set

  SetSystem sys;
  sys.ground_size = n;
  std::vector<std::vector<int>> B(u), C(u + 1), D(u + 2);

  // B region [0, an): u consecutive blocks. Within a block, element offset r
  // belongs to C_{r mod (u+1)}; within each (B,C) cell, the t-th element
  // belongs to D_{t mod (u+2)}. Round-robin keeps every cell exactly at its
  // target size because the block size is divisible by (u+1)(u+2).
  for (std::int64_t i = 0; i < u; ++i) {
    std::vector<std::int64_t> cell_fill(u + 1, 0);
    for (std::int64_t r = 0; r < block; ++r) {
      const int e = static_cast<int>(i * block + r);
      B[i].push_back(e);
      const std::int64_t j = r % (u + 1);
      C[j].push_back(e);
      D[cell_fill[j] % (u + 2)].push_back(e);
      ++cell_fill[j];
    }
  }
  // C-only region [an, bn): offset r to C_{r mod (u+1)}, then round-robin
  // into the D families per C-set.
  {
    std::vector<std::int64_t> c_fill(u + 1, 0);
    for (std::int64_t r = 0; r < bn - an; ++r) {
      const int e = static_cast<int>(an + r);
      const std::int64_t j = r % (u + 1);
      C[j].push_back(e);
      D[c_fill[j] % (u + 2)].push_back(e);
      ++c_fill[j];
    }
  }
  // D-only region [bn, cn): offset r to D_{r mod (u+2)}. [cn, n) stays
  // uncovered.
  for (std::int64_t r = 0; r < cn - bn; ++r)
    D[r % (u + 2)].push_back(static_cast<int>(bn + r));

  for (std::int64_t i = 0; i < u; ++i)
    sys.sets.emplace_back("B" + std::to_string(i + 1), std::move(B[i]));
  for (std::int64_t j = 0; j <= u; ++j) {
    std::sort(C[j].begin(), C[j].end());
    sys.sets.emplace_back("C" + std::to_string(j + 1), std::move(C[j]));
  }
  for (std::int64_t l = 0; l < u + 2; ++l) {
    std::sort(D[l].begin(), D[l].end());
    sys.sets.emplace_back("D" + std::to_string(l + 1), std::move(D[l]));
  }
  return sys;
}

BruteResult brute_opt(const SetSystem& sys, int k) {
  assert(k >= 0);
  const int s = static_cast<int>(sys.sets.size());
  if (s > 20)
    throw std::invalid_argument(
        "brute_opt: " + std::to_string(s) +
        " sets exceed the exhaustive-search cap of 20");
  const int t = std::min(k, s);
  BruteResult best;
  if (t == 0) return best;
  std::vector<int> stamp(static_cast<std::size_t>(sys.ground_size), -1);
  int generation = 0;
  std::vector<int> combo(t);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    std::int64_t value = 0;
    ++generation;
    for (int idx : combo)
      for (int e : sys.sets[idx].second)
        if (stamp[e] != generation) {
          stamp[e] = generation;
          ++value;
        }
    if (value > best.value || best.witness.empty()) {
      best.value = value;
      best.witness.clear();
      for (int idx : combo) best.witness.push_back(sys.sets[idx].first);
    }
    // Next combination in lexicographic order.
    int i = t - 1;
    while (i >= 0 && combo[i] == s - t + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < t; ++j) combo[j] = combo[j - 1] + 1;
  }
  return best;
}

GreedyPick generic_greedy(const SetSystem& sys, int k) {
  assert(k >= 0);
  const int rounds = std::min<std::int64_t>(k, sys.sets.size());
  GreedyPick result;
  std::vector<char> covered(static_cast<std::size_t>(sys.ground_size), 0);
  std::vector<char> used(sys.sets.size(), 0);
  for (int round = 0; round < rounds; ++round) {
    int best_idx = -1;
    std::int64_t best_gain = -1;
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
      if (used[i]) continue;
      std::int64_t gain = 0;
      for (int e : sys.sets[i].second)
        if (!covered[e]) ++gain;
      if (gain > best_gain) {  // ties keep the earlier set
        best_gain = gain;
        best_idx = static_cast<int>(i);
      }
    }
    used[best_idx] = 1;
    for (int e : sys.sets[best_idx].second) covered[e] = 1;
    result.chosen.push_back(sys.sets[best_idx].first);
    result.value += best_gain;
  }
  return result;
}

std::optional<std::size_t> check_diminishing_returns(
    const std::vector<std::int64_t>& profits) {
  for (std::size_t i = 0; i + 1 < profits.size(); ++i)
    if (profits[i] < profits[i + 1]) return i;
  return std::nullopt;
}

SetSystem set_system_from_instance(const Instance& inst) {
  SetSystem sys;
  sys.ground_size = inst.point_count();
  for (const Interval& iv : inst.intervals()) {
    auto [first, last] = inst.point_range(iv.lo, iv.hi);
    std::vector<int> elems;
    elems.reserve(last - first);
    for (std::size_t p = first; p < last; ++p)
      elems.push_back(static_cast<int>(p));
    sys.sets.emplace_back("I" + std::to_string(iv.id), std::move(elems));
  }
  return sys;
}

}  // namespace icover
