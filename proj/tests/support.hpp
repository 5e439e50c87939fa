#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// here deliberately avoid the library's code paths: plain reduction with
// no transform bookkeeping, and determinantal divisors via Laplace minors.

#include <numeric>
#include <random>
#include <vector>

#include "pochette/diagram.hpp"
#include "pochette/intlin.hpp"

namespace pochette::testing {

// --- SNF oracles -----------------------------------------------------------

// Invariant factors by textbook gcd row/column reduction on a working copy.
// No U/V tracking, no pivot strategy shared with the library.
inline std::vector<intlin::Int> invariant_factors_bruteforce(
    const intlin::IntMatrix& a) {
  using intlin::Int;
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a.at(i, j);

  auto nonzero_at_or_below = [&](std::size_t t) {
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0) return true;
    return false;
  };

  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (!nonzero_at_or_below(t)) break;
    for (;;) {
      // move any nonzero into (t,t)
      if (m[t][t] == 0) {
        bool moved = false;
        for (std::size_t i = t; i < rows && !moved; ++i)
          for (std::size_t j = t; j < cols && !moved; ++j)
            if (m[i][j] != 0) {
              std::swap(m[t], m[i]);
              for (std::size_t r = 0; r < rows; ++r)
                std::swap(m[r][t], m[r][j]);
              moved = true;
            }
      }
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        while (m[i][t] != 0) {
          Int q = m[i][t] / m[t][t];
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
          if (m[i][t] != 0) {
            std::swap(m[t], m[i]);
            changed = true;
          }
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        while (m[t][j] != 0) {
          Int q = m[t][j] / m[t][t];
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
          if (m[t][j] != 0) {
            for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][j]);
            changed = true;
          }
        }
      if (changed) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            fixed = true;
          }
      if (!fixed) break;
    }
    diag.push_back(m[t][t] < 0 ? Int(-m[t][t]) : m[t][t]);
  }
  return diag;
}

inline intlin::AbelianGroup cokernel_bruteforce(const intlin::IntMatrix& a) {
  std::vector<intlin::Int> diag = invariant_factors_bruteforce(a);
  intlin::AbelianGroup g;
  g.free_rank = a.rows() - diag.size();
  for (const intlin::Int& d : diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

// Determinantal-divisor route: k-th invariant factor = gcd of k-minors
// divided by gcd of (k-1)-minors. Laplace expansion, practical for n <= 4.
inline intlin::Int minor_det(const intlin::IntMatrix& a,
                             const std::vector<std::size_t>& ri,
                             const std::vector<std::size_t>& ci) {
  using intlin::Int;
  std::size_t n = ri.size();
  if (n == 0) return 1;
  if (n == 1) return a.at(ri[0], ci[0]);
  Int sum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> sub_r(ri.begin() + 1, ri.end());
    std::vector<std::size_t> sub_c;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) sub_c.push_back(ci[j]);
    Int term = a.at(ri[0], ci[k]) * minor_det(a, sub_r, sub_c);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

inline std::vector<intlin::Int> invariant_factors_by_minor_gcd(
    const intlin::IntMatrix& a) {
  using intlin::Int;
  std::size_t maxk = std::min(a.rows(), a.cols());
  auto choose = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return out;
    for (;;) {
      out.push_back(idx);
      std::size_t i = k;
      while (i-- > 0) {
        if (idx[i] != i + n - k) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) return out;
      }
    }
  };

  std::vector<Int> dk;  // dk[k-1] = gcd of k-minors
  for (std::size_t k = 1; k <= maxk; ++k) {
    Int g = 0;
    for (const auto& ri : choose(a.rows(), k))
      for (const auto& ci : choose(a.cols(), k))
        g = boost::multiprecision::gcd(g, minor_det(a, ri, ci));
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<Int> factors;
  for (std::size_t k = 0; k < dk.size(); ++k)
    factors.push_back(k == 0 ? dk[0] : Int(dk[k] / dk[k - 1]));
  return factors;
}

// --- diagram fixtures ------------------------------------------------------

inline diagram::HandleDiagram standard_s4() {
  diagram::HandleDiagram d;
  d.name = "standard S4";
  d.n4 = 1;
  return d;
}

// One dotted circle, a 0-framed split unknot, a 2-handle over the dot once:
// cancels down to the standard 4-sphere.
inline diagram::HandleDiagram cancelling_pair(bool meridian_flag = false) {
  diagram::HandleDiagram d;
  d.name = "cancelling pair S4";
  d.one_handles = {"c"};
  diagram::TwoHandle u;
  u.id = "u";
  u.framing = 0;
  diagram::TwoHandle k;
  k.id = "K";
  k.framing = 0;
  k.linking["c"] = 1;
  k.meridian = meridian_flag;
  d.two_handles = {u, k};
  d.n3 = 1;
  d.n4 = 1;
  return d;
}

inline diagram::HandleDiagram s1_times_s3() {
  diagram::HandleDiagram d;
  d.name = "S1 x S3";
  d.one_handles = {"c"};
  d.n3 = 1;
  d.n4 = 1;
  return d;
}

// Random valid closed diagram, at most `max_handles` of each index.
inline diagram::HandleDiagram random_closed_diagram(std::mt19937_64& rng,
                                                    int max_handles = 6) {
  std::uniform_int_distribution<int> count(0, max_handles);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> percent(0, 99);
  for (;;) {
    diagram::HandleDiagram d;
    d.name = "random";
    d.n4 = 1;
    int dots = count(rng), handles = count(rng);
    d.n3 = count(rng) / 2;
    for (int i = 0; i < dots; ++i)
      d.one_handles.push_back("c" + std::to_string(i));
    for (int i = 0; i < handles; ++i) {
      diagram::TwoHandle h;
      h.id = "h" + std::to_string(i);
      h.framing = entry(rng);
      h.meridian = percent(rng) < 30;
      for (int r = 0; r < dots; ++r)
        if (percent(rng) < 55) {
          long long v = entry(rng);
          if (v != 0) h.linking["c" + std::to_string(r)] = v;
        }
      d.two_handles.push_back(h);
    }
    for (int i = 0; i + 1 < handles; ++i)
      if (percent(rng) < 25) {
        long long v = entry(rng);
        if (v == 0) continue;
        d.two_handles[i].two_linking[d.two_handles[i + 1].id] = v;
        d.two_handles[i + 1].two_linking[d.two_handles[i].id] = v;
      }
    try {
      diagram::homology_closed(d);  // rejects b2 < 0
      return d;
    } catch (const InconsistentDiagram&) {
      // resample
    }
  }
}

inline intlin::IntMatrix random_matrix(std::mt19937_64& rng, int max_dim = 8,
                                       int max_entry = 20) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  intlin::IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
  return m;
}

}  // namespace pochette::testing
