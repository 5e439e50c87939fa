#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pochette/errors.hpp"

namespace pochette::slope {

/// Element of Q u {inf} recording the gluing class p[m] + q[l], defined
/// up to simultaneous sign. Canonical form: q > 0, or (1,0) for inf,
/// or (0,1) for slope zero.
struct SlopeFraction {
  long long p = 1;
  long long q = 0;

  friend bool operator==(const SlopeFraction&, const SlopeFraction&) = default;
};

/// The residue class distinguishing the two extensions of a gluing over
/// the 2-handle.
struct Mod2Framing {
  int value = 0;  // 0 or 1

  friend bool operator==(const Mod2Framing&, const Mod2Framing&) = default;
};

Mod2Framing make_mod2(long long value);

/// |p|/|q| = a0 + 1/(a1 + 1/(... + 1/an)) with n >= 1, a0 >= 0, ai >= 1.
struct ContinuedFraction {
  long long a0 = 0;
  std::vector<long long> terms;  // a1..an, nonempty

  friend bool operator==(const ContinuedFraction&,
                         const ContinuedFraction&) = default;
};

/// Throws NotCoprime / ZeroSlopePair when (p,q) is not a valid slope pair.
void require_slope_pair(long long p, long long q);

SlopeFraction normalize_slope(long long p, long long q);

/// Shortest expansion with n >= 1; when |q| = 1 the plain Euclidean
/// expansion would be a bare integer, so |p| = (|p|-1) + 1/1 is used.
ContinuedFraction continued_fraction(long long p, long long q);

/// The expansion of the same rational with the other parity of n
/// ([..., an] <-> [..., an - 1, 1]).
ContinuedFraction flip_parity(const ContinuedFraction& cf);

/// Exact evaluation of the tower as a reduced positive fraction.
/// Independent oracle for continued_fraction.
std::pair<long long, long long> reconstruct(const ContinuedFraction& cf);

/// Parses "p/q" (optional sign) or "inf"; result is normalized.
SlopeFraction parse_slope(std::string_view text);

std::string to_string(const SlopeFraction& s);

}  // namespace pochette::slope
