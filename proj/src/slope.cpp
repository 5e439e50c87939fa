#include "pochette/slope.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace pochette::slope {

namespace {

long long abs_ll(long long x) { return x < 0 ? -x : x; }

}  // namespace

Mod2Framing make_mod2(long long value) {
  if (value != 0 && value != 1)
    throw Error("mod 2 framing must be 0 or 1, got " + std::to_string(value));
  return Mod2Framing{static_cast<int>(value)};
}

void require_slope_pair(long long p, long long q) {
  if (p == 0 && q == 0) throw ZeroSlopePair("slope pair (0,0) is not a slope");
  if (std::gcd(abs_ll(p), abs_ll(q)) != 1)
    throw NotCoprime("slope pair (" + std::to_string(p) + "," +
                     std::to_string(q) + ") is not coprime");
}

SlopeFraction normalize_slope(long long p, long long q) {
  require_slope_pair(p, q);
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return SlopeFraction{p, q};
}

ContinuedFraction continued_fraction(long long p, long long q) {
  if (q == 0) throw ZeroDenominator("continued fraction needs q != 0");
  if (p == 0) throw ZeroNumerator("continued fraction needs p != 0");
  require_slope_pair(p, q);
  long long a = abs_ll(p), b = abs_ll(q);
  if (b == 1) return ContinuedFraction{a - 1, {1}};
  ContinuedFraction cf;
  cf.a0 = a / b;
  long long r = a % b;  // nonzero: b >= 2 and gcd(a,b) = 1
  a = b;
  b = r;
  while (b != 0) {
    cf.terms.push_back(a / b);
    long long next = a % b;
    a = b;
    b = next;
  }
  return cf;
}

ContinuedFraction flip_parity(const ContinuedFraction& cf) {
  ContinuedFraction out = cf;
  if (out.terms.back() >= 2) {
    out.terms.back() -= 1;
    out.terms.push_back(1);
  } else if (out.terms.size() >= 2) {
    out.terms.pop_back();
    out.terms.back() += 1;
  } else {
    // [a0; 1] is the only expansion of a0 + 1 with n >= 1.
    throw Error("continued fraction [a0;1] has no opposite-parity form");
  }
  return out;
}

std::pair<long long, long long> reconstruct(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw Error("continued fraction needs n >= 1");
  if (cf.a0 < 0) throw Error("continued fraction needs a0 >= 0");
  // tail = a_k + 1/tail, folded bottom-up as a fraction num/den
  long long num = cf.terms.back(), den = 1;
  if (num < 1) throw Error("continued fraction terms must be positive");
  for (std::size_t i = cf.terms.size() - 1; i-- > 0;) {
    if (cf.terms[i] < 1) throw Error("continued fraction terms must be positive");
    long long next = cf.terms[i] * num + den;
    den = num;
    num = next;
  }
  long long out_num = cf.a0 * num + den;
  long long out_den = num;
  long long g = std::gcd(out_num, out_den);
  return {out_num / g, out_den / g};
}

SlopeFraction parse_slope(std::string_view text) {
  if (text == "inf" || text == "+inf") return SlopeFraction{1, 0};
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw ParseError("slope must look like p/q or inf: '" + std::string(text) +
                     "'");
  auto parse_ll = [&](std::string_view part) {
    long long v = 0;
    bool neg = false;
    if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
      neg = part[0] == '-';
      part.remove_prefix(1);
    }
    if (part.empty())
      throw ParseError("bad integer in slope: '" + std::string(text) + "'");
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("bad integer in slope: '" + std::string(text) + "'");
    return neg ? -v : v;
  };
  long long p = parse_ll(text.substr(0, slash));
  long long q = parse_ll(text.substr(slash + 1));
  return normalize_slope(p, q);
}

std::string to_string(const SlopeFraction& s) {
  std::ostringstream os;
  os << s.p << "/" << s.q;
  return os.str();
}

}  // namespace pochette::slope
