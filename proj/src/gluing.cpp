#include "pochette/gluing.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pochette::gluing {

namespace {

long long abs_ll(long long x) { return x < 0 ? -x : x; }

}  // namespace

std::string to_string(Move mv) {
  switch (mv) {
    case Move::E0: return "E0";
    case Move::E1: return "E1";
    case Move::E2: return "E2";
    case Move::E3: return "E3";
    case Move::E4: return "E4";
    case Move::E5: return "E5";
  }
  throw std::logic_error("unreachable move tag");
}

std::string to_string(const MoveWord& w) {
  if (w.moves.empty()) return "id";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < w.moves.size()) {
    std::size_t j = i;
    while (j < w.moves.size() && w.moves[j] == w.moves[i]) ++j;
    if (i) os << ".";
    os << to_string(w.moves[i]);
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

H1Action multiply(const H1Action& a, const H1Action& b) {
  H1Action out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.entry[r][c] =
          a.entry[r][0] * b.entry[0][c] + a.entry[r][1] * b.entry[1][c];
  return out;
}

H1Action h1_action(Move mv) {
  // columns are the images of [m] and [l]
  switch (mv) {
    case Move::E0: return H1Action{{{{1, 0}, {0, 1}}}};
    case Move::E1: return H1Action{{{{1, 0}, {1, 1}}}};   // [m] -> [m]+[l]
    case Move::E2: return H1Action{{{{1, 1}, {0, 1}}}};   // [l] -> [m]+[l]
    case Move::E3: return H1Action{{{{1, 0}, {-1, 1}}}};  // [m] -> [m]-[l]
    case Move::E4: return H1Action{{{{1, -1}, {0, 1}}}};  // [l] -> -[m]+[l]
    case Move::E5: return H1Action{{{{-1, 0}, {0, 1}}}};  // [m] -> -[m]
  }
  throw std::logic_error("unreachable move tag");
}

int resolve(SignMark mark, SignReading reading) {
  switch (mark) {
    case SignMark::Plus: return 1;
    case SignMark::Minus: return -1;
    case SignMark::MinusPlus: return reading == SignReading::Upper ? -1 : 1;
    case SignMark::PlusMinus: return reading == SignReading::Upper ? 1 : -1;
  }
  throw std::logic_error("unreachable sign mark");
}

H2ActionPattern h2_action(Move mv) {
  const H2Entry zero{0, SignMark::Plus};
  const H2Entry one{1, SignMark::Plus};
  H2ActionPattern p{{{{one, zero}, {zero, one}}}};
  switch (mv) {
    case Move::E0:
      break;
    case Move::E1:  // [B] -> [B] -+ [S]
      p.entry[1][0] = H2Entry{1, SignMark::MinusPlus};
      break;
    case Move::E2:  // [S] -> -+ [B] + [S]
      p.entry[0][1] = H2Entry{1, SignMark::MinusPlus};
      break;
    case Move::E3:  // [B] -> [B] +- [S]
      p.entry[1][0] = H2Entry{1, SignMark::PlusMinus};
      break;
    case Move::E4:  // [S] -> +- [B] + [S]
      p.entry[0][1] = H2Entry{1, SignMark::PlusMinus};
      break;
    case Move::E5:  // [B] -> +- [B], [S] -> -+ [S]
      p.entry[0][0] = H2Entry{1, SignMark::PlusMinus};
      p.entry[1][1] = H2Entry{1, SignMark::MinusPlus};
      break;
  }
  return p;
}

namespace {

// Alternating-block tail of the table rows with letters (ea, eb):
// odd n:  ea^a0 . eb^a1 . ea^a2 ... eb^an
// even n: ea^a0 . eb^a1 ... eb^a_{n-1} . ea^(an-1) . eb
void append_blocks(std::vector<Move>& out, const slope::ContinuedFraction& cf,
                   Move ea, Move eb) {
  const std::size_t n = cf.terms.size();
  const bool odd = n % 2 == 1;
  auto block = [&out](Move mv, long long count) {
    for (long long i = 0; i < count; ++i) out.push_back(mv);
  };
  block(ea, cf.a0);
  for (std::size_t i = 1; i <= n; ++i) {
    Move mv = (i % 2 == 1) ? eb : ea;
    long long e = cf.terms[i - 1];
    if (i == n && !odd) {
      block(mv, e - 1);  // mv == ea here
      block(eb, 1);
    } else {
      block(mv, e);
    }
  }
}

}  // namespace

MoveWord synthesize_word(long long p, long long q, slope::Mod2Framing eps) {
  slope::require_slope_pair(p, q);
  MoveWord w;
  if (q == 0) {
    if (p == -1) w.moves.push_back(Move::E5);
  } else if (p == 0) {
    w.moves.push_back(Move::E4);
    w.moves.push_back(Move::E1);
    if (q == -1) w.moves.push_back(Move::E5);
  } else {
    slope::ContinuedFraction cf = slope::continued_fraction(p, q);
    // The even-n row for p<0, q>0 realizes the other sign representative;
    // the odd-parity expansion of the same rational hits (p,q) on the nose.
    if (p < 0 && q > 0 && cf.terms.size() % 2 == 0) cf = slope::flip_parity(cf);
    const bool same_sign = (p > 0) == (q > 0);
    append_blocks(w.moves, cf, same_sign ? Move::E2 : Move::E4,
                  same_sign ? Move::E1 : Move::E3);
    const bool odd = cf.terms.size() % 2 == 1;
    const bool with_e5 = (p < 0 && q > 0 && odd) || (p < 0 && q < 0);
    if (with_e5) w.moves.push_back(Move::E5);
  }
  for (int i = 0; i < eps.value; ++i) w.moves.push_back(Move::E0);
  return w;
}

H1Action compose_h1(const MoveWord& w) {
  H1Action acc;  // identity
  for (Move mv : w.moves) acc = multiply(acc, h1_action(mv));
  return acc;
}

bool verify_word(long long p, long long q, slope::Mod2Framing eps) {
  H1Action m = compose_h1(synthesize_word(p, q, eps));
  auto [x, y] = m.apply(1, 0);
  return x == p && y == q && abs_ll(m.det()) == 1;
}

Mat2 compose_h2_resolved(const MoveWord& w, SignReading reading) {
  Mat2 acc{{{1, 0}, {0, 1}}};
  for (Move mv : w.moves) {
    H2ActionPattern pat = h2_action(mv);
    Mat2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        m[r][c] = pat.entry[r][c].magnitude * resolve(pat.entry[r][c].mark, reading);
    Mat2 next;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        next[r][c] = acc[r][0] * m[0][c] + acc[r][1] * m[1][c];
    acc = next;
  }
  return acc;
}

Mag2 compose_h2_magnitudes(const MoveWord& w) {
  Mat2 upper = compose_h2_resolved(w, SignReading::Upper);
  Mat2 lower = compose_h2_resolved(w, SignReading::Lower);
  Mag2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      out[r][c] = abs_ll(upper[r][c]);
      if (out[r][c] != abs_ll(lower[r][c]))
        throw std::logic_error("H2 magnitudes disagree across sign readings");
    }
  return out;
}

std::string to_string(const LiftWord& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const LiftLetter& l : w.letters) {
    if (!first) os << " ";
    os << (l.generator == Generator::MPrime ? "m" : "l");
    if (l.exponent != 1) os << "^" << l.exponent;
    first = false;
  }
  return os.str();
}

namespace {

void push_letter(std::vector<LiftLetter>& letters, Generator g, long long e) {
  if (e == 0) return;
  if (!letters.empty() && letters.back().generator == g) {
    letters.back().exponent += e;
    if (letters.back().exponent == 0) letters.pop_back();
    return;
  }
  letters.push_back(LiftLetter{g, e});
}

}  // namespace

LiftWord natural_lift(long long p, long long q) {
  slope::require_slope_pair(p, q);
  LiftWord w;
  if (p == 0 || q == 0) {
    push_letter(w.letters, Generator::MPrime, p);
    push_letter(w.letters, Generator::LPrime, q);
    return w;
  }
  const long long ap = abs_ll(p), aq = abs_ll(q);
  const long long sp = p / ap, sq = q / aq;
  for (long long k = 1; k <= ap; ++k) {
    long long steps = (k * aq) / ap - ((k - 1) * aq) / ap;
    push_letter(w.letters, Generator::LPrime, sq * steps);
    push_letter(w.letters, Generator::MPrime, sp);
  }
  return w;
}

std::pair<long long, long long> exponent_sums(const LiftWord& w) {
  long long m = 0, l = 0;
  for (const LiftLetter& letter : w.letters) {
    if (letter.generator == Generator::MPrime)
      m += letter.exponent;
    else
      l += letter.exponent;
  }
  return {m, l};
}

}  // namespace pochette::gluing
