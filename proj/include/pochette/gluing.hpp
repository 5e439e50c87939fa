#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pochette/slope.hpp"

namespace pochette::gluing {

/// Boundary self-diffeomorphisms of the pochette used by word synthesis:
/// E0 the 1-Rolfsen twist, E1-E4 handle slides, E5 meridian reversal.
enum class Move { E0, E1, E2, E3, E4, E5 };

constexpr std::array<Move, 6> kAllMoves = {Move::E0, Move::E1, Move::E2,
                                           Move::E3, Move::E4, Move::E5};

std::string to_string(Move mv);

/// Finite move sequence, composed right to left: moves[0] is the leftmost
/// factor and is applied last. Empty word = identity.
struct MoveWord {
  std::vector<Move> moves;

  friend bool operator==(const MoveWord&, const MoveWord&) = default;
};

/// Compact text form "E2.E1^2.E0" (dot = composition, caret = repetition,
/// leftmost applied last).
std::string to_string(const MoveWord& w);

/// Action on H1 of the pochette boundary in the ordered basis ([m],[l]),
/// acting on column coefficient vectors. Always has determinant +-1.
struct H1Action {
  // entry[r][c]: row r, column c; column j is the image of basis vector j.
  std::array<std::array<long long, 2>, 2> entry{{{1, 0}, {0, 1}}};

  long long det() const {
    return entry[0][0] * entry[1][1] - entry[0][1] * entry[1][0];
  }
  std::pair<long long, long long> apply(long long x, long long y) const {
    return {entry[0][0] * x + entry[0][1] * y, entry[1][0] * x + entry[1][1] * y};
  }
  friend bool operator==(const H1Action&, const H1Action&) = default;
};

H1Action multiply(const H1Action& a, const H1Action& b);

/// Sign annotation on an H2-action entry. The double signs come from
/// orientation choices fixed only in drawings; they are kept symbolic.
/// Upper/lower readings are tied across the whole table (corresponding
/// double signs).
enum class SignMark {
  Plus,       // fixed +
  Minus,      // fixed -
  MinusPlus,  // ambiguous, upper reading is -
  PlusMinus,  // ambiguous, upper reading is +
};

enum class SignReading { Upper, Lower };

/// Resolved numeric sign of a mark under a reading (+1 or -1).
int resolve(SignMark mark, SignReading reading);

struct H2Entry {
  long long magnitude = 0;
  SignMark mark = SignMark::Plus;

  friend bool operator==(const H2Entry&, const H2Entry&) = default;
};

/// Action on H2 of the pochette boundary in the ordered basis ([B],[S]),
/// entries as magnitude + sign mark.
struct H2ActionPattern {
  std::array<std::array<H2Entry, 2>, 2> entry;

  friend bool operator==(const H2ActionPattern&, const H2ActionPattern&) = default;
};

using Mat2 = std::array<std::array<long long, 2>, 2>;
using Mag2 = std::array<std::array<long long, 2>, 2>;

/// Per-move H1 action: E0,E2,E4 fix [m]; E1: [m]->[m]+[l]; E3: [m]->[m]-[l];
/// E5: [m]->-[m]; E0,E1,E3,E5 fix [l]; E2: [l]->[m]+[l]; E4: [l]->-[m]+[l].
H1Action h1_action(Move mv);

/// Per-move H2 action pattern: E0,E2,E4 fix [B]; E1: [B]->[B]-+[S];
/// E3: [B]->[B]+-[S]; E5: [B]->+-[B]; E0,E1,E3 fix [S]; E2: [S]->-+[B]+[S];
/// E4: [S]->+-[B]+[S]; E5: [S]->-+[S].
H2ActionPattern h2_action(Move mv);

/// The move word E_{p/q,eps} for a concrete sign representative (p,q).
/// Follows the twelve-case table; eps is retained as trailing E0 factors.
MoveWord synthesize_word(long long p, long long q, slope::Mod2Framing eps);

/// Product of the per-move H1 matrices in right-to-left application order.
H1Action compose_h1(const MoveWord& w);

/// True iff the synthesized word maps [m] to p[m]+q[l] for the supplied
/// representative and the composed matrix is unimodular.
bool verify_word(long long p, long long q, slope::Mod2Framing eps);

/// Composed H2 action matrix under one global sign reading.
Mat2 compose_h2_resolved(const MoveWord& w, SignReading reading);

/// Entrywise absolute values of the composed H2 action; identical under
/// both consistent sign readings (checked).
Mag2 compose_h2_magnitudes(const MoveWord& w);

enum class Generator { MPrime, LPrime };

struct LiftLetter {
  Generator generator;
  long long exponent;

  friend bool operator==(const LiftLetter&, const LiftLetter&) = default;
};

/// Word in m', l' with no zero exponents and adjacent equal generators
/// merged. Text form "l m l^2 m".
struct LiftWord {
  std::vector<LiftLetter> letters;

  friend bool operator==(const LiftWord&, const LiftWord&) = default;
};

std::string to_string(const LiftWord& w);

/// The natural lift of the reglued meridian: m'^p l'^q when pq = 0,
/// otherwise the floor-exponent product over k = 1..|p|.
LiftWord natural_lift(long long p, long long q);

/// Total m' and l' exponents (abelianization of the lift).
std::pair<long long, long long> exponent_sums(const LiftWord& w);

}  // namespace pochette::gluing
