#include "pochette/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace pochette::intlin {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && at(r, c) != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? ", " : "") << at(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("multiply: dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // Bareiss: division is exact
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

// g = gcd(a, b) > 0 together with x*a + y*b = g
struct Bezout {
  Int g, x, y;
};

Bezout extended_gcd(Int a, Int b) {
  Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
    y0 -= q * y1;
    std::swap(y0, y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return Bezout{a, x0, y0};
}

struct SnfState {
  IntMatrix a;  // working copy, becomes D
  IntMatrix u;  // accumulated row ops
  IntMatrix v;  // accumulated column ops

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
  }
  // row r1 += f * row r2
  void add_row(std::size_t r1, const Int& f, std::size_t r2) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r1, j) += f * a.at(r2, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(r1, j) += f * u.at(r2, j);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
  }

  // One-shot unimodular 2x2 transform putting gcd(a(t,t), a(i,t)) at the
  // pivot and zero at (i,t); the determinant of [[x,y],[-bg,ag]] is 1.
  void clear_in_column(std::size_t t, std::size_t i) {
    const Int p = a.at(t, t), e = a.at(i, t);
    if (e == 0) return;
    if (p != 0 && e % p == 0) {
      add_row(i, -Int(e / p), t);
      return;
    }
    Bezout bz = extended_gcd(p, e);
    const Int ag = p / bz.g, bg = e / bz.g;
    combine(a.rows() ? a : a, t, i, bz.x, bz.y, -bg, ag, /*rows=*/true);
  }
  void clear_in_row(std::size_t t, std::size_t j) {
    const Int p = a.at(t, t), e = a.at(t, j);
    if (e == 0) return;
    if (p != 0 && e % p == 0) {
      add_col_multiple(j, -Int(e / p), t);
      return;
    }
    Bezout bz = extended_gcd(p, e);
    const Int ag = p / bz.g, bg = e / bz.g;
    combine(a, t, j, bz.x, bz.y, -bg, ag, /*rows=*/false);
  }
  // col c1 += f * col c2
  void add_col_multiple(std::size_t c1, const Int& f, std::size_t c2) {
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, c1) += f * a.at(i, c2);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, c1) += f * v.at(i, c2);
  }

 private:
  // rows: (row_t, row_i) <- (x*row_t + y*row_i, -bg*row_t + ag*row_i)
  // cols: same with columns
  void combine(IntMatrix&, std::size_t t, std::size_t i, const Int& x,
               const Int& y, const Int& mbg, const Int& ag, bool rows) {
    if (rows) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Int at = a.at(t, j), ai = a.at(i, j);
        a.at(t, j) = x * at + y * ai;
        a.at(i, j) = mbg * at + ag * ai;
      }
      for (std::size_t j = 0; j < u.cols(); ++j) {
        Int ut = u.at(t, j), ui = u.at(i, j);
        u.at(t, j) = x * ut + y * ui;
        u.at(i, j) = mbg * ut + ag * ui;
      }
    } else {
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Int at = a.at(r, t), ai = a.at(r, i);
        a.at(r, t) = x * at + y * ai;
        a.at(r, i) = mbg * at + ag * ai;
      }
      for (std::size_t r = 0; r < v.rows(); ++r) {
        Int vt = v.at(r, t), vi = v.at(r, i);
        v.at(r, t) = x * vt + y * vi;
        v.at(r, i) = mbg * vt + ag * vi;
      }
    }
  }
};

// Smallest nonzero |entry| in the trailing submatrix.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& e = a.at(i, j);
      if (e == 0) continue;
      Int ae = abs_int(e);
      if (!found || ae < best) {
        found = true;
        best = ae;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SnfState s{a, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(s.a, t, pr, pc)) break;
    s.swap_rows(t, pr);
    s.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) s.clear_in_column(t, i);
      // clearing row t can refill column t; the pivot then shrinks to a
      // proper divisor, so this settles after few rounds
      for (std::size_t j = t + 1; j < cols; ++j) s.clear_in_row(t, j);
      bool column_clear = true;
      for (std::size_t i = t + 1; i < rows && column_clear; ++i)
        column_clear = s.a.at(i, t) == 0;
      if (!column_clear) continue;
      // the pivot must divide the whole trailing submatrix so that the
      // diagonal comes out in divisibility order
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (s.a.at(i, j) % s.a.at(t, t) != 0) {
            s.add_row(t, 1, i);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (s.a.at(t, t) < 0) s.negate_row(t);
  }
  return SmithDecomposition{std::move(s.u), std::move(s.a), std::move(s.v)};
}

std::size_t rank(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  std::size_t r = 0;
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < steps; ++i)
    if (snf.d.at(i, i) != 0) ++r;
  return r;
}

std::size_t kernel_rank(const IntMatrix& a) { return a.cols() - rank(a); }

AbelianGroup cokernel(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  AbelianGroup g;
  std::size_t r = 0;
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < steps; ++i) {
    const Int& d = snf.d.at(i, i);
    if (d == 0) continue;
    ++r;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = a.rows() - r;
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

}  // namespace pochette::intlin
