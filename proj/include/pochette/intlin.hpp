#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "pochette/errors.hpp"

namespace pochette::intlin {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major, arbitrary-precision entries.
/// All matrices in this project are tiny (handle counts), so no attempt
/// is made at sparsity or in-place cleverness.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool is_diagonal() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D in Smith normal form:
/// diagonal, nonnegative, each entry dividing the next nonzero one.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

/// Finitely generated abelian group in invariant-factor form.
/// torsion entries are >= 2 and each divides the next.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// rank-nullity complement: cols - rank.
std::size_t kernel_rank(const IntMatrix& a);

/// Cokernel of the map z^cols -> z^rows represented by `a` acting on
/// column vectors: free rank = rows - rank, torsion = diagonal entries
/// of the Smith form that exceed 1.
AbelianGroup cokernel(const IntMatrix& a);

}  // namespace pochette::intlin
