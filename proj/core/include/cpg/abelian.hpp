#pragma once

#include "cpg/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cpg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row target += factor * row source
  void add_row(std::size_t target, std::size_t source, const Integer& factor);
  void add_col(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// Exact determinant by fraction-free elimination.
Integer determinant(const IntMatrix& m);

struct AbelianInvariants {
  // Invariant factors d1 | d2 | ..., all > 1.
  std::vector<Integer> torsion;
  long free_rank = 0;

  Integer torsion_order() const;
  bool finite() const { return free_rank == 0; }
  // "Z_3", "Z^2", "Z_5 + Z^2", "0"
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

struct SmithForm {
  IntMatrix diagonal;  // U * M * V
  IntMatrix left;      // U, unimodular
  IntMatrix right;     // V, unimodular
  std::vector<Integer> factors;  // nonzero diagonal entries, each dividing the next
  AbelianInvariants invariants;
};

// Pivots on entries of minimal absolute value; U and V are tracked.
SmithForm smith_normal_form(const IntMatrix& m);

// Cokernel of the relation matrix, from its diagonal entries.
AbelianInvariants invariants_from_factors(const std::vector<Integer>& factors, std::size_t generators);

// Row i has +1 at columns i, i+k, i+l (mod n), accumulated.
IntMatrix relation_matrix(long n, long k, long l);
AbelianInvariants abelian_invariants(long n, long k, long l);

// 2^n - (-1)^n
Integer cyclic_order(long n);

}  // namespace cpg
