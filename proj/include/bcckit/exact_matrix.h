// Copyright 2026 The Authors.
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

#ifndef BCCKIT_EXACT_MATRIX_H_
#define BCCKIT_EXACT_MATRIX_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace bcc {

using Rational = mpq_class;
using BigInt = mpz_class;

// "p/q", "p" or "-p/q"; throws a schema error on anything else.
Rational ParseRational(const std::string& text);
std::string FormatRational(const Rational& q);

// Dense exact matrix stored column-major: each column is one vector.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix FromColumns(std::vector<std::vector<Rational>> cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int row, int col) const {
    return data_[static_cast<std::size_t>(col) * rows_ + row];
  }
  Rational& at(int row, int col) {
    return data_[static_cast<std::size_t>(col) * rows_ + row];
  }
  std::vector<Rational> column(int col) const;
  bool ColumnIsZero(int col) const;

  RationalMatrix SelectColumns(std::span<const int> cols) const;
  RationalMatrix DropColumn(int col) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Rank of the given columns. Each column is scaled to an integer vector and
// the result is reduced by fraction-free (Bareiss) elimination.
int ColumnRank(const RationalMatrix& m, std::span<const int> cols);
int ColumnRank(const RationalMatrix& m);

// Basis of {c : sum_j c_j * column_j = 0} over the given columns, by exact
// reduced row echelon form. Each vector has one entry per selected column.
std::vector<std::vector<Rational>> ColumnNullspace(const RationalMatrix& m,
                                                   std::span<const int> cols);

}  // namespace bcc

#endif  // BCCKIT_EXACT_MATRIX_H_
