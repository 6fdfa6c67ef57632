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

#include "bcckit/exact_matrix.h"

#include <cctype>
#include <numeric>
#include <utility>

#include "bcckit/error.h"

namespace bcc {

namespace {

bool IsDigits(const std::string& s, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::vector<int> AllColumns(const RationalMatrix& m) {
  std::vector<int> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  return cols;
}

}  // namespace

Rational ParseRational(const std::string& text) {
  const std::size_t sign = (!text.empty() && text[0] == '-') ? 1 : 0;
  const std::size_t slash = text.find('/');
  const std::size_t num_end = slash == std::string::npos ? text.size() : slash;
  bool ok = IsDigits(text, sign, num_end);
  if (ok && slash != std::string::npos) {
    ok = IsDigits(text, slash + 1, text.size());
  }
  if (!ok) Fail(ErrorKind::kSchema, "malformed rational \"" + text + "\"");
  BigInt num(text.substr(0, num_end));
  BigInt den(1);
  if (slash != std::string::npos) {
    den = BigInt(text.substr(slash + 1));
    if (den == 0) Fail(ErrorKind::kSchema, "zero denominator in \"" + text + "\"");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string FormatRational(const Rational& q) { return q.get_str(); }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

RationalMatrix RationalMatrix::FromColumns(
    std::vector<std::vector<Rational>> cols) {
  const int rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  RationalMatrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) {
      Fail(ErrorKind::kSchema, "matrix columns have unequal lengths");
    }
    for (int r = 0; r < rows; ++r) m.at(r, c) = std::move(cols[c][r]);
  }
  return m;
}

std::vector<Rational> RationalMatrix::column(int col) const {
  std::vector<Rational> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, col);
  return out;
}

bool RationalMatrix::ColumnIsZero(int col) const {
  for (int r = 0; r < rows_; ++r) {
    if (at(r, col) != 0) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::SelectColumns(std::span<const int> cols) const {
  RationalMatrix out(rows_, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int r = 0; r < rows_; ++r) out.at(r, static_cast<int>(c)) = at(r, cols[c]);
  }
  return out;
}

RationalMatrix RationalMatrix::DropColumn(int col) const {
  std::vector<int> keep;
  for (int c = 0; c < cols_; ++c) {
    if (c != col) keep.push_back(c);
  }
  return SelectColumns(keep);
}

int ColumnRank(const RationalMatrix& m, std::span<const int> cols) {
  const int rows = m.rows();
  const int k = static_cast<int>(cols.size());
  if (rows == 0 || k == 0) return 0;
  // a[i][j], row-major, integer after clearing each column's denominators.
  std::vector<BigInt> a(static_cast<std::size_t>(rows) * k);
  auto at = [&](int i, int j) -> BigInt& {
    return a[static_cast<std::size_t>(i) * k + j];
  };
  for (int j = 0; j < k; ++j) {
    BigInt scale = 1;
    for (int i = 0; i < rows; ++i) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              m.at(i, cols[j]).get_den_mpz_t());
    }
    for (int i = 0; i < rows; ++i) {
      const Rational& q = m.at(i, cols[j]);
      at(i, j) = q.get_num() * (scale / q.get_den());
    }
  }
  int rank = 0;
  BigInt prev = 1;
  for (int c = 0; c < k && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < k; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < k; ++j) {
        BigInt v = at(rank, c) * at(i, j) - at(i, c) * at(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

int ColumnRank(const RationalMatrix& m) {
  const auto cols = AllColumns(m);
  return ColumnRank(m, cols);
}

std::vector<std::vector<Rational>> ColumnNullspace(const RationalMatrix& m,
                                                   std::span<const int> cols) {
  const int rows = m.rows();
  const int k = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = m.at(i, cols[j]);
  }
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < k && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[r]);
    const Rational inv = 1 / a[r][c];
    for (int j = c; j < k; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (int j = c; j < k; ++j) a[i][j] -= factor * a[r][j];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(k, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(k, Rational(0));
    v[free] = 1;
    for (int row = 0; row < static_cast<int>(pivot_col_of_row.size()); ++row) {
      v[pivot_col_of_row[row]] = -a[row][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bcc
