#pragma once

#include "rational.hpp"

#include <vector>

namespace dsh {

using QVector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix(int rows, int cols);
    QMatrix(int cols, const std::vector<QVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    void append_row(const QVector& row);

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

int matrix_rank(const QMatrix& m);
// Basis of {v : m v = 0}. Each vector has a 1 in its free column and zeros in
// the other free columns.
std::vector<QVector> matrix_nullspace(const QMatrix& m);
QVector matrix_apply(const QMatrix& m, const QVector& v);
bool subspace_contained(const std::vector<QVector>& a, const std::vector<QVector>& b);

} // namespace dsh
