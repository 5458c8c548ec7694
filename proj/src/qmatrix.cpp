#include "dsh/qmatrix.hpp"

#include "dsh/errors.hpp"

#include <utility>

namespace dsh {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols)
{
    if (rows < 0 || cols < 0)
        throw StructuralError("negative matrix dimension");
}

QMatrix::QMatrix(int cols, const std::vector<QVector>& rows) : QMatrix(0, cols)
{
    for (auto& r : rows)
        append_row(r);
}

void QMatrix::append_row(const QVector& row)
{
    if (static_cast<int>(row.size()) != cols_)
        throw StructuralError("row of length " + std::to_string(row.size()) + " for " + std::to_string(cols_)
                              + " columns");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> rows; // only the pivot rows, in order
    std::vector<int> pivots;
};

// Fraction-free elimination. Rows are first cleared of denominators; every
// later entry is a minor of that integer matrix, so the division by the
// previous pivot is exact.
Echelon bareiss(const QMatrix& m)
{
    const int cols = m.cols();
    std::vector<std::vector<mpz_class>> a;
    a.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        mpz_class lcm = 1;
        bool nonzero = false;
        for (int c = 0; c < cols; ++c) {
            if (m.at(r, c) != 0) {
                nonzero = true;
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den_mpz_t());
            }
        }
        if (!nonzero)
            continue;
        std::vector<mpz_class> row(cols);
        for (int c = 0; c < cols; ++c)
            row[c] = m.at(r, c).get_num() * (lcm / m.at(r, c).get_den());
        a.push_back(std::move(row));
    }

    Echelon e;
    const int n = static_cast<int>(a.size());
    int r = 0;
    mpz_class prev = 1;
    mpz_class t;
    for (int c = 0; c < cols && r < n; ++c) {
        int p = r;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            continue;
        std::swap(a[r], a[p]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                t = a[r][c] * a[i][j];
                t -= a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

} // namespace

int matrix_rank(const QMatrix& m)
{
    return static_cast<int>(bareiss(m).pivots.size());
}

std::vector<QVector> matrix_nullspace(const QMatrix& m)
{
    Echelon e = bareiss(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots)
        is_pivot[p] = true;

    std::vector<QVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        QVector x(cols);
        x[f] = 1;
        for (int k = static_cast<int>(e.pivots.size()) - 1; k >= 0; --k) {
            int p = e.pivots[k];
            Rational acc = 0;
            for (int j = p + 1; j < cols; ++j)
                if (x[j] != 0 && e.rows[k][j] != 0)
                    acc += Rational(e.rows[k][j]) * x[j];
            x[p] = -acc / Rational(e.rows[k][p]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

QVector matrix_apply(const QMatrix& m, const QVector& v)
{
    if (static_cast<int>(v.size()) != m.cols())
        throw StructuralError("vector length does not match matrix columns");
    QVector out(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && v[c] != 0)
                out[r] += m.at(r, c) * v[c];
    return out;
}

bool subspace_contained(const std::vector<QVector>& a, const std::vector<QVector>& b)
{
    if (a.empty())
        return true;
    const int dim = static_cast<int>(a.front().size());
    for (auto& v : a)
        if (static_cast<int>(v.size()) != dim)
            throw StructuralError("subspace_contained: inconsistent vector lengths");
    for (auto& v : b)
        if (static_cast<int>(v.size()) != dim)
            throw StructuralError("subspace_contained: ambient dimensions differ");
    QMatrix mb(dim, b);
    QMatrix mab(dim, b);
    for (auto& v : a)
        mab.append_row(v);
    return matrix_rank(mb) == matrix_rank(mab);
}

} // namespace dsh
