#include "dsh/mlv.hpp"

#include "dsh/errors.hpp"
#include "dsh/word_algebras.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace dsh {

namespace {

using Complex = std::complex<long double>;

constexpr int kBasis = 6;

// Tail model for z = 1 sums: c0 + (c1 + c2 L + c3 L^2)/M + (c4 + c5 L)/M^2, L = ln M.
std::array<long double, kBasis> tail_basis(long double m)
{
    long double l = std::log(m);
    return {1.0L, 1.0L / m, l / m, l * l / m, 1.0L / (m * m), l / (m * m)};
}

// Solves the square system by Gaussian elimination with partial pivoting on
// column-normalized entries.
long double extrapolate(const std::vector<std::int64_t>& points, const std::vector<long double>& values)
{
    std::array<std::array<long double, kBasis + 1>, kBasis> a{};
    std::array<long double, kBasis> scale{};
    for (int i = 0; i < kBasis; ++i) {
        auto row = tail_basis(static_cast<long double>(points[i]));
        for (int j = 0; j < kBasis; ++j) {
            a[i][j] = row[j];
            scale[j] = std::max(scale[j], std::fabs(row[j]));
        }
        a[i][kBasis] = values[i];
    }
    for (int i = 0; i < kBasis; ++i)
        for (int j = 0; j < kBasis; ++j)
            a[i][j] /= scale[j];
    for (int col = 0; col < kBasis; ++col) {
        int pivot = col;
        for (int r = col + 1; r < kBasis; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col]))
                pivot = r;
        std::swap(a[col], a[pivot]);
        for (int r = 0; r < kBasis; ++r) {
            if (r == col)
                continue;
            long double f = a[r][col] / a[col][col];
            for (int j = col; j <= kBasis; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    return a[0][kBasis] / a[0][0] / scale[0];
}

int residue(std::int64_t a, int n) { return static_cast<int>(((a % n) + n) % n); }

} // namespace

MLVEstimate mlv_eval(const MLVQuery& q)
{
    const size_t r = q.k.size();
    if (r == 0 || q.a.size() != r)
        throw DomainError("MLV query needs matching nonempty exponent and root lists");
    if (q.N < 1)
        throw DomainError("root order N must be positive");
    if (q.M < 1)
        throw DomainError("summation bound M must be positive");
    for (int k : q.k)
        if (k < 1)
            throw DomainError("MLV exponents must be positive");
    if (q.k.back() == 1 && residue(q.a.back(), q.N) == 0)
        throw DomainError("divergent multiple L-value: convergence needs (k_r, z_r) != (1, 1)");

    std::vector<Complex> roots(static_cast<size_t>(q.N));
    for (int t = 0; t < q.N; ++t)
        roots[static_cast<size_t>(t)] = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * t / q.N);

    bool all_trivial = true;
    for (int a : q.a)
        all_trivial = all_trivial && residue(a, q.N) == 0;

    // Checkpoints M, M/2, ..., recorded on the way up.
    std::vector<std::int64_t> checkpoints;
    for (std::int64_t m = q.M; m >= 1 && static_cast<int>(checkpoints.size()) < kBasis; m /= 2)
        checkpoints.push_back(m);
    std::vector<Complex> at_checkpoint(checkpoints.size());

    std::vector<Complex> partial(r + 1);
    partial[0] = 1;
    size_t next = checkpoints.size();
    for (std::int64_t m = 1; m <= q.M; ++m) {
        const long double inv = 1.0L / static_cast<long double>(m);
        for (size_t j = r; j >= 1; --j) {
            long double mag = 1;
            for (int e = 0; e < q.k[j - 1]; ++e)
                mag *= inv;
            const Complex& z = roots[static_cast<size_t>(residue(static_cast<std::int64_t>(residue(q.a[j - 1], q.N)) * (m % q.N), q.N))];
            partial[j] += z * mag * partial[j - 1];
        }
        if (next > 0 && m == checkpoints[next - 1])
            at_checkpoint[--next] = partial[r];
    }

    MLVEstimate est;
    est.partial_sum = partial[r];
    if (all_trivial && static_cast<int>(checkpoints.size()) == kBasis) {
        std::vector<long double> re;
        for (auto& c : at_checkpoint)
            re.push_back(c.real());
        est.value = Complex(extrapolate(checkpoints, re), 0);
        est.error_bound = std::abs(est.value - est.partial_sum);
    } else {
        est.value = est.partial_sum;
        est.error_bound = checkpoints.size() > 1 ? std::abs(at_checkpoint[0] - at_checkpoint[1]) : std::abs(est.value);
    }
    return est;
}

MLVQuery mlv_query_for_y_word(const Group& group, const Word& y_word, std::int64_t M)
{
    const auto& orders = group.spec().orders();
    if (orders.size() > 1)
        throw UnsupportedError("MLV evaluation needs G = Z/N written with a single factor");
    MLVQuery q;
    q.N = orders.empty() ? 1 : orders[0];
    q.M = M;
    auto letters = y_letters(y_word);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        q.k.push_back(it->n);
        q.a.push_back(orders.empty() ? 0 : group.residues(it->g)[0]);
    }
    return q;
}

MLVEstimate mlv_eval_series(const YSeries& s, std::int64_t M)
{
    MLVEstimate total;
    for (auto& [w, c] : s.sorted_terms()) {
        const long double coef = c.get_d();
        if (w.empty()) {
            total.value += coef;
            total.partial_sum += coef;
            continue;
        }
        MLVEstimate e = mlv_eval(mlv_query_for_y_word(s.group(), w, M));
        total.value += coef * e.value;
        total.partial_sum += coef * e.partial_sum;
        total.error_bound += std::fabs(coef) * e.error_bound;
    }
    return total;
}

} // namespace dsh
