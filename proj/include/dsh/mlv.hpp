#pragma once

#include "group.hpp"
#include "series.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace dsh {

// L_{(k_1..k_r)}(z_1..z_r) = sum_{0 < m_1 < ... < m_r} z_1^{m_1} ... z_r^{m_r} / (m_1^{k_1} ... m_r^{k_r})
// with z_j = exp(2 pi i a_j / N), truncated to m_r <= M.
//
// This is the only floating-point code in the library.
struct MLVQuery {
    std::vector<int> k;
    std::vector<int> a;
    int N = 1;
    std::int64_t M = 1000000;
};

struct MLVEstimate {
    std::complex<long double> value; // extrapolated when every a_j = 0, else the partial sum
    std::complex<long double> partial_sum;
    long double error_bound = 0;      // |value - partial_sum|, or |S(M) - S(M/2)| without extrapolation
};

// Throws DomainError for divergent queries ((k_r, z_r) = (1, 1)) and for
// malformed ones.
MLVEstimate mlv_eval(const MLVQuery& q);

// y_{k_1,g_1} ... y_{k_r,g_r} -> L_{(k_r..k_1)}(z_{g_r}..z_{g_1}): the last
// y-letter carries the smallest summation index. G must be cyclic; g is read
// as its residue modulo |G|.
MLVQuery mlv_query_for_y_word(const Group& group, const Word& y_word, std::int64_t M);

// Linear combination of mlv_eval over the terms of a Y-series (the empty word
// counts as 1). Error bounds add up.
MLVEstimate mlv_eval_series(const YSeries& s, std::int64_t M);

} // namespace dsh
