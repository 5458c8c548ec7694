#pragma once

#include "rational.hpp"

#include <vector>

namespace dsh {

// Weights w_i with p'(0) = sum_i w_i p(i) for every polynomial p of degree
// <= d (Lagrange interpolation at the nodes 0..d).
inline std::vector<Rational> first_order_weights(int d)
{
    std::vector<Rational> w(d + 1);
    for (int j = 1; j <= d; ++j)
        w[0] -= Rational(1, j);
    for (int i = 1; i <= d; ++i) {
        Rational l(1, i);
        for (int j = 1; j <= d; ++j)
            if (j != i)
                l *= Rational(j) / Rational(j - i);
        w[i] = l;
    }
    return w;
}

// t-linear coefficient of t -> f(t), for f polynomial in t of degree <= d
// with values in any vector space type. Exact for such f.
template <class F>
auto first_order_part(int d, F&& f) -> decltype(f(Rational(0)))
{
    auto weights = first_order_weights(d);
    auto result = f(Rational(0)) * weights[0];
    for (int i = 1; i <= d; ++i)
        result += f(Rational(i)) * weights[i];
    return result;
}

} // namespace dsh
