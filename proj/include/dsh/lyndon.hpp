#pragma once

#include "series.hpp"

#include <string>
#include <vector>

namespace dsh {

struct LyndonElement {
    Word word;
    std::string bracket; // standard bracketing, e.g. "[x0,[x0,x1]]"
    XSeries expansion;
};

// Graded piece of the Lyndon basis of the free Lie algebra on X. The letter
// order is x0 < x_{g(0)} < x_{g(1)} < ... unless a permutation of letter codes
// is given (order[i] is the i-th smallest letter).
std::vector<LyndonElement> lyndon_basis(const GroupPtr& group, int n, int cap, const std::vector<int>& order = {});

std::vector<Word> lyndon_words(int n, const std::vector<int>& order);
// Necklace polynomial (1/n) sum_{d|n} mu(d) k^{n/d}.
long witt_dimension(int alphabet_size, int n);

} // namespace dsh
