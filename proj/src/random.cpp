#include "dsh/random.hpp"

#include "dsh/lyndon.hpp"

#include <map>
#include <mutex>

namespace dsh {

Rational Rng::small_rational(int range)
{
    int p = 0;
    while (p == 0)
        p = uniform(-range, range);
    Rational r(p, uniform(1, range));
    r.canonicalize();
    return r;
}

namespace {

const std::vector<LyndonElement>& cached_basis(const GroupPtr& group, int n, int cap)
{
    static std::mutex mutex;
    static std::map<std::tuple<std::vector<int>, int, int>, std::vector<LyndonElement>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(group->spec().orders(), n, cap);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, lyndon_basis(group, n, cap)).first;
    return it->second;
}

} // namespace

XSeries random_lie(const GroupPtr& group, int cap, Rng& rng, int terms, int min_degree, int max_degree)
{
    if (max_degree < 0 || max_degree > cap)
        max_degree = cap;
    XSeries out(group, cap);
    if (min_degree > max_degree)
        return out;
    for (int i = 0; i < terms; ++i) {
        int n = rng.uniform(min_degree, max_degree);
        const auto& basis = cached_basis(group, n, cap);
        const auto& e = basis[rng.uniform(0, static_cast<int>(basis.size()) - 1)];
        out += e.expansion * rng.small_rational();
    }
    return out;
}

XSeries random_grouplike(const GroupPtr& group, int cap, Rng& rng, int terms, int min_degree, int max_degree)
{
    return series_exp(random_lie(group, cap, rng, terms, min_degree, max_degree));
}

XSeries random_series(const GroupPtr& group, int cap, Rng& rng, int terms)
{
    XSeries out(group, cap);
    for (int i = 0; i < terms; ++i) {
        int len = rng.uniform(0, cap);
        Word w;
        for (int j = 0; j < len; ++j)
            w += static_cast<char>(rng.uniform(0, group->size()));
        out.add_term(w, rng.small_rational());
    }
    return out;
}

YSeries random_y_series(const GroupPtr& group, int cap, Rng& rng, int terms)
{
    YSeries out(group, cap);
    for (int i = 0; i < terms; ++i) {
        int len = rng.uniform(0, cap);
        Word w;
        for (int j = 0; j < len; ++j)
            w += static_cast<char>(rng.uniform(0, group->size()));
        if (!w.empty())
            w.back() = x_letter(rng.uniform(0, group->size() - 1));
        out.add_term(w, rng.small_rational());
    }
    return out;
}

} // namespace dsh
