#include "dsh/lyndon.hpp"

#include "dsh/format.hpp"

#include <map>
#include <numeric>

namespace dsh {

namespace {

bool rank_less(const std::vector<int>& rank, const Word& a, const Word& b)
{
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int ra = rank[static_cast<unsigned char>(a[i])];
        int rb = rank[static_cast<unsigned char>(b[i])];
        if (ra != rb)
            return ra < rb;
    }
    return a.size() < b.size();
}

bool is_lyndon(const std::vector<int>& rank, const Word& w)
{
    for (size_t i = 1; i < w.size(); ++i)
        if (!rank_less(rank, w, w.substr(i)))
            return false;
    return !w.empty();
}

std::vector<int> default_order(int k)
{
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

int mobius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            result = -result;
        }
    }
    if (n > 1)
        result = -result;
    return result;
}

} // namespace

std::vector<Word> lyndon_words(int n, const std::vector<int>& order)
{
    // Duval's algorithm on ranks, mapped back to letter codes.
    const int k = static_cast<int>(order.size());
    std::vector<Word> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == n) {
            Word word;
            for (int r : w)
                word += static_cast<char>(order[r]);
            out.push_back(word);
        }
        size_t m = w.size();
        while (static_cast<int>(w.size()) < n)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == k - 1)
            w.pop_back();
    }
    return out;
}

long witt_dimension(int alphabet_size, int n)
{
    long total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d)
            continue;
        long p = 1;
        for (int i = 0; i < n / d; ++i)
            p *= alphabet_size;
        total += mobius(d) * p;
    }
    return total / n;
}

std::vector<LyndonElement> lyndon_basis(const GroupPtr& group, int n, int cap, const std::vector<int>& order_in)
{
    const int k = group->size() + 1;
    std::vector<int> order = order_in.empty() ? default_order(k) : order_in;
    if (static_cast<int>(order.size()) != k)
        throw StructuralError("letter order must list " + std::to_string(k) + " letters");
    std::vector<int> rank(256, 0);
    for (int i = 0; i < k; ++i)
        rank[order[i]] = i;

    std::map<Word, std::pair<std::string, XSeries>> memo;
    auto expand = [&](auto&& self, const Word& w) -> const std::pair<std::string, XSeries>& {
        if (auto it = memo.find(w); it != memo.end())
            return it->second;
        std::pair<std::string, XSeries> r{std::string(), XSeries(group, cap)};
        if (w.size() == 1) {
            r.first = format_word(*group, w, Alphabet::X);
            r.second.add_term(w, 1);
        } else {
            // Standard factorization: v is the longest proper Lyndon suffix.
            size_t split = w.size() - 1;
            for (size_t i = 1; i < w.size(); ++i)
                if (is_lyndon(rank, w.substr(i))) {
                    split = i;
                    break;
                }
            const auto& u = self(self, w.substr(0, split));
            const auto& v = self(self, w.substr(split));
            r.first = "[" + u.first + "," + v.first + "]";
            r.second = commutator(u.second, v.second);
        }
        return memo.emplace(w, std::move(r)).first->second;
    };

    std::vector<LyndonElement> out;
    for (auto& w : lyndon_words(n, order)) {
        const auto& e = expand(expand, w);
        out.push_back({w, e.first, e.second});
    }
    return out;
}

} // namespace dsh
