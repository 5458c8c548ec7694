#pragma once

#include "dsh/graded_solver.hpp"
#include "dsh/group.hpp"
#include "dsh/series.hpp"

#include <functional>
#include <vector>

namespace dsh::test {

// Right-nested brackets [a1, [a2, ..., an]] of all letter sequences span the
// degree n part of the free Lie algebra on {x0, x1}.
inline std::vector<XSeries> nested_brackets(const GroupPtr& g, int n)
{
    std::vector<XSeries> out;
    for (int code = 0; code < (1 << n); ++code) {
        XSeries b = XSeries::monomial(g, n, Word(1, static_cast<char>((code >> (n - 1)) & 1)));
        for (int i = n - 2; i >= 0; --i) {
            XSeries a = XSeries::monomial(g, n, Word(1, static_cast<char>((code >> i) & 1)));
            b = a * b - b * a;
        }
        out.push_back(b);
    }
    return out;
}

using Composition = std::vector<int>;

inline std::vector<Composition> stuffle(const Composition& u, const Composition& v)
{
    if (u.empty())
        return {v};
    if (v.empty())
        return {u};
    std::vector<Composition> out;
    auto prefix = [&](int a, std::vector<Composition> tails) {
        for (auto& t : tails) {
            t.insert(t.begin(), a);
            out.push_back(std::move(t));
        }
    };
    prefix(u[0], stuffle(Composition(u.begin() + 1, u.end()), v));
    prefix(v[0], stuffle(u, Composition(v.begin() + 1, v.end())));
    prefix(u[0] + v[0], stuffle(Composition(u.begin() + 1, u.end()), Composition(v.begin() + 1, v.end())));
    return out;
}

inline std::vector<Composition> compositions(int n)
{
    if (n == 0)
        return {{}};
    std::vector<Composition> out;
    for (int first = 1; first <= n; ++first)
        for (auto& rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

// x0^{k1-1} x1 ... x0^{kr-1} x1
inline Word x_word(const Composition& c)
{
    Word w;
    for (int k : c) {
        w.append(static_cast<size_t>(k - 1), static_cast<char>(0));
        w.push_back(static_cast<char>(1));
    }
    return w;
}

inline Rational coeff(const XSeries& s, const Word& w)
{
    auto it = s.terms().find(w);
    return it == s.terms().end() ? Rational(0) : it->second;
}

// Independent count of the degree n part of dmr0 for the trivial group.
inline int trivial_dmr0_dimension(int n)
{
    auto g = make_group(GroupSpec::parse("trivial"));
    auto span = nested_brackets(g, n);
    std::vector<Word> words;
    for (int code = 0; code < (1 << n); ++code) {
        Word u;
        for (int i = n - 1; i >= 0; --i)
            u.push_back(static_cast<char>((code >> i) & 1));
        words.push_back(u);
    }

    // psi_*(c): coefficient of the composition c in
    //   pi_Y(psi) + (-1)^{n-1}/n (psi|x0^{n-1}x1) y1^n.
    auto star = [&](const XSeries& psi, const Composition& c) {
        Rational v = coeff(psi, x_word(c));
        if (n >= 2 && c == Composition(static_cast<size_t>(n), 1)) {
            Rational corr = coeff(psi, x_word({n})) / Rational(n);
            v += (n % 2 == 0) ? Rational(-corr) : corr;
        }
        return v;
    };

    std::vector<std::function<Rational(const XSeries&)>> constraints;
    if (n == 1) {
        constraints.push_back([](const XSeries& p) { return coeff(p, Word(1, 0)); });
        constraints.push_back([](const XSeries& p) { return coeff(p, Word(1, 1)); });
    }
    if (n == 2)
        constraints.push_back([&](const XSeries& p) { return star(p, {2}); });
    for (int k = 1; k < n; ++k)
        for (auto& u : compositions(k))
            for (auto& v : compositions(n - k))
                constraints.push_back([&star, u, v](const XSeries& p) {
                    Rational s = 0;
                    for (auto& c : stuffle(u, v))
                        s += star(p, c);
                    return s;
                });

    QMatrix s(static_cast<int>(words.size()), static_cast<int>(span.size()));
    QMatrix cs(static_cast<int>(constraints.size()), static_cast<int>(span.size()));
    for (size_t j = 0; j < span.size(); ++j) {
        for (size_t i = 0; i < words.size(); ++i)
            s.at(static_cast<int>(i), static_cast<int>(j)) = coeff(span[j], words[i]);
        for (size_t i = 0; i < constraints.size(); ++i)
            cs.at(static_cast<int>(i), static_cast<int>(j)) = constraints[i](span[j]);
    }
    return matrix_rank(s) - matrix_rank(cs);
}

} // namespace dsh::test
