#pragma once

#include "series.hpp"
#include "uniseries.hpp"
#include "word_algebras.hpp"

#include <functional>
#include <unordered_map>

namespace dsh {

template <class Tag>
Series<Tag> mul_word_left(const Word& w, const Series<Tag>& a)
{
    Series<Tag> r(a.group_ptr(), a.cap());
    for (auto& [u, c] : a.terms())
        r.add_term(w + u, c);
    return r;
}

template <class Tag>
Series<Tag> mul_word_right(const Series<Tag>& a, const Word& w)
{
    Series<Tag> r(a.group_ptr(), a.cap());
    for (auto& [u, c] : a.terms())
        r.add_term(u + w, c);
    return r;
}

// How a word splits into generators: single X-letters, or y-letters
// x0^{n-1}x_g for k<<Y>> and W_G.
enum class Pieces { Letters, YLetters };

inline size_t piece_length(Pieces p, const Word& w)
{
    return p == Pieces::Letters ? 1 : first_block_length(w);
}

// Continuous algebra endomorphism fixed by the images of the generators.
// Images of generators and of words are memoized.
template <class Tag>
class AlgebraMorphism {
public:
    using PieceImage = std::function<Series<Tag>(const Word& piece)>;

    AlgebraMorphism(GroupPtr group, int cap, Pieces pieces, PieceImage image)
        : group_(std::move(group)), cap_(cap), pieces_(pieces), image_(std::move(image))
    {
    }

    const Series<Tag>& of_word(const Word& w)
    {
        if (auto it = memo_.find(w); it != memo_.end())
            return it->second;
        Series<Tag> r(group_, cap_);
        if (w.empty()) {
            r.add_term(Word{}, 1);
        } else {
            size_t len = piece_length(pieces_, w);
            const Series<Tag>& head = piece(w.substr(0, len));
            r = len == w.size() ? head : head * of_word(w.substr(len));
        }
        return memo_.emplace(w, std::move(r)).first->second;
    }

    Series<Tag> operator()(const Series<Tag>& a)
    {
        detail::check_same(group_, a.group_ptr(), cap_, a.cap());
        Series<Tag> out(group_, cap_);
        for (auto& [w, c] : a.terms())
            for (auto& [u, v] : of_word(w).terms())
                out.accumulate(u, c * v);
        out.prune();
        return out;
    }

private:
    const Series<Tag>& piece(const Word& p)
    {
        if (auto it = pieces_memo_.find(p); it != pieces_memo_.end())
            return it->second;
        return pieces_memo_.emplace(p, image_(p)).first->second;
    }

    GroupPtr group_;
    int cap_;
    Pieces pieces_;
    PieceImage image_;
    std::unordered_map<Word, Series<Tag>> pieces_memo_;
    std::unordered_map<Word, Series<Tag>> memo_;
};

// Continuous derivation fixed by the images of the generators (Leibniz rule).
template <class Tag>
class Derivation {
public:
    using PieceImage = std::function<Series<Tag>(const Word& piece)>;

    Derivation(GroupPtr group, int cap, Pieces pieces, PieceImage image)
        : group_(std::move(group)), cap_(cap), pieces_(pieces), image_(std::move(image))
    {
    }

    const Series<Tag>& of_word(const Word& w)
    {
        if (auto it = memo_.find(w); it != memo_.end())
            return it->second;
        Series<Tag> r(group_, cap_);
        if (!w.empty()) {
            size_t len = piece_length(pieces_, w);
            Word head = w.substr(0, len);
            Word rest = w.substr(len);
            r = mul_word_right(piece(head), rest);
            if (!rest.empty())
                r += mul_word_left(head, of_word(rest));
        }
        return memo_.emplace(w, std::move(r)).first->second;
    }

    Series<Tag> operator()(const Series<Tag>& a)
    {
        detail::check_same(group_, a.group_ptr(), cap_, a.cap());
        Series<Tag> out(group_, cap_);
        for (auto& [w, c] : a.terms())
            for (auto& [u, v] : of_word(w).terms())
                out.accumulate(u, c * v);
        out.prune();
        return out;
    }

private:
    const Series<Tag>& piece(const Word& p)
    {
        if (auto it = pieces_memo_.find(p); it != pieces_memo_.end())
            return it->second;
        return pieces_memo_.emplace(p, image_(p)).first->second;
    }

    GroupPtr group_;
    int cap_;
    Pieces pieces_;
    PieceImage image_;
    std::unordered_map<Word, Series<Tag>> pieces_memo_;
    std::unordered_map<Word, Series<Tag>> memo_;
};

// Linear map given word by word, memoized.
template <class Tag>
class LinearMap {
public:
    using WordImage = std::function<Series<Tag>(const Word&)>;

    LinearMap(GroupPtr group, int cap, WordImage image) : group_(std::move(group)), cap_(cap), image_(std::move(image)) {}

    const Series<Tag>& of_word(const Word& w)
    {
        if (auto it = memo_.find(w); it != memo_.end())
            return it->second;
        return memo_.emplace(w, image_(w)).first->second;
    }

    Series<Tag> operator()(const Series<Tag>& a)
    {
        detail::check_same(group_, a.group_ptr(), cap_, a.cap());
        Series<Tag> out(group_, cap_);
        for (auto& [w, c] : a.terms())
            for (auto& [u, v] : of_word(w).terms())
                out.accumulate(u, c * v);
        out.prune();
        return out;
    }

private:
    GroupPtr group_;
    int cap_;
    WordImage image_;
    std::unordered_map<Word, Series<Tag>> memo_;
};

// (f (x) f)(t) for a map given on words; truncated in total degree.
template <class Tag, class F>
Tensor<Tag> tensor_square_map(const Tensor<Tag>& t, F&& f)
{
    Tensor<Tag> out(t.group_ptr(), t.cap());
    Rational c;
    for (auto& [k, coeff] : t.terms()) {
        auto [l, r] = Tensor<Tag>::split(k);
        const Series<Tag>& fl = f(l);
        const Series<Tag>& fr = f(r);
        auto buckets = fr.by_degree();
        for (auto& [wl, cl] : fl.terms()) {
            int room = t.cap() - degree(wl);
            for (int d = 0; d <= room; ++d)
                for (auto* p : buckets[d]) {
                    c = coeff * cl * p->second;
                    out.accumulate_key(Tensor<Tag>::key(wl, p->first), c);
                }
        }
    }
    out.prune();
    return out;
}

// (f (x) id + id (x) f)(t).
template <class Tag, class F>
Tensor<Tag> tensor_derivation_map(const Tensor<Tag>& t, F&& f)
{
    Tensor<Tag> out(t.group_ptr(), t.cap());
    for (auto& [k, coeff] : t.terms()) {
        auto [l, r] = Tensor<Tag>::split(k);
        const auto& fl = f(l);
        for (auto& [wl, cl] : fl.terms())
            out.accumulate_key(Tensor<Tag>::key(wl, r), coeff * cl);
        const auto& fr = f(r);
        for (auto& [wr, cr] : fr.terms())
            out.accumulate_key(Tensor<Tag>::key(l, wr), coeff * cr);
    }
    out.prune();
    return out;
}

// f(x1) for a univariate series f: sum_k f_k x1^k. In the z-letters the same
// word x1^k encodes z_{1,1}^k.
template <class Tag>
Series<Tag> evaluate_at_x1(const UniSeries& f, const GroupPtr& group, int cap)
{
    Series<Tag> r(group, cap);
    for (int k = 0; k <= std::min(cap, f.cap()); ++k)
        r.add_term(Word(static_cast<size_t>(k), x_letter(0)), f[k]);
    return r;
}

} // namespace dsh
