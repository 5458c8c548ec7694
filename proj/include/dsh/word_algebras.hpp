#pragma once

#include "series.hpp"

#include <unordered_map>
#include <vector>

namespace dsh {

// ---- letters and words -------------------------------------------------

struct YLetter {
    int n; // >= 1
    int g; // group index

    bool operator==(const YLetter&) const = default;
};

// x0^{n-1} x_g
Word y_letter_word(int n, int g);
Word y_word(const std::vector<YLetter>& letters);
// Splits a Y-word into its y-letters; throws DomainError if w ends in x0.
std::vector<YLetter> y_letters(const Word& w);
// Length of the first y-letter of a nonempty Y-word.
size_t first_block_length(const Word& w);

// x1 is x_g at the identity.
inline Word x1_word() { return Word(1, x_letter(0)); }
XSeries x0_series(const GroupPtr& group, int cap);
XSeries xg_series(const GroupPtr& group, int cap, int g);

Word t_word(const Group& group, int g, const Word& w);
Word q_word(const Group& group, const Word& w);
Word q_inv_word(const Group& group, const Word& w);

// ---- the algebra k<<X>> ------------------------------------------------

inline XSeries x_mul(const XSeries& a, const XSeries& b) { return a * b; }
XTensor x_coproduct(const XSeries& a);
bool x_is_grouplike(const XSeries& a);
bool x_is_primitive(const XSeries& a);
XSeries t_action(int g, const XSeries& a);
XSeries t_action(const GroupElement& g, const XSeries& a);
XSeries q_map(const XSeries& a);
XSeries q_inv(const XSeries& a);
XSeries shuffle_product(const XSeries& a, const XSeries& b);

// ---- k<<Y>> and the quotient k<<X>>/k<<X>>x0 ------------------------------

// Drops words ending in x0; the rest are read as Y-words.
YSeries pi_Y(const XSeries& a);
XSeries y_inject(const YSeries& a);
YSeries q_Y(const YSeries& a);
YSeries q_Y_inv(const YSeries& a);

// Harmonic coproduct on generators
//   y_{n,g} -> y_{n,g}(x)1 + 1(x)y_{n,g} + sum_{k=1}^{n-1} sum_h y_{k,h} (x) y_{n-k,h^{-1}g},
// extended multiplicatively. Shared by k<<Y>> and by W_G, M_G in the z-letters.
// Images of words are memoized, so keep one instance per (group, cap).
template <class Tag>
class HarmonicCoproduct {
public:
    HarmonicCoproduct(GroupPtr group, int cap) : group_(std::move(group)), cap_(cap) {}

    const Tensor<Tag>& of_word(const Word& w);
    Tensor<Tag> operator()(const Series<Tag>& a);
    int cap() const { return cap_; }

private:
    Tensor<Tag> generator(const YLetter& y) const;

    GroupPtr group_;
    int cap_;
    std::unordered_map<Word, Tensor<Tag>> memo_;
};

extern template class HarmonicCoproduct<YTag>;
extern template class HarmonicCoproduct<ZTag>;

YTensor y_harmonic_coproduct(const YSeries& a);
// The quotient coproduct, computed on the Y-representative.
YTensor delta_star_mod(const YSeries& m);

// Quasi-shuffle product dual to the harmonic coproduct:
//   y_{k,h} <> y_{m,h'} = y_{k+m, hh'}.
YSeries harmonic_product(const YSeries& a, const YSeries& b);

template <class Tag>
Rational pairing(const Series<Tag>& a, const Series<Tag>& b)
{
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    Rational s = 0;
    for (auto& [w, c] : small.terms())
        if (auto it = large.terms().find(w); it != large.terms().end())
            s += c * it->second;
    return s;
}

template <class Tag>
Rational pairing(const Tensor<Tag>& a, const Tensor<Tag>& b)
{
    Rational s = 0;
    for (auto& [k, c] : a.terms())
        if (auto it = b.terms().find(k); it != b.terms().end())
            s += c * it->second;
    return s;
}

// All words of degree <= cap over X (or only Y-words), in canonical order.
std::vector<Word> all_x_words(const Group& group, int cap);
std::vector<Word> all_y_words(const Group& group, int cap);

} // namespace dsh
