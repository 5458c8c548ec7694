#include "dsh/word_algebras.hpp"

#include <map>

namespace dsh {

Word y_letter_word(int n, int g)
{
    Word w(static_cast<size_t>(n - 1), kX0);
    w += x_letter(g);
    return w;
}

Word y_word(const std::vector<YLetter>& letters)
{
    Word w;
    for (auto& y : letters)
        w += y_letter_word(y.n, y.g);
    return w;
}

std::vector<YLetter> y_letters(const Word& w)
{
    if (!is_y_word(w))
        throw DomainError("word ends in x0 and is not a Y-word");
    std::vector<YLetter> out;
    int run = 0;
    for (char c : w) {
        if (is_x0(c)) {
            ++run;
        } else {
            out.push_back({run + 1, letter_group(c)});
            run = 0;
        }
    }
    return out;
}

size_t first_block_length(const Word& w)
{
    size_t i = 0;
    while (i < w.size() && is_x0(w[i]))
        ++i;
    return i + 1;
}

XSeries x0_series(const GroupPtr& group, int cap)
{
    return XSeries::monomial(group, cap, Word(1, kX0));
}

XSeries xg_series(const GroupPtr& group, int cap, int g)
{
    return XSeries::monomial(group, cap, Word(1, x_letter(g)));
}

Word t_word(const Group& group, int g, const Word& w)
{
    Word out(w);
    for (char& c : out)
        if (!is_x0(c))
            c = x_letter(group.mul(g, letter_group(c)));
    return out;
}

Word q_word(const Group& group, const Word& w)
{
    Word out(w);
    int prev = 0;
    for (char& c : out) {
        if (is_x0(c))
            continue;
        int g = letter_group(c);
        c = x_letter(group.div(g, prev));
        prev = g;
    }
    return out;
}

Word q_inv_word(const Group& group, const Word& w)
{
    Word out(w);
    int acc = 0;
    for (char& c : out) {
        if (is_x0(c))
            continue;
        acc = group.mul(letter_group(c), acc);
        c = x_letter(acc);
    }
    return out;
}

namespace {

template <class To, class From, class F>
Series<To> map_words(const Series<From>& a, F&& f)
{
    Series<To> r(a.group_ptr(), a.cap());
    for (auto& [w, c] : a.terms())
        r.add_term(f(w), c);
    return r;
}

} // namespace

XTensor x_coproduct(const XSeries& a)
{
    XTensor t(a.group_ptr(), a.cap());
    Word l, r;
    for (auto& [w, c] : a.terms()) {
        const size_t n = w.size();
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            l.clear();
            r.clear();
            for (size_t i = 0; i < n; ++i)
                ((mask >> i) & 1 ? l : r) += w[i];
            t.accumulate_key(XTensor::key(l, r), c);
        }
    }
    t.prune();
    return t;
}

bool x_is_grouplike(const XSeries& a)
{
    return a.constant() == 1 && x_coproduct(a) == tensor_product(a, a);
}

bool x_is_primitive(const XSeries& a)
{
    return x_coproduct(a) == unit_tensor(a, true) + unit_tensor(a, false);
}

XSeries t_action(int g, const XSeries& a)
{
    const Group& group = a.group();
    return map_words<XTag>(a, [&](const Word& w) { return t_word(group, g, w); });
}

XSeries t_action(const GroupElement& g, const XSeries& a)
{
    return t_action(a.group().index_of(g), a);
}

XSeries q_map(const XSeries& a)
{
    const Group& group = a.group();
    return map_words<XTag>(a, [&](const Word& w) { return q_word(group, w); });
}

XSeries q_inv(const XSeries& a)
{
    const Group& group = a.group();
    return map_words<XTag>(a, [&](const Word& w) { return q_inv_word(group, w); });
}

XSeries shuffle_product(const XSeries& a, const XSeries& b)
{
    a.check_compatible(b);
    XSeries r(a.group_ptr(), a.cap());
    Word w;
    Rational t;
    for (auto& [u, cu] : a.terms()) {
        for (auto& [v, cv] : b.terms()) {
            const size_t n = u.size() + v.size();
            if (static_cast<int>(n) > a.cap())
                continue;
            mpq_mul(t.get_mpq_t(), cu.get_mpq_t(), cv.get_mpq_t());
            // Each mask with |u| bits set picks the positions taken by u.
            for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
                if (static_cast<size_t>(__builtin_popcountl(mask)) != u.size())
                    continue;
                w.assign(n, kX0);
                size_t iu = 0, iv = 0;
                for (size_t i = 0; i < n; ++i)
                    w[i] = (mask >> i) & 1 ? u[iu++] : v[iv++];
                r.accumulate(w, t);
            }
        }
    }
    r.prune();
    return r;
}

YSeries pi_Y(const XSeries& a)
{
    YSeries r(a.group_ptr(), a.cap());
    for (auto& [w, c] : a.terms())
        if (is_y_word(w))
            r.add_term(w, c);
    return r;
}

XSeries y_inject(const YSeries& a)
{
    return retag<XTag>(a);
}

YSeries q_Y(const YSeries& a)
{
    const Group& group = a.group();
    return map_words<YTag>(a, [&](const Word& w) { return q_word(group, w); });
}

YSeries q_Y_inv(const YSeries& a)
{
    const Group& group = a.group();
    return map_words<YTag>(a, [&](const Word& w) { return q_inv_word(group, w); });
}

template <class Tag>
Tensor<Tag> HarmonicCoproduct<Tag>::generator(const YLetter& y) const
{
    Tensor<Tag> t(group_, cap_);
    Word w = y_letter_word(y.n, y.g);
    t.add_term(w, Word{}, 1);
    t.add_term(Word{}, w, 1);
    const Group& g = *group_;
    for (int k = 1; k < y.n; ++k)
        for (int h = 0; h < g.size(); ++h)
            t.add_term(y_letter_word(k, h), y_letter_word(y.n - k, g.mul(g.inv(h), y.g)), 1);
    return t;
}

template <class Tag>
const Tensor<Tag>& HarmonicCoproduct<Tag>::of_word(const Word& w)
{
    if (auto it = memo_.find(w); it != memo_.end())
        return it->second;
    Tensor<Tag> t(group_, cap_);
    if (w.empty()) {
        t.add_term(Word{}, Word{}, 1);
    } else {
        if (!is_y_word(w))
            throw DomainError("harmonic coproduct applied to a word ending in x0");
        size_t len = first_block_length(w);
        YLetter first{static_cast<int>(len), letter_group(w[len - 1])};
        Tensor<Tag> head = generator(first);
        if (len == w.size())
            t = std::move(head);
        else
            t = head * of_word(w.substr(len));
    }
    return memo_.emplace(w, std::move(t)).first->second;
}

template <class Tag>
Tensor<Tag> HarmonicCoproduct<Tag>::operator()(const Series<Tag>& a)
{
    if (a.cap() != cap_ || !(a.group().spec() == group_->spec()))
        throw StructuralError("harmonic coproduct: cap or group mismatch");
    Tensor<Tag> out(group_, cap_);
    for (auto& [w, c] : a.terms())
        for (auto& [k, v] : of_word(w).terms())
            out.accumulate_key(k, c * v);
    out.prune();
    return out;
}

template class HarmonicCoproduct<YTag>;
template class HarmonicCoproduct<ZTag>;

YTensor y_harmonic_coproduct(const YSeries& a)
{
    HarmonicCoproduct<YTag> delta(a.group_ptr(), a.cap());
    return delta(a);
}

YTensor delta_star_mod(const YSeries& m)
{
    return y_harmonic_coproduct(m);
}

namespace {

class QuasiShuffle {
public:
    QuasiShuffle(const Group& group, const std::vector<YLetter>& a, const std::vector<YLetter>& b)
        : group_(group), a_(a), b_(b)
    {
    }

    // Product of the suffixes a[i:] and b[j:].
    const std::map<Word, Rational>& run(size_t i, size_t j)
    {
        auto key = std::make_pair(i, j);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::map<Word, Rational> out;
        if (i == a_.size() || j == b_.size()) {
            Word rest;
            for (size_t k = i; k < a_.size(); ++k)
                rest += y_letter_word(a_[k].n, a_[k].g);
            for (size_t k = j; k < b_.size(); ++k)
                rest += y_letter_word(b_[k].n, b_[k].g);
            out[rest] = 1;
        } else {
            Word la = y_letter_word(a_[i].n, a_[i].g);
            Word lb = y_letter_word(b_[j].n, b_[j].g);
            Word lab = y_letter_word(a_[i].n + b_[j].n, group_.mul(a_[i].g, b_[j].g));
            for (auto& [w, c] : run(i + 1, j))
                out[la + w] += c;
            for (auto& [w, c] : run(i, j + 1))
                out[lb + w] += c;
            for (auto& [w, c] : run(i + 1, j + 1))
                out[lab + w] += c;
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    const Group& group_;
    const std::vector<YLetter>& a_;
    const std::vector<YLetter>& b_;
    std::map<std::pair<size_t, size_t>, std::map<Word, Rational>> memo_;
};

} // namespace

YSeries harmonic_product(const YSeries& a, const YSeries& b)
{
    a.check_compatible(b);
    YSeries r(a.group_ptr(), a.cap());
    for (auto& [u, cu] : a.terms()) {
        auto ul = y_letters(u);
        for (auto& [v, cv] : b.terms()) {
            if (degree(u) + degree(v) > a.cap())
                continue;
            auto vl = y_letters(v);
            QuasiShuffle qs(a.group(), ul, vl);
            Rational c = cu * cv;
            for (auto& [w, k] : qs.run(0, 0))
                r.accumulate(w, c * k);
        }
    }
    r.prune();
    return r;
}

std::vector<Word> all_x_words(const Group& group, int cap)
{
    std::vector<Word> out{Word{}};
    size_t begin = 0;
    for (int d = 1; d <= cap; ++d) {
        size_t end = out.size();
        for (size_t i = begin; i < end; ++i) {
            for (int l = 0; l <= group.size(); ++l)
                out.push_back(out[i] + static_cast<char>(l));
        }
        begin = end;
    }
    return out;
}

std::vector<Word> all_y_words(const Group& group, int cap)
{
    std::vector<Word> out;
    for (auto& w : all_x_words(group, cap))
        if (is_y_word(w))
            out.push_back(w);
    return out;
}

} // namespace dsh
