#pragma once

#include "errors.hpp"
#include "group.hpp"
#include "rational.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dsh {

// A word is a byte string of letter codes: 0 is x0, 1 + i is x_g for the
// group element of index i. Y-words (and z-words) use the same encoding
// through y_{n,g} = x0^{n-1} x_g, so every Y-word is an X-word that is empty
// or ends in a letter other than x0, and its Y-degree is its length.
using Word = std::string;

inline constexpr char kX0 = 0;
inline char x_letter(int g) { return static_cast<char>(1 + g); }
inline int letter_group(char c) { return static_cast<unsigned char>(c) - 1; }
inline bool is_x0(char c) { return c == kX0; }
inline int degree(const Word& w) { return static_cast<int>(w.size()); }

inline bool is_y_word(const Word& w) { return w.empty() || !is_x0(w.back()); }

// Canonical order: by degree, then lexicographically on letter codes.
inline bool word_less(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

struct XTag {
    static constexpr const char* name = "X";
};
struct YTag {
    static constexpr const char* name = "Y";
};
struct ZTag {
    static constexpr const char* name = "Z";
};

namespace detail {

inline void check_same(const GroupPtr& a, const GroupPtr& b, int cap_a, int cap_b)
{
    if (cap_a != cap_b)
        throw StructuralError("cap mismatch: " + std::to_string(cap_a) + " vs " + std::to_string(cap_b));
    if (a != b && !(a->spec() == b->spec()))
        throw StructuralError("group mismatch: " + a->spec().to_string() + " vs " + b->spec().to_string());
}

template <class Map>
void prune(Map& m)
{
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else
            ++it;
    }
}

} // namespace detail

// Truncated noncommutative series over Q. Words longer than cap are dropped
// on insertion; zero coefficients are never stored.
template <class Tag>
class Series {
public:
    using Terms = std::unordered_map<Word, Rational>;

    Series(GroupPtr group, int cap) : group_(std::move(group)), cap_(cap)
    {
        if (cap < 0)
            throw StructuralError("negative cap");
    }

    static Series one(GroupPtr group, int cap) { return monomial(std::move(group), cap, Word{}); }
    static Series monomial(GroupPtr group, int cap, const Word& w, const Rational& c = 1)
    {
        Series s(std::move(group), cap);
        s.add_term(w, c);
        return s;
    }

    const Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    int cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant() const { return coeff(Word{}); }

    void add_term(const Word& w, const Rational& c)
    {
        if (degree(w) > cap_ || c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    // Adds without removing zeros; call prune() afterwards.
    void accumulate(const Word& w, const Rational& c)
    {
        if (degree(w) <= cap_)
            terms_[w] += c;
    }
    void prune() { detail::prune(terms_); }

    void check_compatible(const Series& o) const { detail::check_same(group_, o.group_, cap_, o.cap_); }

    Series& operator+=(const Series& o)
    {
        check_compatible(o);
        for (auto& [w, c] : o.terms_)
            add_term(w, c);
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        check_compatible(o);
        for (auto& [w, c] : o.terms_)
            add_term(w, -c);
        return *this;
    }
    Series& operator*=(const Rational& s)
    {
        if (s == 0)
            terms_.clear();
        else
            for (auto& [w, c] : terms_)
                c *= s;
        return *this;
    }
    Series operator-() const
    {
        Series r(*this);
        for (auto& [w, c] : r.terms_)
            c = -c;
        return r;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    friend Series operator*(const Rational& s, Series a) { return a *= s; }

    friend Series operator*(const Series& a, const Series& b)
    {
        a.check_compatible(b);
        Series r(a.group_, a.cap_);
        auto buckets = b.by_degree();
        Rational t;
        Word w;
        for (auto& [wa, ca] : a.terms_) {
            int room = a.cap_ - degree(wa);
            for (int d = 0; d <= room && d < static_cast<int>(buckets.size()); ++d) {
                for (auto* p : buckets[d]) {
                    mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), p->second.get_mpq_t());
                    w.assign(wa);
                    w += p->first;
                    r.terms_[w] += t;
                }
            }
        }
        r.prune();
        return r;
    }

    bool operator==(const Series& o) const
    {
        return cap_ == o.cap_ && group_->spec() == o.group_->spec() && terms_ == o.terms_;
    }

    // Terms bucketed by word degree.
    std::vector<std::vector<const typename Terms::value_type*>> by_degree() const
    {
        std::vector<std::vector<const typename Terms::value_type*>> out(cap_ + 1);
        for (auto& kv : terms_)
            out[degree(kv.first)].push_back(&kv);
        return out;
    }

    std::vector<std::pair<Word, Rational>> sorted_terms() const
    {
        std::vector<std::pair<Word, Rational>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return word_less(a.first, b.first); });
        return v;
    }

    int min_degree() const
    {
        int m = cap_ + 1;
        for (auto& [w, c] : terms_)
            m = std::min(m, degree(w));
        return m;
    }

    Series homogeneous(int d) const
    {
        Series r(group_, cap_);
        for (auto& [w, c] : terms_)
            if (degree(w) == d)
                r.terms_.emplace(w, c);
        return r;
    }

    // Same terms viewed at another cap; lowering the cap discards terms.
    Series with_cap(int new_cap) const
    {
        Series r(group_, new_cap);
        for (auto& [w, c] : terms_)
            r.add_term(w, c);
        return r;
    }

private:
    GroupPtr group_;
    int cap_;
    Terms terms_;
};

using XSeries = Series<XTag>;
using YSeries = Series<YTag>;
// Elements of W_G and M_G in the z_{n,g} letters.
using ZSeries = Series<ZTag>;

// Reinterprets the stored words under another tag; no rewriting happens.
template <class To, class From>
Series<To> retag(const Series<From>& s)
{
    Series<To> r(s.group_ptr(), s.cap());
    for (auto& [w, c] : s.terms())
        r.add_term(w, c);
    return r;
}

template <class Tag>
Series<Tag> series_exp(const Series<Tag>& a)
{
    if (a.constant() != 0)
        throw DomainError("series_exp: constant term must be 0");
    Series<Tag> result = Series<Tag>::one(a.group_ptr(), a.cap());
    Series<Tag> power = result;
    for (int k = 1; k <= a.cap(); ++k) {
        power = power * a;
        power *= Rational(1, k);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

template <class Tag>
Series<Tag> series_log(const Series<Tag>& a)
{
    if (a.constant() != 1)
        throw DomainError("series_log: constant term must be 1");
    Series<Tag> u = a - Series<Tag>::one(a.group_ptr(), a.cap());
    Series<Tag> result(a.group_ptr(), a.cap());
    Series<Tag> power = Series<Tag>::one(a.group_ptr(), a.cap());
    for (int k = 1; k <= a.cap(); ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        result += power * Rational(k % 2 ? 1 : -1, k);
    }
    return result;
}

template <class Tag>
Series<Tag> series_inverse(const Series<Tag>& a)
{
    Rational c = a.constant();
    if (c == 0)
        throw DomainError("series_inverse: constant term must be nonzero");
    Rational ci = 1 / c;
    Series<Tag> one = Series<Tag>::one(a.group_ptr(), a.cap());
    Series<Tag> u = one - a * ci;
    Series<Tag> result = one;
    Series<Tag> power = one;
    for (int k = 1; k <= a.cap(); ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        result += power;
    }
    return result * ci;
}

template <class Tag>
Series<Tag> commutator(const Series<Tag>& a, const Series<Tag>& b)
{
    return a * b - b * a;
}

// Element of a completed tensor square, truncated in total degree.
template <class Tag>
class Tensor {
public:
    static constexpr char kSep = static_cast<char>(0xFF);
    using Terms = std::unordered_map<std::string, Rational>;

    Tensor(GroupPtr group, int cap) : group_(std::move(group)), cap_(cap) {}

    static std::string key(const Word& l, const Word& r)
    {
        std::string k;
        k.reserve(l.size() + r.size() + 1);
        k += l;
        k += kSep;
        k += r;
        return k;
    }
    static std::pair<Word, Word> split(const std::string& key)
    {
        auto p = key.find(kSep);
        return {key.substr(0, p), key.substr(p + 1)};
    }

    const GroupPtr& group_ptr() const { return group_; }
    int cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coeff(const Word& l, const Word& r) const
    {
        auto it = terms_.find(key(l, r));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Word& l, const Word& r, const Rational& c)
    {
        if (degree(l) + degree(r) > cap_ || c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key(l, r), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    void accumulate_key(const std::string& k, const Rational& c)
    {
        if (static_cast<int>(k.size()) - 1 <= cap_)
            terms_[k] += c;
    }
    void prune() { detail::prune(terms_); }

    void check_compatible(const Tensor& o) const { detail::check_same(group_, o.group_, cap_, o.cap_); }

    Tensor& operator+=(const Tensor& o)
    {
        check_compatible(o);
        for (auto& [k, c] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    terms_.erase(it);
            }
        }
        return *this;
    }
    Tensor& operator-=(const Tensor& o)
    {
        Tensor n(o);
        n *= Rational(-1);
        return *this += n;
    }
    Tensor& operator*=(const Rational& s)
    {
        if (s == 0)
            terms_.clear();
        else
            for (auto& [k, c] : terms_)
                c *= s;
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

    // Componentwise concatenation (a (x) b)(c (x) d) = ac (x) bd.
    friend Tensor operator*(const Tensor& a, const Tensor& b)
    {
        a.check_compatible(b);
        Tensor r(a.group_, a.cap_);
        std::vector<std::pair<std::pair<Word, Word>, const Rational*>> bs;
        bs.reserve(b.terms_.size());
        for (auto& [k, c] : b.terms_)
            bs.push_back({split(k), &c});
        Rational t;
        for (auto& [ka, ca] : a.terms_) {
            auto [la, ra] = split(ka);
            int room = a.cap_ - degree(la) - degree(ra);
            for (auto& [lr, cb] : bs) {
                if (degree(lr.first) + degree(lr.second) > room)
                    continue;
                mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb->get_mpq_t());
                r.terms_[key(la + lr.first, ra + lr.second)] += t;
            }
        }
        r.prune();
        return r;
    }

    bool operator==(const Tensor& o) const
    {
        return cap_ == o.cap_ && group_->spec() == o.group_->spec() && terms_ == o.terms_;
    }

    std::vector<std::pair<std::pair<Word, Word>, Rational>> sorted_terms() const
    {
        std::vector<std::pair<std::pair<Word, Word>, Rational>> v;
        for (auto& [k, c] : terms_)
            v.push_back({split(k), c});
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
            int da = degree(a.first.first) + degree(a.first.second);
            int db = degree(b.first.first) + degree(b.first.second);
            if (da != db)
                return da < db;
            if (a.first.first != b.first.first)
                return word_less(a.first.first, b.first.first);
            return word_less(a.first.second, b.first.second);
        });
        return v;
    }

private:
    GroupPtr group_;
    int cap_;
    Terms terms_;
};

using XTensor = Tensor<XTag>;
using YTensor = Tensor<YTag>;
using ZTensor = Tensor<ZTag>;

template <class Tag>
Tensor<Tag> tensor_product(const Series<Tag>& a, const Series<Tag>& b)
{
    a.check_compatible(b);
    Tensor<Tag> t(a.group_ptr(), a.cap());
    auto buckets = b.by_degree();
    Rational c;
    for (auto& [wa, ca] : a.terms()) {
        int room = a.cap() - degree(wa);
        for (int d = 0; d <= room; ++d)
            for (auto* p : buckets[d]) {
                mpq_mul(c.get_mpq_t(), ca.get_mpq_t(), p->second.get_mpq_t());
                t.accumulate_key(Tensor<Tag>::key(wa, p->first), c);
            }
    }
    t.prune();
    return t;
}

// Applies f (x) g, where f and g return the image of a single word.
template <class Tag, class F, class G>
Tensor<Tag> tensor_map(const Tensor<Tag>& t, F&& f, G&& g)
{
    Tensor<Tag> out(t.group_ptr(), t.cap());
    for (auto& [k, c] : t.terms()) {
        auto [l, r] = Tensor<Tag>::split(k);
        Tensor<Tag> piece = tensor_product(f(l), g(r));
        piece *= c;
        out += piece;
    }
    return out;
}

template <class Tag>
Tensor<Tag> unit_tensor(const Series<Tag>& a, bool left)
{
    Tensor<Tag> t(a.group_ptr(), a.cap());
    for (auto& [w, c] : a.terms())
        if (left)
            t.add_term(w, Word{}, c);
        else
            t.add_term(Word{}, w, c);
    return t;
}

} // namespace dsh
