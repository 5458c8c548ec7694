#pragma once

#include "dsh/format.hpp"
#include "dsh/group.hpp"
#include "dsh/random.hpp"
#include "dsh/series.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <utility>

namespace dsh::test {

inline GroupPtr grp(const char* spec) { return make_group(GroupSpec::parse(spec)); }

using TermList = std::initializer_list<std::pair<const char*, const char*>>;

template <class Tag>
Series<Tag> make_series(const GroupPtr& g, int cap, TermList terms, Alphabet a)
{
    Series<Tag> s(g, cap);
    for (auto& [coef, word] : terms)
        s.add_term(parse_word(*g, word, a), parse_rational(coef));
    return s;
}

// Terms are (coefficient, word) pairs in the document notation.
inline XSeries X(const GroupPtr& g, int cap, TermList terms) { return make_series<XTag>(g, cap, terms, Alphabet::X); }
inline YSeries Y(const GroupPtr& g, int cap, TermList terms) { return make_series<YTag>(g, cap, terms, Alphabet::Y); }
inline ZSeries Z(const GroupPtr& g, int cap, TermList terms) { return make_series<ZTag>(g, cap, terms, Alphabet::Z); }

inline Word w(const GroupPtr& g, const char* text, Alphabet a = Alphabet::X) { return parse_word(*g, text, a); }

template <class Tag>
std::string show(const Series<Tag>& s, Alphabet a)
{
    std::string out;
    for (auto& [word, c] : s.sorted_terms())
        out += (out.empty() ? "" : " + ") + to_string(c) + "*" + format_word(s.group(), word, a);
    return out.empty() ? "0" : out;
}

inline const char* kGroups[] = {"trivial", "Z2", "Z3"};

} // namespace dsh::test
