#include "dsh/cli_io.hpp"

#include "dsh/errors.hpp"
#include "dsh/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dsh {

namespace {

struct Line {
    std::string_view text; // comment stripped
    int number;
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.remove_suffix(1);
        out.push_back({line, number});
        if (end == text.size())
            break;
        start = end + 1;
    }
    return out;
}

bool blank(std::string_view s)
{
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

size_t skip_space(std::string_view s, size_t pos)
{
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
    return pos;
}

size_t token_end(std::string_view s, size_t pos)
{
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
    return pos;
}

int column(size_t pos) { return static_cast<int>(pos) + 1; }

int parse_int_field(std::string_view value, int line, size_t pos)
{
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })
        || value.size() > 6)
        throw ParseError("expected a non-negative integer, got '" + std::string(value) + "'", line, column(pos));
    return std::stoi(std::string(value));
}

template <class Tag>
std::string emit_terms(const Series<Tag>& s, Alphabet a)
{
    std::ostringstream out;
    for (auto& [w, c] : s.sorted_terms())
        out << to_string(c) << ' ' << format_word(s.group(), w, a) << '\n';
    return out.str();
}

std::string header(const GroupSpec& spec, int cap, Alphabet a)
{
    std::ostringstream out;
    out << "dsh-series " << kSeriesDocumentVersion << '\n'
        << "group " << spec.to_string() << '\n'
        << "cap " << cap << '\n'
        << "alphabet " << alphabet_tag(a) << '\n'
        << "terms\n";
    return out.str();
}

std::string component_label(const Group& group, int h) { return "[" + group.label(h) + "]"; }

template <class Tag>
std::string show_series(const Series<Tag>& s, Alphabet a)
{
    std::string out;
    for (auto& [w, c] : s.sorted_terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(c) + "*" + format_word(s.group(), w, a);
    }
    return out.empty() ? "0" : out;
}

template <class Tag>
std::string show_tensor(const Tensor<Tag>& t, Alphabet a)
{
    std::string out;
    for (auto& [lr, c] : t.sorted_terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(c) + "*(" + format_word(*t.group_ptr(), lr.first, a) + " (x) "
               + format_word(*t.group_ptr(), lr.second, a) + ")";
    }
    return out.empty() ? "0" : out;
}

} // namespace

SeriesDocument parse_document(std::string_view text)
{
    SeriesDocument doc;
    auto lines = split_lines(text);
    size_t i = 0;
    auto next_content = [&]() -> const Line* {
        while (i < lines.size() && blank(lines[i].text))
            ++i;
        return i < lines.size() ? &lines[i] : nullptr;
    };

    const Line* first = next_content();
    if (!first)
        throw ParseError("empty document", 1, 1);
    {
        std::string_view t = first->text;
        size_t p = skip_space(t, 0);
        size_t e = token_end(t, p);
        if (t.substr(p, e - p) != "dsh-series")
            throw ParseError("expected 'dsh-series <version>'", first->number, column(p));
        size_t vp = skip_space(t, e);
        doc.version = parse_int_field(t.substr(vp, token_end(t, vp) - vp), first->number, vp);
        if (doc.version != kSeriesDocumentVersion)
            throw ParseError("unsupported document version " + std::to_string(doc.version), first->number, column(vp));
        ++i;
    }

    bool have_group = false, have_cap = false, have_alphabet = false, in_terms = false;
    while (const Line* line = next_content()) {
        std::string_view t = line->text;
        ++i;
        if (!in_terms) {
            size_t p = skip_space(t, 0);
            size_t e = token_end(t, p);
            std::string_view key = t.substr(p, e - p);
            size_t vp = skip_space(t, e);
            std::string_view value = t.substr(vp);
            if (key == "terms") {
                if (!value.empty())
                    throw ParseError("unexpected text after 'terms'", line->number, column(vp));
                in_terms = true;
                continue;
            }
            if (key == "group") {
                try {
                    doc.group = GroupSpec::parse(value);
                } catch (const std::exception& ex) {
                    throw ParseError(ex.what(), line->number, column(vp));
                }
                have_group = true;
            } else if (key == "cap") {
                doc.cap = parse_int_field(value, line->number, vp);
                have_cap = true;
            } else if (key == "alphabet") {
                try {
                    doc.alphabet = parse_alphabet_tag(value);
                } catch (const DomainError& ex) {
                    throw ParseError(ex.what(), line->number, column(vp));
                }
                have_alphabet = true;
            } else {
                throw ParseError("unknown header field '" + std::string(key) + "'", line->number, column(p));
            }
            continue;
        }
        size_t p = skip_space(t, 0);
        size_t e = token_end(t, p);
        SeriesDocument::Term term;
        term.line = line->number;
        term.coefficient = std::string(t.substr(p, e - p));
        term.coefficient_column = column(p);
        size_t wp = skip_space(t, e);
        term.word_column = column(wp);
        if (wp >= t.size())
            throw ParseError("missing word after the coefficient", line->number, column(wp));
        std::string_view rest = t.substr(wp);
        if (auto at = rest.find('@'); at != std::string_view::npos) {
            term.component = std::string(rest.substr(at + 1));
            term.component_column = column(wp + at + 1);
            rest = rest.substr(0, at);
            while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
                rest.remove_suffix(1);
        }
        term.word = std::string(rest);
        doc.terms.push_back(std::move(term));
    }
    const int last = lines.empty() ? 1 : lines.back().number;
    if (!have_group)
        throw ParseError("missing 'group' field", last, 1);
    if (!have_cap)
        throw ParseError("missing 'cap' field", last, 1);
    if (!have_alphabet)
        throw ParseError("missing 'alphabet' field", last, 1);
    if (!in_terms)
        throw ParseError("missing 'terms' line", last, 1);
    return doc;
}

std::string emit_document(const SeriesDocument& doc)
{
    std::string out = header(doc.group, doc.cap, doc.alphabet);
    for (auto& t : doc.terms) {
        out += t.coefficient + ' ' + t.word;
        if (!t.component.empty())
            out += " @" + t.component;
        out += '\n';
    }
    return out;
}

AnySeries series_from_document(const SeriesDocument& doc)
{
    GroupPtr group = make_group(doc.group);
    XSeries xs(group, doc.cap);
    YSeries ys(group, doc.cap);
    ZSeries zs(group, doc.cap);
    VElem vs(group, doc.cap);

    for (auto& term : doc.terms) {
        const int coef_col = term.coefficient_column;
        Rational c;
        try {
            c = parse_rational(term.coefficient);
        } catch (const DomainError& ex) {
            throw ParseError(std::string("bad coefficient: ") + ex.what(), term.line, coef_col);
        }
        const int word_offset = term.word_column - 1;
        Alphabet parse_as = doc.alphabet == Alphabet::V ? Alphabet::X : doc.alphabet;
        Word w = parse_word(*group, term.word, parse_as, term.line, word_offset);
        if (degree(w) > doc.cap)
            throw ParseError("word of degree " + std::to_string(degree(w)) + " exceeds cap " + std::to_string(doc.cap),
                             term.line, word_offset + 1);
        switch (doc.alphabet) {
        case Alphabet::X:
            if (!term.component.empty())
                throw ParseError("'@' component is only allowed in V documents", term.line, word_offset + 1);
            xs.add_term(w, c);
            break;
        case Alphabet::Y:
        case Alphabet::Z:
            if (!term.component.empty())
                throw ParseError("'@' component is only allowed in V documents", term.line, word_offset + 1);
            if (doc.alphabet == Alphabet::Y)
                ys.add_term(w, c);
            else
                zs.add_term(w, c);
            break;
        case Alphabet::V: {
            if (term.component.empty())
                throw ParseError("V terms need a group component '@[r]'", term.line,
                                 word_offset + static_cast<int>(term.word.size()) + 2);
            const int comp_offset = term.component_column - 1;
            if (term.component.front() != '[')
                throw ParseError("group component must look like [r]", term.line, comp_offset + 1);
            Word letter = parse_word(*group, "x" + term.component, Alphabet::X, term.line, comp_offset - 1);
            if (letter.size() != 1 || is_x0(letter[0]))
                throw ParseError("malformed group component", term.line, comp_offset + 1);
            vs.add_term(w, letter_group(letter[0]), c);
            break;
        }
        }
    }
    switch (doc.alphabet) {
    case Alphabet::X:
        return xs;
    case Alphabet::Y:
        return ys;
    case Alphabet::Z:
        return zs;
    case Alphabet::V:
        return vs;
    }
    throw InternalError("unreachable alphabet");
}

AnySeries parse_series(std::string_view text) { return series_from_document(parse_document(text)); }

std::string emit_series(const XSeries& s)
{
    return header(s.group().spec(), s.cap(), Alphabet::X) + emit_terms(s, Alphabet::X);
}

std::string emit_series(const YSeries& s)
{
    return header(s.group().spec(), s.cap(), Alphabet::Y) + emit_terms(s, Alphabet::Y);
}

std::string emit_series(const ZSeries& s)
{
    return header(s.group().spec(), s.cap(), Alphabet::Z) + emit_terms(s, Alphabet::Z);
}

std::string emit_series(const VElem& v)
{
    std::vector<std::tuple<Word, int, Rational>> terms = v.sorted_terms();
    std::stable_sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
        const Word& wa = std::get<0>(a);
        const Word& wb = std::get<0>(b);
        if (wa != wb)
            return word_less(wa, wb);
        return std::get<1>(a) < std::get<1>(b);
    });
    std::string out = header(v.group().spec(), v.cap(), Alphabet::V);
    for (auto& [w, h, c] : terms)
        out += to_string(c) + ' ' + format_word(v.group(), w, Alphabet::X) + " @" + component_label(v.group(), h) + '\n';
    return out;
}

std::string emit_series(const AnySeries& s)
{
    return std::visit([](const auto& x) { return emit_series(x); }, s);
}

std::string show(const XSeries& s) { return show_series(s, Alphabet::X); }
std::string show(const YSeries& s) { return show_series(s, Alphabet::Y); }
std::string show(const ZSeries& s) { return show_series(s, Alphabet::Z); }
std::string show(const XTensor& t) { return show_tensor(t, Alphabet::X); }
std::string show(const YTensor& t) { return show_tensor(t, Alphabet::Y); }
std::string show(const ZTensor& t) { return show_tensor(t, Alphabet::Z); }

std::string show(const VElem& v)
{
    std::string out;
    for (auto& [w, h, c] : v.sorted_terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(c) + "*" + format_word(v.group(), w, Alphabet::X) + "@" + component_label(v.group(), h);
    }
    return out.empty() ? "0" : out;
}

std::string show(const UniSeries& s)
{
    std::string out;
    for (int n = 0; n <= s.cap(); ++n) {
        if (s[n] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += to_string(s[n]) + (n == 0 ? "" : "*x^" + std::to_string(n));
    }
    return out.empty() ? "0" : out;
}

std::string format_kernel_report(const GradedKernelReport& report)
{
    std::ostringstream out;
    out << "dsh-kernel 1\n"
        << "group " << report.group.to_string() << '\n'
        << "which " << condition_name(report.which) << '\n'
        << "degree " << report.degree << '\n'
        << "cap " << report.cap << '\n'
        << "dimension " << report.dimension << '\n'
        << "basis";
    for (auto& label : report.basis_labels)
        out << ' ' << label;
    out << '\n';
    for (auto& v : report.basis) {
        out << "vector";
        for (auto& c : v)
            out << ' ' << to_string(c);
        out << '\n';
    }
    return out.str();
}

} // namespace dsh
