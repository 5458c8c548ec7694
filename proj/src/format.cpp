#include "dsh/format.hpp"

#include "dsh/word_algebras.hpp"

#include <cctype>

namespace dsh {

namespace {

std::string group_suffix(const Group& group, int g)
{
    return g == 0 ? std::string() : "[" + group.label(g) + "]";
}

} // namespace

std::string format_word(const Group& group, const Word& w, Alphabet alphabet)
{
    if (w.empty())
        return "1";
    std::string out;
    auto sep = [&] {
        if (!out.empty())
            out += ' ';
    };
    if (alphabet == Alphabet::X || alphabet == Alphabet::V || !is_y_word(w)) {
        for (char c : w) {
            sep();
            if (is_x0(c))
                out += "x0";
            else if (letter_group(c) == 0)
                out += "x1";
            else
                out += "x" + group_suffix(group, letter_group(c));
        }
        return out;
    }
    const char prefix = alphabet == Alphabet::Y ? 'y' : 'z';
    for (auto& y : y_letters(w)) {
        sep();
        out += prefix + std::to_string(y.n) + group_suffix(group, y.g);
    }
    return out;
}

std::string format_tensor_key(const Group& group, const std::string& key, Alphabet alphabet)
{
    auto [l, r] = Tensor<XTag>::split(key);
    return format_word(group, l, alphabet) + " (x) " + format_word(group, r, alphabet);
}

} // namespace dsh

namespace dsh {

namespace {

class WordParser {
public:
    WordParser(const Group& group, std::string_view text, Alphabet alphabet, int line, int column_offset)
        : group_(group), text_(text), alphabet_(alphabet), line_(line), offset_(column_offset)
    {
    }

    Word run()
    {
        Word w;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '1') {
            size_t save = pos_;
            ++pos_;
            skip_space();
            if (pos_ == text_.size())
                return w;
            pos_ = save;
        }
        bool any = false;
        bool saw_x_letters = false;
        while (true) {
            skip_space();
            if (pos_ == text_.size())
                break;
            any = true;
            char head = text_[pos_];
            if (head == 'x') {
                if (alphabet_ == Alphabet::Z)
                    fail("x-letter in a Z-document");
                saw_x_letters = true;
                ++pos_;
                if (peek() == '0') {
                    ++pos_;
                    w += kX0;
                } else if (peek() == '1') {
                    ++pos_;
                    w += x_letter(0);
                } else if (peek() == '[') {
                    w += x_letter(group_index());
                } else {
                    fail("expected x0, x1 or x[...]");
                }
            } else if ((head == 'y' && alphabet_ == Alphabet::Y) || (head == 'z' && alphabet_ == Alphabet::Z)) {
                ++pos_;
                size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (start == pos_)
                    fail("expected a degree after the letter");
                int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
                if (n < 1)
                    fail("y-letter degree must be >= 1");
                int g = peek() == '[' ? group_index() : 0;
                w += y_letter_word(n, g);
            } else {
                fail(std::string("unexpected character '") + head + "'");
            }
            if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
                fail("letters must be separated by spaces");
        }
        if (!any)
            fail("empty word (write 1 for the unit)");
        if ((alphabet_ == Alphabet::Y || alphabet_ == Alphabet::Z) && saw_x_letters && !is_y_word(w))
            fail("word ends in x0, which is not allowed in a Y-document");
        return w;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what, line_, offset_ + static_cast<int>(pos_) + 1);
    }

    int group_index()
    {
        ++pos_; // '['
        std::vector<int> residues;
        while (true) {
            size_t start = pos_;
            if (peek() == ']' && residues.empty() && group_.spec().orders().empty()) {
                ++pos_;
                return 0;
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected a residue");
            residues.push_back(std::stoi(std::string(text_.substr(start, pos_ - start))));
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                break;
            }
            fail("expected ',' or ']'");
        }
        const auto& orders = group_.spec().orders();
        if (residues.size() != orders.size())
            fail("group element needs " + std::to_string(orders.size()) + " residues");
        for (size_t i = 0; i < residues.size(); ++i)
            if (residues[i] >= orders[i])
                fail("residue out of range");
        return group_.index_of(GroupElement{group_.spec(), residues});
    }

    const Group& group_;
    std::string_view text_;
    Alphabet alphabet_;
    int line_;
    int offset_;
    size_t pos_ = 0;
};

} // namespace

Word parse_word(const Group& group, std::string_view text, Alphabet alphabet, int line, int column_offset)
{
    return WordParser(group, text, alphabet, line, column_offset).run();
}

char alphabet_tag(Alphabet a)
{
    switch (a) {
    case Alphabet::X:
        return 'X';
    case Alphabet::Y:
        return 'Y';
    case Alphabet::Z:
        return 'Z';
    case Alphabet::V:
        return 'V';
    }
    return '?';
}

Alphabet parse_alphabet_tag(std::string_view tag)
{
    if (tag == "X")
        return Alphabet::X;
    if (tag == "Y")
        return Alphabet::Y;
    if (tag == "Z")
        return Alphabet::Z;
    if (tag == "V")
        return Alphabet::V;
    throw DomainError("unknown alphabet tag '" + std::string(tag) + "'");
}

} // namespace dsh
