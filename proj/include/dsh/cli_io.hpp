#pragma once

#include "crossed_product.hpp"
#include "format.hpp"
#include "graded_solver.hpp"
#include "group.hpp"
#include "series.hpp"
#include "uniseries.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dsh {

// Text form of a truncated series:
//
//   dsh-series 1
//   group Z3
//   cap 4
//   alphabet X
//   terms
//   -1/2 x0 x[1]
//   3 y2[2] y1          (Y documents)
//   1 x0 x[1] @[2]      (V documents: the group component after '@')
//
// '#' starts a comment; blank lines are ignored. Words use the notation of
// format_word, and "1" is the empty word.
struct SeriesDocument {
    int version = 1;
    GroupSpec group;
    int cap = 0;
    Alphabet alphabet = Alphabet::X;

    struct Term {
        std::string coefficient;
        std::string word;
        std::string component; // V documents only: the group label
        int line = 0;
        // 1-based columns of the three fields in the source line.
        int coefficient_column = 1;
        int word_column = 1;
        int component_column = 1;
    };
    std::vector<Term> terms;
};

constexpr int kSeriesDocumentVersion = 1;

// Syntax only; words and coefficients are checked by parse_series.
SeriesDocument parse_document(std::string_view text);
std::string emit_document(const SeriesDocument& doc);

using AnySeries = std::variant<XSeries, YSeries, ZSeries, VElem>;

// Errors carry the line and column of the offending token.
AnySeries parse_series(std::string_view text);
AnySeries series_from_document(const SeriesDocument& doc);

// Terms in canonical order: degree, then lexicographic word (then component).
std::string emit_series(const XSeries& s);
std::string emit_series(const YSeries& s);
std::string emit_series(const ZSeries& s);
std::string emit_series(const VElem& v);
std::string emit_series(const AnySeries& s);

// One-line forms for reports and counterexample dumps.
std::string show(const XSeries& s);
std::string show(const YSeries& s);
std::string show(const ZSeries& s);
std::string show(const VElem& v);
std::string show(const XTensor& t);
std::string show(const YTensor& t);
std::string show(const ZTensor& t);
std::string show(const UniSeries& s);

// Stable structured text for a kernel report:
//
//   dsh-kernel 1
//   group Z2
//   which stab_mod
//   degree 3
//   cap 5
//   dimension 1
//   basis [x0,[x0,x[1]]] [[x0,x[1]],x[1]] ...
//   vector 1 -1/2 ...
//
std::string format_kernel_report(const GradedKernelReport& report);

} // namespace dsh
