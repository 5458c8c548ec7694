#pragma once

#include "morphism.hpp"
#include "series.hpp"
#include "uniseries.hpp"
#include "word_algebras.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dsh {

// Outcome of a membership test. Conditions are listed in the order they were
// checked; a failing condition carries a witness naming the first offending
// basis element.
struct ConditionResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct Verdict {
    bool member = true;
    std::vector<ConditionResult> conditions;

    void add(ConditionResult c)
    {
        member = member && c.pass;
        conditions.push_back(std::move(c));
    }
    // Witness of the first failing condition, empty for members.
    std::string first_failure() const;
};

// aut_Psi: x0 -> x0, x_g -> t_g(Psi^{-1}) x_g t_g(Psi), for invertible Psi.
class AutPsi {
public:
    explicit AutPsi(const XSeries& psi);

    const XSeries& psi() const { return psi_; }
    const XSeries& psi_inverse() const { return psi_inv_; }
    const XSeries& of_word(const Word& w) { return morphism_->of_word(w); }
    XSeries operator()(const XSeries& a) { return (*morphism_)(a); }

private:
    XSeries psi_;
    XSeries psi_inv_;
    std::unique_ptr<AlgebraMorphism<XTag>> morphism_;
};

XSeries aut_psi(const XSeries& psi, const XSeries& a);
// S_Psi = l_Psi o aut_Psi
XSeries s_big(const XSeries& psi, const XSeries& a);
XSeries circledast(const XSeries& psi, const XSeries& phi);
XSeries circledast_inverse(const XSeries& psi);

// Gamma_Psi(x) = exp(sum_{n>=2} (-1)^{n-1}/n (Psi|x0^{n-1}x1) x^n)
//
// Every twist below multiplies by Gamma_Psi(x1) on the left (and by
// Gamma_Psi^{-1} on the right where a conjugation is involved). The opposite
// choice, Gamma_Psi^{-1}(x1) on the left, makes the degree 3 part of dmr0 for
// the trivial group vanish; see README.md, "Sign of the Gamma correction".
UniSeries gamma_of(const XSeries& psi);
// Gamma_Psi(x1) Psi exp(-(Psi|x0) x0)
XSeries theta_of(const XSeries& psi);
// q_Y pi_Y(Gamma_Psi(x1) Psi)
YSeries psi_star(const XSeries& psi);

// S^Y_Psi on the quotient, and its Gamma twist l_{Gamma(x1)} o S^Y_Psi,
// as memoized linear maps on Y-words.
class SYOperator {
public:
    SYOperator(const XSeries& psi, bool gamma_twist);
    SYOperator(const SYOperator&) = delete;
    SYOperator& operator=(const SYOperator&) = delete;

    const YSeries& of_word(const Word& w) { return map_->of_word(w); }
    YSeries operator()(const YSeries& m) { return (*map_)(m); }

private:
    AutPsi aut_;
    YSeries left_factor_;
    std::unique_ptr<LinearMap<YTag>> map_;
};

YSeries s_Y(const XSeries& psi, const YSeries& m);
YSeries gamma_s_Y(const XSeries& psi, const YSeries& m);

Verdict dmr0_membership(const XSeries& psi);
Verdict stab_mod_membership(const XSeries& psi);

// Smallest key (in canonical order) whose coefficients differ, with both values.
template <class Tag>
std::optional<std::pair<std::string, std::pair<Rational, Rational>>> first_difference(const Tensor<Tag>& a,
                                                                                      const Tensor<Tag>& b)
{
    Tensor<Tag> d = a - b;
    if (d.is_zero())
        return std::nullopt;
    auto terms = d.sorted_terms();
    auto& [lr, c] = terms.front();
    return std::make_pair(Tensor<Tag>::key(lr.first, lr.second),
                          std::make_pair(a.coeff(lr.first, lr.second), b.coeff(lr.first, lr.second)));
}

// Shared checks used by the membership tests.
void require_grouplike(const XSeries& psi, const char* where);
std::string coefficient_witness(const std::string& name, const std::string& word, const Rational& value);

} // namespace dsh
