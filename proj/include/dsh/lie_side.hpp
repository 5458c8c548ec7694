#pragma once

#include "crossed_product.hpp"
#include "morphism.hpp"
#include "racinet_group.hpp"
#include "series.hpp"
#include "uniseries.hpp"

#include <cstdint>
#include <memory>

namespace dsh {

// Lie elements are primitive XSeries; operations that need primitivity
// check it and throw DomainError.
void require_primitive(const XSeries& psi, const char* where);

// d_psi: derivation with x0 -> 0, x_g -> [x_g, t_g(psi)].
class DPsi {
public:
    explicit DPsi(const XSeries& psi);

    const XSeries& psi() const { return psi_; }
    const XSeries& of_word(const Word& w) { return derivation_->of_word(w); }
    XSeries operator()(const XSeries& a) { return (*derivation_)(a); }
    // s_psi = l_psi + d_psi
    XSeries s(const XSeries& a) { return psi_ * a + (*this)(a); }

private:
    XSeries psi_;
    std::unique_ptr<Derivation<XTag>> derivation_;
};

XSeries d_psi(const XSeries& psi, const XSeries& a);
XSeries s_psi(const XSeries& psi, const XSeries& a);
// <a, b> = s_a(b) - s_b(a)
XSeries lie_bracket(const XSeries& a, const XSeries& b);

// gamma_psi(x) = sum_{n>=1} (-1)^{n+1}/n (psi|x0^{n-1}x1) x^n
UniSeries gamma_lower(const XSeries& psi);
// gamma_psi with the terms of degree >= 2 negated: the first-order part of
// the group-side twist Gamma(x1), plus the degree 1 term. This is the series
// written gamma below.
UniSeries gamma_twist_lower(const XSeries& psi);
// theta(psi) = -gamma(x1) + psi - (psi|x0) x0
XSeries theta_lie(const XSeries& psi);
// psi_* = q_Y pi_Y(-gamma(x1) + psi)
YSeries psi_star_lie(const XSeries& psi);

// s^Y_psi on Y-representatives, optionally with the twist l_{-gamma(x1)}.
class SYLieOperator {
public:
    SYLieOperator(const XSeries& psi, bool gamma_twist);
    SYLieOperator(const SYLieOperator&) = delete;
    SYLieOperator& operator=(const SYLieOperator&) = delete;

    const YSeries& of_word(const Word& w) { return map_->of_word(w); }
    YSeries operator()(const YSeries& m) { return (*map_)(m); }

private:
    DPsi d_;
    YSeries twist_;
    std::unique_ptr<LinearMap<YTag>> map_;
};

YSeries s_Y_psi(const XSeries& psi, const YSeries& m);
YSeries gamma_s_Y_lie(const XSeries& psi, const YSeries& m);

Verdict dmr0_lie_membership(const XSeries& psi);
Verdict stab_mod_lie_membership(const XSeries& psi);

// exp_circledast(psi) = sum_k s_psi^k(1)/k!; log_circledast inverts it
// degree by degree.
XSeries exp_circledast(const XSeries& psi);
XSeries log_circledast(const XSeries& a);
XSeries cbh(const XSeries& psi, const XSeries& phi);

// Lie algebra actions on V_G, W_G, M_G and k<<Y>>.
class CrossedLieActions {
public:
    explicit CrossedLieActions(const XSeries& psi);
    CrossedLieActions(const CrossedLieActions&) = delete;
    CrossedLieActions& operator=(const CrossedLieActions&) = delete;

    const XSeries& psi() const { return d_.psi(); }

    // d_psi (x) id
    VElem der_V0(const VElem& a);
    // ad_{psi (x) 1} + der_V0
    VElem der_V1(const VElem& a);
    // l_{psi (x) 1} + der_V0
    VElem end_V10(const VElem& a);
    // ad_{-gamma(-e1)} + der_V1
    VElem gamma_der_V1(const VElem& a);

    const ZSeries& der_W1_of_word(const Word& w) { return der_W1_->of_word(w); }
    ZSeries der_W1(const ZSeries& w) { return (*der_W1_)(w); }
    const ZSeries& gamma_der_W1_of_word(const Word& w) { return gamma_der_W1_->of_word(w); }
    ZSeries gamma_der_W1(const ZSeries& w) { return (*gamma_der_W1_)(w); }
    const ZSeries& end_M10_of_word(const Word& w) { return end_M10_->of_word(w); }
    ZSeries end_M10(const ZSeries& m) { return (*end_M10_)(m); }
    const ZSeries& gamma_end_M10_of_word(const Word& w) { return gamma_end_M10_->of_word(w); }
    ZSeries gamma_end_M10(const ZSeries& m) { return (*gamma_end_M10_)(m); }

    // gamma(-e1) in the z-letters.
    const ZSeries& gamma_z11() const { return gamma_; }

private:
    DPsi d_;
    VElem psi_v_;
    ZSeries gamma_;
    VElem gamma_v_;
    std::unique_ptr<Derivation<ZTag>> der_W1_;
    std::unique_ptr<Derivation<ZTag>> gamma_der_W1_;
    std::unique_ptr<LinearMap<ZTag>> end_M10_;
    std::unique_ptr<LinearMap<ZTag>> gamma_end_M10_;
};

VElem der_V0(const XSeries& psi, const VElem& a);
VElem der_V1(const XSeries& psi, const VElem& a);
VElem end_V10(const XSeries& psi, const VElem& a);
VElem gamma_der_V1(const XSeries& psi, const VElem& a);
ZSeries der_W1(const XSeries& psi, const ZSeries& w);
ZSeries gamma_der_W1(const XSeries& psi, const ZSeries& w);
ZSeries end_M10(const XSeries& psi, const ZSeries& m);
ZSeries gamma_end_M10(const XSeries& psi, const ZSeries& m);

// The Y-side derivation; Explicit uses
//   y_{n,g} -> q_Y((psi x0^{n-1} - x0^{n-1} t_g(psi)) x_g)
//            + q_Y((x0^{n-1} gamma(x_g) - gamma(x1) x0^{n-1}) x_g).
class GammaDY {
public:
    GammaDY(const XSeries& psi, AutYRoute route);
    GammaDY(const GammaDY&) = delete;
    GammaDY& operator=(const GammaDY&) = delete;

    const YSeries& of_word(const Word& w) { return derivation_->of_word(w); }
    YSeries operator()(const YSeries& y) { return (*derivation_)(y); }

private:
    std::unique_ptr<CrossedLieActions> actions_;
    std::unique_ptr<Derivation<YTag>> derivation_;
};

YSeries gamma_d_Y(const XSeries& psi, const YSeries& y, AutYRoute route = AutYRoute::ThroughW);

// stab of the harmonic coproduct on k<<Y>> through gamma_d_Y, checked on
// generators y_{n,g}.
Verdict stab_alg_lie_membership(const XSeries& psi);
// Generators z_{n,g}, then audit_words random z-words drawn with the seed.
Verdict stab_W_lie_membership(const XSeries& psi, int audit_words = 8, std::uint64_t seed = 1);
Verdict stab_M_lie_membership(const XSeries& psi);

} // namespace dsh
