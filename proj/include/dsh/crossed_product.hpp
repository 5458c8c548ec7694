#pragma once

#include "morphism.hpp"
#include "racinet_group.hpp"
#include "series.hpp"
#include "word_algebras.hpp"

#include <map>
#include <memory>
#include <vector>

namespace dsh {

// Element of the crossed product k<<X>> # kG, stored as sum_h a_h (x) h with
// one XSeries per group element. Multiplication:
//   (a (x) g)(b (x) h) = a t_g(b) (x) gh.
// e0 = x0 (x) 1, e1 = -x1 (x) 1 and g = 1 (x) g generate it.
class VElem {
public:
    VElem(GroupPtr group, int cap);
    static VElem one(GroupPtr group, int cap);

    const Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    int cap() const { return cap_; }

    // Component a_h.
    const XSeries& part(int h) const { return parts_[h]; }
    XSeries& part(int h) { return parts_[h]; }
    Rational coeff(const Word& w, int h) const { return parts_[h].coeff(w); }
    void add_term(const Word& w, int h, const Rational& c) { parts_[h].add_term(w, c); }
    bool is_zero() const;
    size_t size() const;
    // (word, h, coefficient) in canonical order (by h, then word).
    std::vector<std::tuple<Word, int, Rational>> sorted_terms() const;

    void check_compatible(const VElem& o) const;
    VElem& operator+=(const VElem& o);
    VElem& operator-=(const VElem& o);
    VElem& operator*=(const Rational& s);
    friend VElem operator+(VElem a, const VElem& b) { return a += b; }
    friend VElem operator-(VElem a, const VElem& b) { return a -= b; }
    friend VElem operator*(VElem a, const Rational& s) { return a *= s; }
    friend VElem operator*(const VElem& a, const VElem& b);
    bool operator==(const VElem& o) const;

private:
    GroupPtr group_;
    int cap_;
    std::vector<XSeries> parts_;
};

inline VElem v_mul(const VElem& a, const VElem& b) { return a * b; }
// a (x) 1
VElem v_from_x(const XSeries& a);
// 1 (x) g
VElem v_grp(const GroupPtr& group, int cap, int g);
VElem v_e0(const GroupPtr& group, int cap);
VElem v_e1(const GroupPtr& group, int cap);

// Index of the basis element e0^{n1-1} g1 e1 ... e0^{nr-1} gr e1 e0^{n_{r+1}-1} g_{r+1};
// n and g both have r + 1 entries.
struct BasisIndex {
    std::vector<int> n;
    std::vector<int> g;

    int r() const { return static_cast<int>(n.size()) - 1; }
    auto operator<=>(const BasisIndex&) const = default;
};

using CanonicalCoords = std::map<BasisIndex, Rational>;

CanonicalCoords canonical_basis(const VElem& a);
VElem from_canonical_basis(const GroupPtr& group, int cap, const CanonicalCoords& coords);
// The basis element itself, computed as a product of e0, e1 and group elements.
VElem canonical_basis_element(const GroupPtr& group, int cap, const BasisIndex& index);

// z_{n,g} = -e0^{n-1} g e1, extended multiplicatively.
VElem w_to_v(const ZSeries& w);
// Inverse of w_to_v on its image; InternalError for elements outside
// k + V e1.
ZSeries v_to_w(const VElem& a);
bool v_in_w(const VElem& a);
// Projection V -> M_G = V / (V e0 + sum_g V(g - 1)), with M_G represented
// through -.1_M by the z-words.
ZSeries m_project(const VElem& a);

// y_{n,g} <-> z_{n,g} renaming.
ZSeries varpi(const YSeries& y);
YSeries varpi_inverse(const ZSeries& z);
// k<<X>>/k<<X>>x0 -> M_G, the quotient given by its Y-representative.
ZSeries kappa(const YSeries& quotient);
YSeries kappa_inverse(const ZSeries& m);

ZTensor delta_W(const ZSeries& w);
ZTensor delta_M(const ZSeries& m);

// Group actions on V_G, W_G and M_G. Each operator memoizes its images, so
// keep one instance when applying the same Psi repeatedly.
class CrossedActions {
public:
    explicit CrossedActions(const XSeries& psi);
    CrossedActions(const CrossedActions&) = delete;
    CrossedActions& operator=(const CrossedActions&) = delete;

    const XSeries& psi() const { return aut_.psi(); }

    VElem aut_V0(const VElem& a);
    VElem aut_V1(const VElem& a);
    VElem aut_V10(const VElem& a);
    VElem gamma_aut_V1(const VElem& a);

    const ZSeries& aut_W1_of_word(const Word& w) { return aut_W1_->of_word(w); }
    ZSeries aut_W1(const ZSeries& w) { return (*aut_W1_)(w); }
    const ZSeries& gamma_aut_W1_of_word(const Word& w) { return gamma_aut_W1_->of_word(w); }
    ZSeries gamma_aut_W1(const ZSeries& w) { return (*gamma_aut_W1_)(w); }
    const ZSeries& aut_M10_of_word(const Word& w) { return aut_M10_->of_word(w); }
    ZSeries aut_M10(const ZSeries& m) { return (*aut_M10_)(m); }
    const ZSeries& gamma_aut_M10_of_word(const Word& w) { return gamma_aut_M10_->of_word(w); }
    ZSeries gamma_aut_M10(const ZSeries& m) { return (*gamma_aut_M10_)(m); }

    // The left twisting factor Gamma_Psi(-e1) and its inverse, as elements
    // of W_G.
    const ZSeries& gamma_inv_z11() const { return gamma_inv_; }
    const ZSeries& gamma_z11() const { return gamma_; }

private:
    AutPsi aut_;
    VElem psi_v_;
    VElem psi_inv_v_;
    ZSeries gamma_inv_;
    ZSeries gamma_;
    std::unique_ptr<AlgebraMorphism<ZTag>> aut_W1_;
    std::unique_ptr<AlgebraMorphism<ZTag>> gamma_aut_W1_;
    std::unique_ptr<LinearMap<ZTag>> aut_M10_;
    std::unique_ptr<LinearMap<ZTag>> gamma_aut_M10_;
};

VElem aut_V0(const XSeries& psi, const VElem& a);
VElem aut_V1(const XSeries& psi, const VElem& a);
VElem aut_V10(const XSeries& psi, const VElem& a);
VElem gamma_aut_V1(const XSeries& psi, const VElem& a);
// Word by word through V_G: v_to_w(aut_V1(w_to_v(w))).
ZSeries aut_W1(const XSeries& psi, const ZSeries& w);
ZSeries gamma_aut_W1(const XSeries& psi, const ZSeries& w);
// Lift through w_to_v, apply aut_V10, project.
ZSeries aut_M10(const XSeries& psi, const ZSeries& m);
ZSeries gamma_aut_M10(const XSeries& psi, const ZSeries& m);

enum class AutYRoute {
    // varpi^{-1} o Gamma-twisted aut_W1 o varpi
    ThroughW,
    // y_{n,g} -> q_Y(Gamma(x1) Psi x0^{n-1} t_g(Psi^{-1} Gamma^{-1}(x1)) x_g)
    Explicit,
};
YSeries gamma_aut_Y(const XSeries& psi, const YSeries& y, AutYRoute route = AutYRoute::ThroughW);

// Generators z_{n,g} suffice for W since both sides are algebra morphisms;
// full_word_audit checks every z-word instead.
Verdict stab_W_membership(const XSeries& psi, bool full_word_audit = false);
Verdict stab_M_membership(const XSeries& psi);
// Delta^Y o gamma_aut_Y = (gamma_aut_Y)^{(x)2} o Delta^Y on the generators y_{n,g}.
Verdict stab_alg_membership(const XSeries& psi, AutYRoute route = AutYRoute::Explicit);

} // namespace dsh
