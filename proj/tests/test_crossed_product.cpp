#include "support.hpp"

#include "dsh/crossed_product.hpp"
#include "dsh/errors.hpp"

#include <map>
#include <tuple>

using namespace dsh;
using namespace dsh::test;

namespace {

VElem vterm(const GroupPtr& g, int cap, const char* word, int h, const Rational& c = 1)
{
    VElem v(g, cap);
    v.add_term(w(g, word), h, c);
    return v;
}

VElem random_v(const GroupPtr& g, int cap, Rng& rng, int terms)
{
    VElem v(g, cap);
    for (int h = 0; h < g->size(); ++h)
        v.part(h) = random_series(g, cap, rng, terms);
    return v;
}

ZSeries random_z(const GroupPtr& g, int cap, Rng& rng, int terms) { return varpi(random_y_series(g, cap, rng, terms)); }

ZTensor varpi2(const YTensor& t)
{
    ZTensor out(t.group_ptr(), t.cap());
    for (auto& [k, c] : t.terms())
        out.accumulate_key(k, c);
    return out;
}

using Triple = std::map<std::tuple<Word, Word, Word>, Rational>;

Triple left_coassoc(const ZTensor& d, HarmonicCoproduct<ZTag>& delta)
{
    Triple out;
    for (auto& [lr, c] : d.sorted_terms())
        for (auto& [ab, e] : delta.of_word(lr.first).sorted_terms())
            out[{ab.first, ab.second, lr.second}] += c * e;
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

Triple right_coassoc(const ZTensor& d, HarmonicCoproduct<ZTag>& delta)
{
    Triple out;
    for (auto& [lr, c] : d.sorted_terms())
        for (auto& [ab, e] : delta.of_word(lr.second).sorted_terms())
            if (degree(lr.first) + degree(ab.first) + degree(ab.second) <= d.cap())
                out[{lr.first, ab.first, ab.second}] += c * e;
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace

TEST(VMul, Examples)
{
    auto g = grp("Z3");
    EXPECT_EQ(v_grp(g, 3, 1) * vterm(g, 3, "x[1]", 0), vterm(g, 3, "x[2]", 1));
    Rng rng(1);
    VElem a = random_v(g, 3, rng, 3);
    EXPECT_EQ(VElem::one(g, 3) * a, a);
    EXPECT_EQ(a * VElem::one(g, 3), a);
    for (int h = 0; h < g->size(); ++h)
        EXPECT_EQ(v_grp(g, 3, h) * v_e0(g, 3), v_e0(g, 3) * v_grp(g, 3, h));
}

TEST(VMul, AssociativeRandomized)
{
    Rng rng(2);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 5; ++t) {
            VElem a = random_v(g, 4, rng, 3), b = random_v(g, 4, rng, 3), c = random_v(g, 4, rng, 3);
            EXPECT_EQ((a * b) * c, a * (b * c));
        }
    }
}

TEST(VFromX, GeneratorsAndMorphism)
{
    auto g = grp("Z3");
    EXPECT_EQ(v_from_x(X(g, 3, {{"1", "x0"}})), v_e0(g, 3));
    EXPECT_EQ(v_from_x(XSeries::one(g, 3)), VElem::one(g, 3));
    for (int h = 0; h < g->size(); ++h)
        EXPECT_EQ(v_grp(g, 3, h) * v_e1(g, 3) * v_grp(g, 3, g->inv(h)) * Rational(-1),
                  v_from_x(xg_series(g, 3, h)));
    Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        XSeries a = random_series(g, 4, rng, 4), b = random_series(g, 4, rng, 4);
        EXPECT_EQ(v_from_x(a * b), v_from_x(a) * v_from_x(b));
    }
}

// The pair (v_from_x, v_grp) satisfies the crossed-product relation and
// reconstructs every element.
TEST(VFromX, UniversalPropertyInstance)
{
    Rng rng(4);
    auto g = grp("Z3");
    for (int t = 0; t < 5; ++t) {
        XSeries a = random_series(g, 4, rng, 4);
        for (int h = 0; h < g->size(); ++h)
            EXPECT_EQ(v_grp(g, 4, h) * v_from_x(a) * v_grp(g, 4, g->inv(h)), v_from_x(t_action(h, a)));
        VElem v = random_v(g, 4, rng, 3);
        VElem rebuilt(g, 4);
        for (int h = 0; h < g->size(); ++h)
            rebuilt += v_from_x(v.part(h)) * v_grp(g, 4, h);
        EXPECT_EQ(rebuilt, v);
    }
}

TEST(CanonicalBasis, Examples)
{
    auto g = grp("Z3");
    CanonicalCoords unit = canonical_basis(VElem::one(g, 3));
    ASSERT_EQ(unit.size(), 1u);
    EXPECT_EQ(unit.begin()->first, (BasisIndex{{1}, {0}}));
    EXPECT_EQ(unit.begin()->second, 1);

    for (int h = 0; h < g->size(); ++h) {
        CanonicalCoords c = canonical_basis(v_from_x(xg_series(g, 3, h)));
        ASSERT_EQ(c.size(), 1u);
        EXPECT_EQ(c.begin()->first, (BasisIndex{{1, 1}, {h, g->inv(h)}}));
        EXPECT_EQ(c.begin()->second, -1);
    }
}

TEST(CanonicalBasis, RoundTripRandomized)
{
    Rng rng(5);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 10; ++t) {
            VElem v = random_v(g, 4, rng, 5);
            EXPECT_EQ(from_canonical_basis(g, 4, canonical_basis(v)), v);
        }
    }
}

TEST(CanonicalBasis, MatchesProductsOfGenerators)
{
    for (const char* spec : {"Z2", "Z3"}) {
        auto g = grp(spec);
        for (auto& word : all_x_words(*g, 3))
            for (int h = 0; h < g->size(); ++h) {
                VElem v(g, 3);
                v.add_term(word, h, 1);
                CanonicalCoords c = canonical_basis(v);
                ASSERT_EQ(c.size(), 1u);
                auto& [idx, coef] = *c.begin();
                EXPECT_EQ(canonical_basis_element(g, 3, idx) * coef, v);
            }
    }
}

TEST(WToV, Examples)
{
    auto g = grp("Z3");
    EXPECT_EQ(w_to_v(ZSeries::one(g, 3)), VElem::one(g, 3));
    EXPECT_EQ(w_to_v(Z(g, 3, {{"1", "z1"}})), v_e1(g, 3) * Rational(-1));
    for (int h = 0; h < g->size(); ++h)
        EXPECT_EQ(w_to_v(ZSeries::monomial(g, 3, y_letter_word(2, h))),
                  v_e0(g, 3) * v_grp(g, 3, h) * v_e1(g, 3) * Rational(-1));
}

TEST(WToV, AlgebraMorphismIntoW)
{
    Rng rng(6);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 5; ++t) {
            ZSeries a = random_z(g, 4, rng, 4), b = random_z(g, 4, rng, 4);
            VElem va = w_to_v(a);
            EXPECT_TRUE(v_in_w(va));
            EXPECT_EQ(w_to_v(a * b), va * w_to_v(b));
            EXPECT_EQ(v_to_w(va), a);
        }
    }
    auto g = grp("Z2");
    EXPECT_FALSE(v_in_w(v_e0(g, 3)));
    EXPECT_THROW(v_to_w(v_grp(g, 3, 1)), InternalError);
}

TEST(MProject, Examples)
{
    auto g = grp("Z3");
    EXPECT_TRUE(m_project(v_e0(g, 3)).is_zero());
    for (int h = 0; h < g->size(); ++h)
        EXPECT_EQ(m_project(v_grp(g, 3, h)), ZSeries::one(g, 3));
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        ZSeries z = random_z(g, 4, rng, 6);
        EXPECT_EQ(m_project(w_to_v(z)), z);
    }
}

TEST(MProject, KillsTheSubmodule)
{
    Rng rng(8);
    auto g = grp("Z3");
    for (int t = 0; t < 5; ++t) {
        VElem a = random_v(g, 4, rng, 4);
        EXPECT_TRUE(m_project(a * v_e0(g, 4)).is_zero());
        for (int h = 0; h < g->size(); ++h)
            EXPECT_TRUE(m_project(a * (v_grp(g, 4, h) - VElem::one(g, 4))).is_zero());
    }
}

TEST(Kappa, Examples)
{
    auto g = grp("Z2");
    EXPECT_EQ(kappa(YSeries::one(g, 3)), ZSeries::one(g, 3));
    EXPECT_EQ(kappa(q_Y_inv(Y(g, 3, {{"1", "y2[1]"}}))), Z(g, 3, {{"1", "z2[1]"}}));
    Rng rng(9);
    ZSeries m = random_z(g, 4, rng, 5);
    EXPECT_EQ(kappa(kappa_inverse(m)), m);
}

TEST(Kappa, DefiningSquareAndProjectionSquare)
{
    Rng rng(10);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 5; ++t) {
            XSeries a = random_series(g, 4, rng, 6);
            EXPECT_EQ(kappa(pi_Y(a)), m_project(v_from_x(a)));
            YSeries m = random_y_series(g, 4, rng, 6);
            EXPECT_EQ(m_project(w_to_v(varpi(m))), kappa(q_Y_inv(m)));
        }
    }
}

TEST(DeltaW, Examples)
{
    auto g = grp("Z2");
    for (int h = 0; h < g->size(); ++h) {
        ZSeries z = ZSeries::monomial(g, 4, y_letter_word(1, h));
        EXPECT_EQ(delta_W(z), unit_tensor(z, true) + unit_tensor(z, false));
    }
    ZTensor d = delta_W(Z(g, 4, {{"1", "z2[1]"}}));
    EXPECT_EQ(d.coeff(w(g, "z1", Alphabet::Z), w(g, "z1[1]", Alphabet::Z)), 1);
    EXPECT_EQ(d.coeff(w(g, "z1[1]", Alphabet::Z), w(g, "z1", Alphabet::Z)), 1);
    EXPECT_EQ(d.size(), 4u);
}

TEST(DeltaW, VarpiTransportsTheHarmonicCoproduct)
{
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        HarmonicCoproduct<YTag> ystar(g, 4);
        HarmonicCoproduct<ZTag> dw(g, 4);
        for (auto& word : all_y_words(*g, 4)) {
            ASSERT_EQ(varpi2(ystar.of_word(word)), dw.of_word(word));
            YSeries quotient = q_Y_inv(YSeries::monomial(g, 4, word));
            ASSERT_EQ(delta_M(kappa(quotient)), varpi2(delta_star_mod(YSeries::monomial(g, 4, word))));
        }
    }
}

TEST(DeltaM, ModuleCompatibilityRandomized)
{
    Rng rng(11);
    auto g = grp("Z3");
    for (int t = 0; t < 5; ++t) {
        ZSeries a = random_z(g, 4, rng, 4), m = random_z(g, 4, rng, 4);
        EXPECT_EQ(delta_M(a * m), delta_W(a) * delta_M(m));
    }
}

TEST(DeltaM, CocommutativeAndCoassociative)
{
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        HarmonicCoproduct<ZTag> delta(g, 4);
        for (auto& word : all_y_words(*g, 4)) {
            const ZTensor& d = delta.of_word(word);
            ZTensor s(g, 4);
            for (auto& [lr, c] : d.sorted_terms())
                s.add_term(lr.second, lr.first, c);
            ASSERT_EQ(d, s);
            ASSERT_EQ(left_coassoc(d, delta), right_coassoc(d, delta));
        }
    }
}

TEST(AutV0, Examples)
{
    Rng rng(12);
    auto g = grp("Z3");
    VElem a = random_v(g, 4, rng, 4);
    EXPECT_EQ(aut_V0(XSeries::one(g, 4), a), a);
    XSeries psi = random_grouplike(g, 4, rng, 3);
    CrossedActions act(psi);
    EXPECT_EQ(act.aut_V0(v_e0(g, 4)), v_e0(g, 4));
    for (int h = 0; h < g->size(); ++h)
        EXPECT_EQ(act.aut_V0(v_grp(g, 4, h)), v_grp(g, 4, h));
    EXPECT_EQ(act.aut_V0(v_e1(g, 4)), v_from_x(series_inverse(psi)) * v_e1(g, 4) * v_from_x(psi));
    VElem b = random_v(g, 4, rng, 4);
    EXPECT_EQ(act.aut_V0(a * b), act.aut_V0(a) * act.aut_V0(b));
}

TEST(AutV, ActionLawsAndBraidingRandomized)
{
    Rng rng(13);
    for (const char* spec : {"Z2", "Z3"}) {
        auto g = grp(spec);
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_grouplike(g, 4, rng, 3), phi = random_grouplike(g, 4, rng, 3);
            CrossedActions ap(psi), af(phi), apf(circledast(psi, phi));
            VElem a = random_v(g, 4, rng, 3), b = random_v(g, 4, rng, 3);
            EXPECT_EQ(apf.aut_V0(a), ap.aut_V0(af.aut_V0(a)));
            EXPECT_EQ(apf.aut_V1(a), ap.aut_V1(af.aut_V1(a)));
            EXPECT_EQ(apf.aut_V10(a), ap.aut_V10(af.aut_V10(a)));
            EXPECT_EQ(apf.gamma_aut_V1(a), ap.gamma_aut_V1(af.gamma_aut_V1(a)));
            EXPECT_EQ(ap.aut_V10(a * b), ap.aut_V10(a) * ap.aut_V0(b));
            EXPECT_EQ(ap.aut_V10(a * b), ap.aut_V1(a) * ap.aut_V10(b));
            EXPECT_EQ(ap.aut_V10(a), ap.aut_V1(a) * v_from_x(psi));
        }
    }
}

TEST(AutW1, IdentityStabilityAndActionLaw)
{
    Rng rng(14);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        ZSeries z = random_z(g, 4, rng, 5);
        EXPECT_EQ(aut_W1(XSeries::one(g, 4), z), z);
        EXPECT_EQ(gamma_aut_W1(XSeries::one(g, 4), z), z);
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_grouplike(g, 4, rng, 3), phi = random_grouplike(g, 4, rng, 3);
            CrossedActions ap(psi), af(phi), apf(circledast(psi, phi));
            EXPECT_TRUE(v_in_w(ap.aut_V1(w_to_v(Z(g, 4, {{"1", "z1"}})))));
            EXPECT_EQ(ap.aut_W1(z), aut_W1(psi, z));
            EXPECT_EQ(ap.gamma_aut_W1(z), gamma_aut_W1(psi, z));
            EXPECT_EQ(apf.aut_W1(z), ap.aut_W1(af.aut_W1(z)));
            EXPECT_EQ(apf.gamma_aut_W1(z), ap.gamma_aut_W1(af.gamma_aut_W1(z)));
        }
    }
}

TEST(AutM10, IdentityCompatibilityAndActionLaw)
{
    Rng rng(15);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        ZSeries m = random_z(g, 4, rng, 5);
        EXPECT_EQ(aut_M10(XSeries::one(g, 4), m), m);
        EXPECT_EQ(gamma_aut_M10(XSeries::one(g, 4), m), m);
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_grouplike(g, 4, rng, 3), phi = random_grouplike(g, 4, rng, 3);
            CrossedActions ap(psi), af(phi), apf(circledast(psi, phi));
            ZSeries a = random_z(g, 4, rng, 3);
            EXPECT_EQ(ap.aut_M10(m), aut_M10(psi, m));
            EXPECT_EQ(ap.gamma_aut_M10(m), gamma_aut_M10(psi, m));
            EXPECT_EQ(ap.aut_M10(a * m), ap.aut_W1(a) * ap.aut_M10(m));
            EXPECT_EQ(ap.gamma_aut_M10(a * m), ap.gamma_aut_W1(a) * ap.gamma_aut_M10(m));
            EXPECT_EQ(apf.aut_M10(m), ap.aut_M10(af.aut_M10(m)));
            EXPECT_EQ(apf.gamma_aut_M10(m), ap.gamma_aut_M10(af.gamma_aut_M10(m)));
        }
    }
}

TEST(AutM10, MatchesTheGammaTwistedSY)
{
    Rng rng(16);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_grouplike(g, 4, rng, 3);
            YSeries m = random_y_series(g, 4, rng, 5);
            EXPECT_EQ(varpi(gamma_s_Y(psi, m)), gamma_aut_M10(psi, varpi(m)));
        }
    }
}

TEST(GammaAutY, RoutesAgree)
{
    Rng rng(17);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        YSeries y = random_y_series(g, 4, rng, 5);
        EXPECT_EQ(gamma_aut_Y(XSeries::one(g, 4), y, AutYRoute::ThroughW), y);
        EXPECT_EQ(gamma_aut_Y(XSeries::one(g, 4), y, AutYRoute::Explicit), y);
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_grouplike(g, 4, rng, 4);
            for (auto& word : all_y_words(*g, 4)) {
                if (word.empty() || first_block_length(word) != word.size())
                    continue;
                YSeries gen = YSeries::monomial(g, 4, word);
                ASSERT_EQ(gamma_aut_Y(psi, gen, AutYRoute::ThroughW), gamma_aut_Y(psi, gen, AutYRoute::Explicit));
            }
            EXPECT_EQ(gamma_aut_Y(psi, y, AutYRoute::ThroughW), gamma_aut_Y(psi, y, AutYRoute::Explicit));
        }
    }
}

TEST(GammaAutY, CrossedTermsEndingInXgAreImagesOfVarpi)
{
    Rng rng(18);
    auto g = grp("Z3");
    for (int t = 0; t < 5; ++t) {
        XSeries a = random_series(g, 3, rng, 5).with_cap(4);
        for (int h = 0; h < g->size(); ++h) {
            XSeries axg = a * xg_series(g, 4, h);
            VElem lhs(g, 4);
            lhs.part(h) = axg;
            EXPECT_EQ(lhs, w_to_v(varpi(q_Y(pi_Y(axg)))));
        }
    }
}

TEST(Stab, Examples)
{
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        EXPECT_TRUE(stab_W_membership(XSeries::one(g, 4)).member);
        EXPECT_TRUE(stab_M_membership(XSeries::one(g, 4)).member);
        XSeries e = series_exp(X(g, 4, {{"1", "x0"}}));
        EXPECT_TRUE(stab_M_membership(e).member);
        EXPECT_TRUE(stab_W_membership(e).member);
    }
    EXPECT_THROW(stab_W_membership(X(grp("Z2"), 3, {{"1", "1"}, {"1", "x0 x1"}})), DomainError);
}

TEST(Stab, MAgreesWithStabModAndImpliesW)
{
    Rng rng(19);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 4; ++t) {
            XSeries psi = random_grouplike(g, 4, rng, 3, 1, 2);
            bool m = stab_M_membership(psi).member;
            EXPECT_EQ(m, stab_mod_membership(psi).member);
            bool wgen = stab_W_membership(psi).member;
            EXPECT_EQ(wgen, stab_W_membership(psi, true).member);
            if (m)
                EXPECT_TRUE(wgen);
        }
    }
}

TEST(Stab, AlgebraSideThroughGammaAutY)
{
    Rng rng(23);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        EXPECT_TRUE(stab_alg_membership(XSeries::one(g, 4)).member);
        EXPECT_TRUE(stab_alg_membership(series_exp(X(g, 4, {{"1", "x0"}}))).member);
        for (int t = 0; t < 4; ++t) {
            XSeries psi = random_grouplike(g, 4, rng, 3, 1, 2);
            bool explicit_route = stab_alg_membership(psi).member;
            EXPECT_EQ(explicit_route, stab_alg_membership(psi, AutYRoute::ThroughW).member);
            if (stab_M_membership(psi).member)
                EXPECT_TRUE(explicit_route);
        }
    }
    EXPECT_THROW(stab_alg_membership(X(grp("Z2"), 3, {{"1", "1"}, {"1", "x0 x1"}})), DomainError);
}
