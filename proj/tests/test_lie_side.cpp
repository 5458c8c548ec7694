#include "support.hpp"

#include "dsh/errors.hpp"
#include "dsh/lie_side.hpp"
#include "dsh/perturbation.hpp"

using namespace dsh;
using namespace dsh::test;

namespace {

VElem random_v(const GroupPtr& g, int cap, Rng& rng, int terms)
{
    VElem v(g, cap);
    for (int h = 0; h < g->size(); ++h)
        v.part(h) = random_series(g, cap, rng, terms);
    return v;
}

ZSeries random_z(const GroupPtr& g, int cap, Rng& rng, int terms) { return varpi(random_y_series(g, cap, rng, terms)); }

XSeries scaled(const XSeries& a, const Rational& t) { return a * t; }

} // namespace

TEST(DPsi, Examples)
{
    auto g = grp("trivial");
    Rng rng(1);
    XSeries psi = random_lie(g, 4, rng, 3);
    EXPECT_TRUE(d_psi(psi, X(g, 4, {{"1", "x0"}})).is_zero());
    EXPECT_EQ(d_psi(X(g, 4, {{"1", "x0"}}), X(g, 4, {{"1", "x1"}})), X(g, 4, {{"1", "x1 x0"}, {"-1", "x0 x1"}}));
    auto z3 = grp("Z3");
    XSeries p = random_lie(z3, 4, rng, 3);
    DPsi d(p);
    for (int t = 0; t < 5; ++t) {
        XSeries a = random_series(z3, 4, rng, 3), b = random_series(z3, 4, rng, 3);
        EXPECT_EQ(d(a * b), d(a) * b + a * d(b));
        for (int h = 0; h < z3->size(); ++h)
            EXPECT_EQ(d(t_action(h, a)), t_action(h, d(a)));
    }
}

TEST(SPsi, ExamplesAndExponential)
{
    Rng rng(2);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        XSeries psi = random_lie(g, 4, rng, 3), phi = random_lie(g, 4, rng, 3);
        EXPECT_EQ(s_psi(psi, XSeries::one(g, 4)), psi);
        XSeries a = random_series(g, 4, rng, 5);
        EXPECT_EQ(s_psi(psi + phi * Rational(2), a), s_psi(psi, a) + s_psi(phi, a) * Rational(2));

        DPsi d(psi);
        XSeries term = a, sum = a;
        for (int k = 1; k <= 4; ++k) {
            term = d.s(term) * Rational(1, k);
            sum += term;
        }
        EXPECT_EQ(s_big(exp_circledast(psi), a), sum);
    }
}

TEST(LieBracket, AxiomsRandomized)
{
    Rng rng(3);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 3; ++t) {
            XSeries a = random_lie(g, 5, rng, 3), b = random_lie(g, 5, rng, 3), c = random_lie(g, 5, rng, 3);
            EXPECT_TRUE(lie_bracket(a, a).is_zero());
            EXPECT_EQ(lie_bracket(a, b), -lie_bracket(b, a));
            XSeries jacobi = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a))
                             + lie_bracket(c, lie_bracket(a, b));
            EXPECT_TRUE(jacobi.is_zero());
        }
    }
}

TEST(LieBracket, InfinitesimalOfTheGroupCommutator)
{
    Rng rng(4);
    auto g = grp("Z2");
    for (int t = 0; t < 5; ++t) {
        XSeries psi = random_lie(g, 2, rng, 2, 1, 1), phi = random_lie(g, 2, rng, 2, 1, 1);
        XSeries a = exp_circledast(psi), b = exp_circledast(phi);
        XSeries comm = circledast(circledast(a, b), circledast(circledast_inverse(a), circledast_inverse(b)));
        EXPECT_EQ(log_circledast(comm), lie_bracket(psi, phi));
    }
}

TEST(LieBracket, ActsThroughSPsi)
{
    Rng rng(5);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        XSeries psi = random_lie(g, 4, rng, 3), phi = random_lie(g, 4, rng, 3);
        XSeries br = lie_bracket(psi, phi);
        XSeries a = random_series(g, 4, rng, 5);
        EXPECT_EQ(s_psi(br, a), s_psi(psi, s_psi(phi, a)) - s_psi(phi, s_psi(psi, a)));
        YSeries m = random_y_series(g, 4, rng, 5);
        EXPECT_EQ(s_Y_psi(br, m), s_Y_psi(psi, s_Y_psi(phi, m)) - s_Y_psi(phi, s_Y_psi(psi, m)));
        EXPECT_EQ(gamma_s_Y_lie(br, m),
                  gamma_s_Y_lie(psi, gamma_s_Y_lie(phi, m)) - gamma_s_Y_lie(phi, gamma_s_Y_lie(psi, m)));
    }
}

TEST(SYLie, ZeroAndIntertwining)
{
    Rng rng(6);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        XSeries zero(g, 4);
        YSeries m = random_y_series(g, 4, rng, 5);
        EXPECT_TRUE(s_Y_psi(zero, m).is_zero());
        EXPECT_TRUE(gamma_s_Y_lie(zero, m).is_zero());
        EXPECT_EQ(gamma_lower(zero), UniSeries(4));
        EXPECT_TRUE(theta_lie(zero).is_zero());
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_lie(g, 4, rng, 4);
            XSeries a = random_series(g, 4, rng, 5);
            EXPECT_EQ(q_Y(pi_Y(s_psi(psi, a))), s_Y_psi(psi, q_Y(pi_Y(a))));
            EXPECT_EQ(gamma_s_Y_lie(psi, m), s_Y_psi(theta_lie(psi), m));
        }
    }
}

TEST(DMR0Lie, Examples)
{
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        EXPECT_TRUE(dmr0_lie_membership(XSeries(g, 4)).member);
    }
    auto g = grp("trivial");
    Verdict v = dmr0_lie_membership(X(g, 4, {{"1", "x0"}}));
    EXPECT_FALSE(v.member);
    EXPECT_EQ(v.first_failure(), "(i): (psi|x0) = 1");
    EXPECT_THROW(dmr0_lie_membership(X(g, 4, {{"1", "x0 x1"}})), DomainError);
    EXPECT_THROW(dmr0_lie_membership(XSeries(grp("Z2xZ2"), 3)), UnsupportedError);

    // [x0,x1] has a primitive psi_* but (psi_*|x0 x1) is not 0.
    Verdict w = dmr0_lie_membership(X(g, 4, {{"1", "x0 x1"}, {"-1", "x1 x0"}}));
    EXPECT_FALSE(w.member);
    EXPECT_EQ(w.first_failure().substr(0, 5), "(iii)");

    // [x0,[x0,x1]] + [[x0,x1],x1] spans degree 3; flipping the second sign
    // breaks primitivity of psi_*.
    XSeries a = X(g, 5, {{"1", "x0 x0 x1"}, {"-2", "x0 x1 x0"}, {"1", "x1 x0 x0"}});
    XSeries b = X(g, 5, {{"1", "x0 x1 x1"}, {"-2", "x1 x0 x1"}, {"1", "x1 x1 x0"}});
    Verdict z3 = dmr0_lie_membership(a + b);
    EXPECT_TRUE(z3.member) << z3.first_failure();
    Verdict bad = dmr0_lie_membership(a - b);
    EXPECT_FALSE(bad.member);
    EXPECT_EQ(bad.first_failure().substr(0, 4), "(ii)");
    EXPECT_FALSE(dmr0_lie_membership(a).member);
}

TEST(StabModLie, Examples)
{
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        EXPECT_TRUE(stab_mod_lie_membership(XSeries(g, 4)).member);
        Verdict v = stab_mod_lie_membership(X(g, 4, {{"1", "x0"}}));
        EXPECT_TRUE(v.member) << v.first_failure();
    }
}

TEST(ExpLog, Examples)
{
    auto g = grp("trivial");
    EXPECT_EQ(exp_circledast(XSeries(g, 4)), XSeries::one(g, 4));
    EXPECT_EQ(exp_circledast(X(g, 4, {{"1", "x0"}})), series_exp(X(g, 4, {{"1", "x0"}})));
    EXPECT_THROW(exp_circledast(X(g, 4, {{"1", "x0 x1"}})), DomainError);
    EXPECT_THROW(log_circledast(X(g, 4, {{"1", "1"}, {"1", "x0 x1"}})), DomainError);
}

TEST(ExpLog, MutualInversesRandomized)
{
    Rng rng(7);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 4; ++t) {
            XSeries psi = random_lie(g, 4, rng, 4);
            XSeries e = exp_circledast(psi);
            EXPECT_TRUE(x_is_grouplike(e));
            EXPECT_EQ(log_circledast(e), psi);
            XSeries a = random_grouplike(g, 4, rng, 3);
            XSeries l = log_circledast(a);
            EXPECT_TRUE(x_is_primitive(l));
            EXPECT_EQ(exp_circledast(l), a);
        }
    }
}

TEST(Cbh, IdentitiesRandomized)
{
    Rng rng(8);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_lie(g, 4, rng, 3), phi = random_lie(g, 4, rng, 3);
            EXPECT_EQ(cbh(psi, XSeries(g, 4)), psi);
            XSeries c = cbh(psi, phi);
            EXPECT_EQ(exp_circledast(c), circledast(exp_circledast(psi), exp_circledast(phi)));
            XSeries low = psi + phi + lie_bracket(psi, phi) * Rational(1, 2);
            EXPECT_EQ(c.with_cap(2), low.with_cap(2));
        }
    }
}

TEST(CrossedLie, ZeroMapsAndGenerators)
{
    Rng rng(9);
    auto g = grp("Z3");
    XSeries zero(g, 4);
    VElem a = random_v(g, 4, rng, 3);
    ZSeries m = random_z(g, 4, rng, 4);
    EXPECT_TRUE(der_V0(zero, a).is_zero());
    EXPECT_TRUE(der_V1(zero, a).is_zero());
    EXPECT_TRUE(end_V10(zero, a).is_zero());
    EXPECT_TRUE(gamma_der_V1(zero, a).is_zero());
    EXPECT_TRUE(end_M10(zero, m).is_zero());
    EXPECT_TRUE(gamma_end_M10(zero, m).is_zero());
    EXPECT_TRUE(gamma_der_W1(zero, m).is_zero());
    EXPECT_TRUE(gamma_d_Y(zero, varpi_inverse(m)).is_zero());

    XSeries psi = random_lie(g, 4, rng, 4);
    CrossedLieActions act(psi);
    EXPECT_TRUE(act.der_V0(v_e0(g, 4)).is_zero());
    for (int h = 0; h < g->size(); ++h)
        EXPECT_TRUE(act.der_V0(v_grp(g, 4, h)).is_zero());
    VElem e1 = v_e1(g, 4), p = v_from_x(psi);
    EXPECT_EQ(act.der_V0(e1), e1 * p - p * e1);
    VElem b = random_v(g, 4, rng, 3);
    EXPECT_EQ(act.der_V0(a * b), act.der_V0(a) * b + a * act.der_V0(b));
    EXPECT_EQ(act.der_V1(a * b), act.der_V1(a) * b + a * act.der_V1(b));
    EXPECT_EQ(act.gamma_der_V1(a * b), act.gamma_der_V1(a) * b + a * act.gamma_der_V1(b));
}

TEST(CrossedLie, RestrictionsAndClassesAgree)
{
    Rng rng(10);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_lie(g, 4, rng, 4);
            CrossedLieActions act(psi);
            ZSeries z = random_z(g, 4, rng, 5);
            EXPECT_TRUE(v_in_w(act.gamma_der_V1(w_to_v(z))));
            EXPECT_TRUE(v_in_w(act.der_V1(w_to_v(z))));
            EXPECT_EQ(act.der_W1(z), der_W1(psi, z));
            EXPECT_EQ(act.gamma_der_W1(z), gamma_der_W1(psi, z));
            EXPECT_EQ(act.end_M10(z), end_M10(psi, z));
            EXPECT_EQ(act.gamma_end_M10(z), gamma_end_M10(psi, z));
            ZSeries w = random_z(g, 4, rng, 3);
            EXPECT_EQ(act.end_M10(w * z), act.der_W1(w) * z + w * act.end_M10(z));
            EXPECT_EQ(act.gamma_end_M10(w * z), act.gamma_der_W1(w) * z + w * act.gamma_end_M10(z));
            EXPECT_EQ(varpi(gamma_s_Y_lie(psi, varpi_inverse(z))), act.gamma_end_M10(z));
        }
    }
}

TEST(CrossedLie, LieActionLawsRandomized)
{
    Rng rng(11);
    for (const char* spec : {"Z2", "Z3"}) {
        auto g = grp(spec);
        XSeries psi = random_lie(g, 4, rng, 3), phi = random_lie(g, 4, rng, 3);
        XSeries br = lie_bracket(psi, phi);
        CrossedLieActions ap(psi), af(phi), ab(br);
        VElem a = random_v(g, 4, rng, 3);
        EXPECT_EQ(ab.der_V0(a), ap.der_V0(af.der_V0(a)) - af.der_V0(ap.der_V0(a)));
        EXPECT_EQ(ab.der_V1(a), ap.der_V1(af.der_V1(a)) - af.der_V1(ap.der_V1(a)));
        EXPECT_EQ(ab.end_V10(a), ap.end_V10(af.end_V10(a)) - af.end_V10(ap.end_V10(a)));
        EXPECT_EQ(ab.gamma_der_V1(a), ap.gamma_der_V1(af.gamma_der_V1(a)) - af.gamma_der_V1(ap.gamma_der_V1(a)));
        ZSeries m = random_z(g, 4, rng, 5);
        EXPECT_EQ(ab.end_M10(m), ap.end_M10(af.end_M10(m)) - af.end_M10(ap.end_M10(m)));
        EXPECT_EQ(ab.gamma_end_M10(m), ap.gamma_end_M10(af.gamma_end_M10(m)) - af.gamma_end_M10(ap.gamma_end_M10(m)));
        EXPECT_EQ(ab.gamma_der_W1(m), ap.gamma_der_W1(af.gamma_der_W1(m)) - af.gamma_der_W1(ap.gamma_der_W1(m)));
        YSeries y = varpi_inverse(m);
        EXPECT_EQ(gamma_d_Y(br, y),
                  gamma_d_Y(psi, gamma_d_Y(phi, y)) - gamma_d_Y(phi, gamma_d_Y(psi, y)));
    }
}

TEST(GammaDY, RoutesAgreeOnGenerators)
{
    Rng rng(12);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 3; ++t) {
            XSeries psi = random_lie(g, 5, rng, 4);
            GammaDY a(psi, AutYRoute::ThroughW), b(psi, AutYRoute::Explicit);
            for (int n = 1; n <= 5; ++n)
                for (int h = 0; h < g->size(); ++h)
                    ASSERT_EQ(a.of_word(y_letter_word(n, h)), b.of_word(y_letter_word(n, h)));
        }
    }
}

TEST(GammaDY, TrivialGroupX0)
{
    auto g = grp("trivial");
    XSeries x0 = X(g, 5, {{"1", "x0"}});
    for (int n = 1; n <= 4; ++n) {
        YSeries yn = YSeries::monomial(g, 5, y_letter_word(n, 0));
        EXPECT_TRUE(gamma_d_Y(x0, yn, AutYRoute::Explicit).is_zero());
        EXPECT_TRUE(gamma_d_Y(x0, yn, AutYRoute::ThroughW).is_zero());
    }
}

TEST(StabLie, ExamplesAndInclusions)
{
    Rng rng(13);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        XSeries zero(g, 4);
        EXPECT_TRUE(stab_W_lie_membership(zero).member);
        EXPECT_TRUE(stab_M_lie_membership(zero).member);
        EXPECT_TRUE(stab_alg_lie_membership(zero).member);
        for (int t = 0; t < 4; ++t) {
            XSeries psi = random_lie(g, 4, rng, 3);
            bool m = stab_M_lie_membership(psi).member;
            bool w = stab_W_lie_membership(psi).member;
            EXPECT_EQ(m, stab_mod_lie_membership(psi).member);
            EXPECT_EQ(w, stab_alg_lie_membership(psi).member);
            if (m)
                EXPECT_TRUE(w);
        }
        XSeries x0 = X(g, 4, {{"1", "x0"}});
        EXPECT_TRUE(stab_M_lie_membership(x0).member);
        EXPECT_TRUE(stab_W_lie_membership(x0).member);
    }
}

// The t-linear parts of the group actions at exp_circledast(t psi) are the Lie
// actions; the Gamma-twisted ones differ from the gamma-twisted ones by
// (psi|x1) times multiplication (or ad) by z_{1,1}.
TEST(FirstOrder, GroupActionsDifferentiateToLieActions)
{
    Rng rng(14);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        const int cap = 4;
        for (int t = 0; t < 2; ++t) {
            XSeries psi = random_lie(g, cap, rng, 4);
            Rational c = psi.coeff(x1_word());
            VElem a = random_v(g, cap, rng, 2);
            ZSeries z = random_z(g, cap, rng, 4);
            YSeries y = varpi_inverse(z);
            XSeries xa = random_series(g, cap, rng, 4);
            CrossedLieActions lie(psi);
            ZSeries z11 = Z(g, cap, {{"1", "z1"}});
            VElem z11v = w_to_v(z11);

            auto at = [&](const Rational& s) { return exp_circledast(scaled(psi, s)); };
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return s_big(at(s), xa); }), s_psi(psi, xa));
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return s_Y(at(s), y); }), s_Y_psi(psi, y));
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return gamma_s_Y(at(s), y); }),
                      gamma_s_Y_lie(psi, y) + retag<YTag>(z11 * z) * c);
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return aut_V0(at(s), a); }), lie.der_V0(a));
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return aut_V1(at(s), a); }), lie.der_V1(a));
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return aut_V10(at(s), a); }), lie.end_V10(a));
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return gamma_aut_V1(at(s), a); }),
                      lie.gamma_der_V1(a) + (z11v * a - a * z11v) * c);
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return aut_W1(at(s), z); }), lie.der_W1(z));
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return gamma_aut_W1(at(s), z); }),
                      lie.gamma_der_W1(z) + (z11 * z - z * z11) * c);
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return aut_M10(at(s), z); }), lie.end_M10(z));
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return gamma_aut_M10(at(s), z); }),
                      lie.gamma_end_M10(z) + z11 * z * c);
            EXPECT_EQ(first_order_part(cap, [&](const Rational& s) { return gamma_aut_Y(at(s), y); }),
                      gamma_d_Y(psi, y) + varpi_inverse(z11 * z - z * z11) * c);
        }
    }
}
