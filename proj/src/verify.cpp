#include "dsh/verify.hpp"

#include "dsh/cli_io.hpp"
#include "dsh/crossed_product.hpp"
#include "dsh/errors.hpp"
#include "dsh/graded_solver.hpp"
#include "dsh/lie_side.hpp"
#include "dsh/perturbation.hpp"
#include "dsh/racinet_group.hpp"
#include "dsh/random.hpp"
#include "dsh/word_algebras.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace dsh {

namespace {

using Outcome = std::optional<std::string>;
using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string dump(const Inputs& inputs)
{
    std::string out;
    for (auto& [name, value] : inputs)
        out += "  " + name + " = " + value + "\n";
    return out;
}

// Compares exactly; the input description is only built on failure.
template <class T, class F>
Outcome equal(const T& lhs, const T& rhs, F&& inputs)
{
    if (lhs == rhs)
        return std::nullopt;
    return dump(inputs()) + "  lhs = " + show(lhs) + "\n  rhs = " + show(rhs) + "\n";
}

template <class F>
Outcome holds(bool ok, const std::string& what, F&& inputs)
{
    if (ok)
        return std::nullopt;
    return "  " + what + "\n" + dump(inputs());
}

// Runs several checks in sequence, returning the first failure.
Outcome first_of(std::initializer_list<std::function<Outcome()>> checks)
{
    for (auto& c : checks)
        if (auto o = c())
            return o;
    return std::nullopt;
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
    out.prune();
    return out;
}

int random_element(const GroupPtr& g, Rng& rng) { return rng.uniform(0, g->size() - 1); }

// Kernel vectors of one family in every degree 1..cap, computed once per
// (group, cap).
const std::vector<XSeries>& kernel_elements(Condition which, const GroupSpec& spec, int cap)
{
    static std::mutex mutex;
    static std::map<std::tuple<Condition, std::string, int>, std::vector<XSeries>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(which, spec.to_string(), cap);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<XSeries> all;
        for (int n = 1; n <= cap; ++n)
            for (auto& e : kernel_report(which, n, spec, cap).elements)
                all.push_back(e);
        it = cache.emplace(key, std::move(all)).first;
    }
    return it->second;
}

const DegreeSummary& cached_summary(int n, const GroupSpec& spec)
{
    static std::mutex mutex;
    static std::map<std::pair<std::string, int>, DegreeSummary> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(spec.to_string(), n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, degree_summary(n, spec, solver_cap(n))).first;
    return it->second;
}

// exp_circledast of a random nonzero combination of kernel vectors.
XSeries kernel_exponential(Condition which, const GroupPtr& g, int cap, Rng& rng)
{
    const auto& basis = kernel_elements(which, g->spec(), cap);
    XSeries psi(g, cap);
    if (basis.empty())
        return XSeries::one(g, cap);
    while (psi.is_zero())
        for (auto& e : basis)
            if (rng.uniform(0, 1) == 1)
                psi += e * rng.small_rational();
    return exp_circledast(psi);
}

std::string verdict_text(const Verdict& v) { return v.member ? "member" : "non-member (" + v.first_failure() + ")"; }

// ---- identity suites ------------------------------------------------------

std::vector<Identity> delta_tg()
{
    return {{"Delta(t_g a) = (t_g (x) t_g) Delta(a)", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries a = random_series(g, cap, rng, 6);
                 int h = random_element(g, rng);
                 XTensor rhs(g, cap);
                 for (auto& [lr, c] : x_coproduct(a).sorted_terms())
                     rhs.add_term(t_word(*g, h, lr.first), t_word(*g, h, lr.second), c);
                 return equal(x_coproduct(t_action(h, a)), rhs,
                              [&] { return Inputs{{"a", show(a)}, {"g", g->label(h)}}; });
             }}};
}

std::vector<Identity> commut_t_aut()
{
    return {{"aut_Psi(t_g a) = t_g(aut_Psi(a))", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3);
                 XSeries a = random_series(g, cap, rng, 6);
                 int h = random_element(g, rng);
                 AutPsi aut(psi);
                 return equal(aut(t_action(h, a)), t_action(h, aut(a)), [&] {
                     return Inputs{{"Psi", show(psi)}, {"a", show(a)}, {"g", g->label(h)}};
                 });
             }}};
}

std::vector<Identity> group_morphs()
{
    return {{"aut_{Psi (*) Phi} = aut_Psi o aut_Phi",
             [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3), phi = random_grouplike(g, cap, rng, 3);
                 XSeries a = random_series(g, cap, rng, 4);
                 return equal(aut_psi(circledast(psi, phi), a), aut_psi(psi, aut_psi(phi, a)), [&] {
                     return Inputs{{"Psi", show(psi)}, {"Phi", show(phi)}, {"a", show(a)}};
                 });
             }},
            {"S_{Psi (*) Phi} = S_Psi o S_Phi", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3), phi = random_grouplike(g, cap, rng, 3);
                 XSeries a = random_series(g, cap, rng, 4);
                 return equal(s_big(circledast(psi, phi), a), s_big(psi, s_big(phi, a)), [&] {
                     return Inputs{{"Psi", show(psi)}, {"Phi", show(phi)}, {"a", show(a)}};
                 });
             }}};
}

std::vector<Identity> gamma_aut()
{
    return {{"Gamma_{Psi (*) Phi} = Gamma_Psi Gamma_Phi", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 4), phi = random_grouplike(g, cap, rng, 4);
                 return equal(gamma_of(circledast(psi, phi)), gamma_of(psi) * gamma_of(phi),
                              [&] { return Inputs{{"Psi", show(psi)}, {"Phi", show(phi)}}; });
             }}};
}

std::vector<Identity> rel_aut_alg_mod()
{
    auto inputs = [](const XSeries& psi, const VElem& a, const VElem& b) {
        return Inputs{{"Psi", show(psi)}, {"a", show(a)}, {"b", show(b)}};
    };
    return {{"aut10(ab) = aut10(a) aut0(b)",
             [inputs](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3);
                 VElem a = random_v(g, cap, rng, 3), b = random_v(g, cap, rng, 3);
                 CrossedActions act(psi);
                 return equal(act.aut_V10(a * b), act.aut_V10(a) * act.aut_V0(b), [&] { return inputs(psi, a, b); });
             }},
            {"aut10(ab) = aut1(a) aut10(b)", [inputs](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3);
                 VElem a = random_v(g, cap, rng, 3), b = random_v(g, cap, rng, 3);
                 CrossedActions act(psi);
                 return equal(act.aut_V10(a * b), act.aut_V1(a) * act.aut_V10(b), [&] { return inputs(psi, a, b); });
             }}};
}

// a.m for a in V_G and m in M_G.
ZSeries act_on_m(const VElem& a, const ZSeries& m) { return m_project(a * w_to_v(m)); }

std::vector<Identity> compat_mv(bool gamma)
{
    std::string p = gamma ? "Gamma-" : "";
    return {{p + "autM10(a.m) = " + p + "autV1(a)." + p + "autM10(m), a in V",
             [gamma](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3);
                 VElem a = random_v(g, cap, rng, 2);
                 ZSeries m = random_z(g, cap, rng, 4);
                 CrossedActions act(psi);
                 ZSeries lhs = gamma ? act.gamma_aut_M10(act_on_m(a, m)) : act.aut_M10(act_on_m(a, m));
                 ZSeries rhs = gamma ? act_on_m(act.gamma_aut_V1(a), act.gamma_aut_M10(m))
                                     : act_on_m(act.aut_V1(a), act.aut_M10(m));
                 return equal(lhs, rhs, [&] { return Inputs{{"Psi", show(psi)}, {"a", show(a)}, {"m", show(m)}}; });
             }},
            {p + "autM10(w m) = " + p + "autW1(w) " + p + "autM10(m), w in W",
             [gamma](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3);
                 ZSeries w = random_z(g, cap, rng, 3), m = random_z(g, cap, rng, 4);
                 CrossedActions act(psi);
                 ZSeries lhs = gamma ? act.gamma_aut_M10(w * m) : act.aut_M10(w * m);
                 ZSeries rhs = gamma ? act.gamma_aut_W1(w) * act.gamma_aut_M10(m) : act.aut_W1(w) * act.aut_M10(m);
                 return equal(lhs, rhs, [&] { return Inputs{{"Psi", show(psi)}, {"w", show(w)}, {"m", show(m)}}; });
             }}};
}

std::vector<Identity> beta_and_q()
{
    return {{"beta(a x_g (x) g) = varpi(q_Y(a x_g))", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries a = random_series(g, cap - 1, rng, 5).with_cap(cap);
                 int h = random_element(g, rng);
                 XSeries axg = a * xg_series(g, cap, h);
                 VElem lhs(g, cap);
                 lhs.part(h) = axg;
                 return equal(lhs, w_to_v(varpi(q_Y(pi_Y(axg)))),
                              [&] { return Inputs{{"a", show(a)}, {"g", g->label(h)}}; });
             }}};
}

std::vector<Identity> gamma_s_s_theta()
{
    return {{"gamma-s^Y_psi = s^Y_{theta(psi)}", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_lie(g, cap, rng, 4);
                 YSeries m = random_y_series(g, cap, rng, 6);
                 return equal(gamma_s_Y_lie(psi, m), s_Y_psi(theta_lie(psi), m),
                              [&] { return Inputs{{"psi", show(psi)}, {"m", show(m)}}; });
             }}};
}

std::vector<Identity> iso_v()
{
    return {{"canonical basis round trip", [](Rng& rng, const GroupPtr& g, int cap) {
                 VElem v = random_v(g, cap, rng, 5);
                 return equal(from_canonical_basis(g, cap, canonical_basis(v)), v,
                              [&] { return Inputs{{"v", show(v)}}; });
             }},
            {"alpha(ab) = alpha(a) alpha(b)", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries a = random_series(g, cap, rng, 4), b = random_series(g, cap, rng, 4);
                 return equal(v_from_x(a * b), v_from_x(a) * v_from_x(b),
                              [&] { return Inputs{{"a", show(a)}, {"b", show(b)}}; });
             }},
            {"g alpha(a) g^{-1} = alpha(t_g a)", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries a = random_series(g, cap, rng, 4);
                 int h = random_element(g, rng);
                 return equal(v_grp(g, cap, h) * v_from_x(a) * v_grp(g, cap, g->inv(h)), v_from_x(t_action(h, a)),
                              [&] { return Inputs{{"a", show(a)}, {"g", g->label(h)}}; });
             }},
            {"beta(sum_h a_h (x) h) rebuilds every element", [](Rng& rng, const GroupPtr& g, int cap) {
                 VElem v = random_v(g, cap, rng, 3);
                 VElem rebuilt(g, cap);
                 for (int h = 0; h < g->size(); ++h)
                     rebuilt += v_from_x(v.part(h)) * v_grp(g, cap, h);
                 return equal(rebuilt, v, [&] { return Inputs{{"v", show(v)}}; });
             }}};
}

std::vector<Identity> link_ef0_yad()
{
    return {{"Gamma-S^Y_Psi = S^Y_{Theta(Psi)}", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 4);
                 YSeries m = random_y_series(g, cap, rng, 6);
                 return equal(gamma_s_Y(psi, m), s_Y(theta_of(psi), m),
                              [&] { return Inputs{{"Psi", show(psi)}, {"m", show(m)}}; });
             }}};
}

std::vector<Identity> explicit_aut_y()
{
    return {{"Gamma-aut^Y through W = explicit formula", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 4);
                 YSeries y = random_y_series(g, cap, rng, 5);
                 return equal(gamma_aut_Y(psi, y, AutYRoute::ThroughW), gamma_aut_Y(psi, y, AutYRoute::Explicit),
                              [&] { return Inputs{{"Psi", show(psi)}, {"y", show(y)}}; });
             }}};
}

std::vector<Identity> link_gamma_sy_m10()
{
    return {{"varpi o Gamma-S^Y_Psi = Gamma-autM10_Psi o varpi", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3);
                 YSeries m = random_y_series(g, cap, rng, 5);
                 return equal(varpi(gamma_s_Y(psi, m)), gamma_aut_M10(psi, varpi(m)),
                              [&] { return Inputs{{"Psi", show(psi)}, {"m", show(m)}}; });
             }}};
}

std::vector<Identity> diagram_5()
{
    return {{"Delta^mod o pi_Y = pi_Y^(x)2 o Delta^alg", [](Rng& rng, const GroupPtr& g, int cap) {
                 YSeries m = random_y_series(g, cap, rng, 5);
                 XSeries r = random_series(g, cap - 1, rng, 4).with_cap(cap);
                 XSeries a = y_inject(m) + r * x0_series(g, cap);
                 return equal(delta_star_mod(pi_Y(a)), y_harmonic_coproduct(m),
                              [&] { return Inputs{{"m", show(m)}, {"r", show(r)}}; });
             }}};
}

std::vector<Identity> diagram_24()
{
    return {{"m_project(w_to_v(varpi(m))) = kappa(q_Y^{-1}(m))",
             [](Rng& rng, const GroupPtr& g, int cap) {
                 YSeries m = random_y_series(g, cap, rng, 6);
                 return equal(m_project(w_to_v(varpi(m))), kappa(q_Y_inv(m)), [&] { return Inputs{{"m", show(m)}}; });
             }},
            {"kappa(pi_Y(a)) = m_project(alpha(a))", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries a = random_series(g, cap, rng, 6);
                 return equal(kappa(pi_Y(a)), m_project(v_from_x(a)), [&] { return Inputs{{"a", show(a)}}; });
             }}};
}

std::vector<Identity> diagram_27()
{
    return {{"Delta^M o kappa o q_Y^{-1} = varpi^(x)2 o Delta^mod",
             [](Rng& rng, const GroupPtr& g, int cap) {
                 YSeries y = random_y_series(g, cap, rng, 4);
                 return equal(delta_M(kappa(q_Y_inv(y))), varpi2(delta_star_mod(y)),
                              [&] { return Inputs{{"y", show(y)}}; });
             }},
            {"Delta^M(w m) = Delta^W(w) Delta^M(m)", [](Rng& rng, const GroupPtr& g, int cap) {
                 ZSeries w = random_z(g, cap, rng, 3), m = random_z(g, cap, rng, 4);
                 return equal(delta_M(w * m), delta_W(w) * delta_M(m),
                              [&] { return Inputs{{"w", show(w)}, {"m", show(m)}}; });
             }}};
}

std::vector<Identity> diagram_29()
{
    return {{"aut_V0 o beta = beta o (aut_Psi (x) id)", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3);
                 VElem v = random_v(g, cap, rng, 3);
                 CrossedActions act(psi);
                 AutPsi aut(psi);
                 VElem rhs(g, cap);
                 for (int h = 0; h < g->size(); ++h)
                     rhs.part(h) = aut(v.part(h));
                 return equal(act.aut_V0(v), rhs, [&] { return Inputs{{"Psi", show(psi)}, {"v", show(v)}}; });
             }}};
}

std::vector<Identity> axioms()
{
    return {
        {"Psi (*) 1 = 1 (*) Psi = Psi",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries a = random_grouplike(g, cap, rng, 3);
             XSeries one = XSeries::one(g, cap);
             auto in = [&] { return Inputs{{"Psi", show(a)}}; };
             return first_of({[&] { return equal(circledast(one, a), a, in); },
                              [&] { return equal(circledast(a, one), a, in); }});
         }},
        {"(*) is associative",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries a = random_grouplike(g, cap, rng, 3), b = random_grouplike(g, cap, rng, 3),
                     c = random_grouplike(g, cap, rng, 3);
             return equal(circledast(circledast(a, b), c), circledast(a, circledast(b, c)),
                          [&] { return Inputs{{"A", show(a)}, {"B", show(b)}, {"C", show(c)}}; });
         }},
        {"(*)-inverse on both sides",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries a = random_grouplike(g, cap, rng, 3);
             XSeries inv = circledast_inverse(a);
             XSeries one = XSeries::one(g, cap);
             auto in = [&] { return Inputs{{"Psi", show(a)}}; };
             return first_of({[&] { return equal(circledast(a, inv), one, in); },
                              [&] { return equal(circledast(inv, a), one, in); }});
         }},
        {"<a,b> = -<b,a>",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries a = random_lie(g, cap, rng, 3), b = random_lie(g, cap, rng, 3);
             return equal(lie_bracket(a, b), lie_bracket(b, a) * Rational(-1),
                          [&] { return Inputs{{"a", show(a)}, {"b", show(b)}}; });
         }},
        {"Jacobi identity",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries a = random_lie(g, cap, rng, 3), b = random_lie(g, cap, rng, 3), c = random_lie(g, cap, rng, 3);
             XSeries j = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a))
                         + lie_bracket(c, lie_bracket(a, b));
             return equal(j, XSeries(g, cap),
                          [&] { return Inputs{{"a", show(a)}, {"b", show(b)}, {"c", show(c)}}; });
         }},
        {"log(exp(psi)) = psi",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries psi = random_lie(g, cap, rng, 4);
             return equal(log_circledast(exp_circledast(psi)), psi, [&] { return Inputs{{"psi", show(psi)}}; });
         }},
        {"exp(log(Psi)) = Psi",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries a = random_grouplike(g, cap, rng, 3);
             return equal(exp_circledast(log_circledast(a)), a, [&] { return Inputs{{"Psi", show(a)}}; });
         }},
        {"exp(cbh(psi, phi)) = exp(psi) (*) exp(phi)",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries psi = random_lie(g, cap, rng, 3), phi = random_lie(g, cap, rng, 3);
             return equal(exp_circledast(cbh(psi, phi)), circledast(exp_circledast(psi), exp_circledast(phi)),
                          [&] { return Inputs{{"psi", show(psi)}, {"phi", show(phi)}}; });
         }},
        {"cbh(psi, phi) = psi + phi + <psi,phi>/2 through degree 2",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries psi = random_lie(g, cap, rng, 3), phi = random_lie(g, cap, rng, 3);
             XSeries low = psi + phi + lie_bracket(psi, phi) * Rational(1, 2);
             return equal(cbh(psi, phi).with_cap(std::min(cap, 2)), low.with_cap(std::min(cap, 2)),
                          [&] { return Inputs{{"psi", show(psi)}, {"phi", show(phi)}}; });
         }},
    };
}

// t-linear part at Psi = exp_circledast(t psi) of a group-side map.
template <class F>
auto first_order(const XSeries& psi, int cap, F&& f)
{
    return first_order_part(cap, [&](const Rational& s) { return f(exp_circledast(psi * s)); });
}

std::vector<Identity> first_order_suite()
{
    struct Sample {
        XSeries psi;
        Rational c; // (psi|x1)
        VElem a;
        ZSeries z;
        YSeries y;
        XSeries x;
        ZSeries z11;
        VElem z11v;
    };
    auto sample = [](Rng& rng, const GroupPtr& g, int cap) {
        XSeries psi = random_lie(g, cap, rng, 4);
        ZSeries z = random_z(g, cap, rng, 4);
        ZSeries z11 = ZSeries::monomial(g, cap, y_letter_word(1, 0));
        return Sample{psi, psi.coeff(x1_word()), random_v(g, cap, rng, 2), z, varpi_inverse(z),
                      random_series(g, cap, rng, 4), z11, w_to_v(z11)};
    };
    auto in = [](const Sample& s) {
        return [&s] { return Inputs{{"psi", show(s.psi)}, {"a", show(s.a)}, {"z", show(s.z)}, {"x", show(s.x)}}; };
    };
    return {
        {"d/dt S_Psi = s_psi",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return s_big(p, s.x); }), s_psi(s.psi, s.x),
                          in(s));
         }},
        {"d/dt S^Y_Psi = s^Y_psi",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return s_Y(p, s.y); }), s_Y_psi(s.psi, s.y),
                          in(s));
         }},
        {"d/dt Gamma-S^Y_Psi = gamma-s^Y_psi + (psi|x1) l_{z11}",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return gamma_s_Y(p, s.y); }),
                          gamma_s_Y_lie(s.psi, s.y) + retag<YTag>(s.z11 * s.z) * s.c, in(s));
         }},
        {"d/dt aut_V0 = der_V0",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             CrossedLieActions lie(s.psi);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return aut_V0(p, s.a); }), lie.der_V0(s.a),
                          in(s));
         }},
        {"d/dt aut_V1 = der_V1",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             CrossedLieActions lie(s.psi);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return aut_V1(p, s.a); }), lie.der_V1(s.a),
                          in(s));
         }},
        {"d/dt aut_V10 = end_V10",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             CrossedLieActions lie(s.psi);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return aut_V10(p, s.a); }),
                          lie.end_V10(s.a), in(s));
         }},
        {"d/dt Gamma-aut_V1 = gamma-der_V1 + (psi|x1) ad_{z11}",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             CrossedLieActions lie(s.psi);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return gamma_aut_V1(p, s.a); }),
                          lie.gamma_der_V1(s.a) + (s.z11v * s.a - s.a * s.z11v) * s.c, in(s));
         }},
        {"d/dt aut_W1 = der_W1",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             CrossedLieActions lie(s.psi);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return aut_W1(p, s.z); }), lie.der_W1(s.z),
                          in(s));
         }},
        {"d/dt Gamma-aut_W1 = gamma-der_W1 + (psi|x1) ad_{z11}",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             CrossedLieActions lie(s.psi);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return gamma_aut_W1(p, s.z); }),
                          lie.gamma_der_W1(s.z) + (s.z11 * s.z - s.z * s.z11) * s.c, in(s));
         }},
        {"d/dt aut_M10 = end_M10",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             CrossedLieActions lie(s.psi);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return aut_M10(p, s.z); }),
                          lie.end_M10(s.z), in(s));
         }},
        {"d/dt Gamma-aut_M10 = gamma-end_M10 + (psi|x1) l_{z11}",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             CrossedLieActions lie(s.psi);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return gamma_aut_M10(p, s.z); }),
                          lie.gamma_end_M10(s.z) + s.z11 * s.z * s.c, in(s));
         }},
        {"d/dt Gamma-aut^Y = gamma-d^Y + (psi|x1) ad_{y11}",
         [=](Rng& rng, const GroupPtr& g, int cap) {
             Sample s = sample(rng, g, cap);
             return equal(first_order(s.psi, cap, [&](const XSeries& p) { return gamma_aut_Y(p, s.y); }),
                          gamma_d_Y(s.psi, s.y) + varpi_inverse(s.z11 * s.z - s.z * s.z11) * s.c, in(s));
         }},
    };
}

std::vector<Identity> stab_inclusion()
{
    return {
        {"ker stab_mod(n) in ker stab_alg(n), n <= cap",
         [](Rng&, const GroupPtr& g, int cap) -> Outcome {
             for (int n = 1; n <= cap; ++n) {
                 const DegreeSummary& s = cached_summary(n, g->spec());
                 if (!subspace_contained(s.reports.at(Condition::StabMod).basis, s.reports.at(Condition::StabAlg).basis))
                     return "  degree " + std::to_string(n) + ": " + s.inclusions.first_failure() + "\n";
             }
             return std::nullopt;
         },
         true},
        {"ker dmr0(n) in ker stab_mod(n), n <= cap (cyclic G)",
         [](Rng&, const GroupPtr& g, int cap) -> Outcome {
             if (!g->spec().is_cyclic())
                 return std::nullopt;
             for (int n = 1; n <= cap; ++n) {
                 const DegreeSummary& s = cached_summary(n, g->spec());
                 if (!subspace_contained(s.reports.at(Condition::Dmr0).basis, s.reports.at(Condition::StabMod).basis))
                     return "  degree " + std::to_string(n) + ": " + s.inclusions.first_failure() + "\n";
             }
             return std::nullopt;
         },
         true},
        {"exp of stab_mod kernel vectors lies in Stab(Delta^M) and Stab(Delta^W)",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries psi = kernel_exponential(Condition::StabMod, g, cap, rng);
             Verdict m = stab_M_membership(psi), w = stab_W_membership(psi);
             return holds(m.member && w.member, "stab_M: " + verdict_text(m) + "; stab_W: " + verdict_text(w),
                          [&] { return Inputs{{"Psi", show(psi)}}; });
         }},
        {"Stab(Delta^M) in Stab(Delta^W) on random grouplikes",
         [](Rng& rng, const GroupPtr& g, int cap) {
             XSeries psi = random_grouplike(g, cap, rng, 3, 1, 2);
             bool m = stab_M_membership(psi).member;
             return holds(!m || stab_W_membership(psi).member, "member of Stab(Delta^M) but not of Stab(Delta^W)",
                          [&] { return Inputs{{"Psi", show(psi)}}; });
         }},
    };
}

std::vector<Identity> stab_agreement()
{
    // Half the samples are members by construction, the rest random grouplikes.
    auto pick = [](Condition which, Rng& rng, const GroupPtr& g, int cap) {
        return rng.uniform(0, 1) == 0 ? kernel_exponential(which, g, cap, rng) : random_grouplike(g, cap, rng, 3, 1, 2);
    };
    return {
        {"stab_M verdict = stab_mod verdict",
         [pick](Rng& rng, const GroupPtr& g, int cap) {
             XSeries psi = pick(Condition::StabMod, rng, g, cap);
             Verdict m = stab_M_membership(psi), mod = stab_mod_membership(psi);
             return holds(m.member == mod.member, "stab_M: " + verdict_text(m) + "; stab_mod: " + verdict_text(mod),
                          [&] { return Inputs{{"Psi", show(psi)}}; });
         }},
        {"stab_W verdict = Delta^alg check through Gamma-aut^Y",
         [pick](Rng& rng, const GroupPtr& g, int cap) {
             XSeries psi = pick(Condition::StabAlg, rng, g, cap);
             Verdict w = stab_W_membership(psi), alg = stab_alg_membership(psi);
             return holds(w.member == alg.member, "stab_W: " + verdict_text(w) + "; Delta^alg: " + verdict_text(alg),
                          [&] { return Inputs{{"Psi", show(psi)}}; });
         }},
    };
}

std::vector<Identity> seeded_failure()
{
    return {{"aut_Psi = id (false in general)", [](Rng& rng, const GroupPtr& g, int cap) {
                 XSeries psi = random_grouplike(g, cap, rng, 3);
                 XSeries a = random_series(g, cap, rng, 4);
                 return equal(aut_psi(psi, a), a, [&] { return Inputs{{"Psi", show(psi)}, {"a", show(a)}}; });
             }}};
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

bool SuiteResult::pass() const
{
    for (auto& i : identities)
        if (!i.pass())
            return false;
    return true;
}

const std::vector<SuiteInfo>& verify_suites()
{
    static const std::vector<SuiteInfo> suites{
        {"delta-tg", "the coproduct of k<<X>> intertwines t_g", false, delta_tg()},
        {"commut-t-aut", "aut_Psi commutes with t_g", false, commut_t_aut()},
        {"group-morphs", "Psi -> aut_Psi and Psi -> S_Psi are group morphisms", false, group_morphs()},
        {"gamma-aut", "Gamma is multiplicative for (*)", false, gamma_aut()},
        {"rel-aut-alg-mod", "aut10 against aut0 and aut1", false, rel_aut_alg_mod()},
        {"compat-mv", "autM10 is compatible with autV1 and autW1", false, compat_mv(false)},
        {"compat-gamma-mv", "the Gamma-twisted compatibilities", false, compat_mv(true)},
        {"beta-and-q", "beta on terms ending in x_g", false, beta_and_q()},
        {"gamma-s-s-theta", "gamma-s^Y_psi = s^Y_{theta(psi)}", false, gamma_s_s_theta()},
        {"iso-v", "alpha and beta give the crossed product", false, iso_v()},
        {"link-ef0-yad", "Gamma-S^Y_Psi = S^Y_{Theta(Psi)}", false, link_ef0_yad()},
        {"explicit-auty", "the two routes to Gamma-aut^Y agree", false, explicit_aut_y()},
        {"link-gammasy-gammaautm10", "Gamma-S^Y and Gamma-autM10 through varpi", false, link_gamma_sy_m10()},
        {"diagram-5", "Delta^mod from Delta^alg through pi_Y", false, diagram_5()},
        {"diagram-24", "M_G against the quotient k<<X>>/k<<X>>x0", false, diagram_24()},
        {"diagram-27", "Delta^M against Delta^mod, and module compatibility", false, diagram_27()},
        {"diagram-29", "aut_V0 through beta", false, diagram_29()},
        {"axioms", "(*)-group and Lie algebra axioms, exp/log, cbh", false, axioms()},
        {"first-order", "Lie actions are the first-order parts of the group actions", false, first_order_suite()},
        {"stab-inclusion", "kernel containments and sampled exponentials", false, stab_inclusion()},
        {"stab-agreement", "group-level stabilizer tests agree", false, stab_agreement()},
        {"seeded-failure", "a deliberately false identity", true, seeded_failure()},
    };
    return suites;
}

const SuiteInfo& find_suite(const std::string& name)
{
    for (auto& s : verify_suites())
        if (s.name == name)
            return s;
    throw UnsupportedError("unknown suite '" + name + "'");
}

SuiteResult run_suite(const SuiteInfo& suite, const SuiteOptions& options)
{
    if (options.trials < 1)
        throw DomainError("trials must be positive");
    if (options.cap < 1)
        throw DomainError("cap must be positive");
    GroupPtr group = make_group(options.group);
    SuiteResult result{suite.name, options, {}};
    for (size_t i = 0; i < suite.identities.size(); ++i) {
        const Identity& id = suite.identities[i];
        Rng rng(options.seed ^ fnv1a(suite.name) ^ (0x9e3779b97f4a7c15ull * (i + 1)));
        IdentityResult r{id.name, id.once ? 1 : options.trials, 0, ""};
        for (int t = 0; t < r.trials; ++t) {
            Outcome o = id.trial(rng, group, options.cap);
            if (!o) {
                ++r.passed;
            } else if (r.counterexample.empty()) {
                r.counterexample = "trial " + std::to_string(t) + "\n" + *o;
            }
        }
        result.identities.push_back(std::move(r));
    }
    return result;
}

std::string format_suite_result(const SuiteResult& result)
{
    std::ostringstream out;
    out << "suite " << result.suite << " group " << result.options.group.to_string() << " cap " << result.options.cap
        << " seed " << result.options.seed << " trials " << result.options.trials << '\n';
    for (auto& i : result.identities) {
        out << "identity " << i.name << ' ' << i.passed << '/' << i.trials << ' ' << (i.pass() ? "PASS" : "FAIL")
            << '\n';
        if (!i.pass()) {
            std::istringstream lines(i.counterexample);
            std::string line;
            while (std::getline(lines, line))
                out << "  counterexample: " << line << '\n';
        }
    }
    out << "result " << (result.pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

} // namespace dsh
