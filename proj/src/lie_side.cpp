#include "dsh/lie_side.hpp"

#include "dsh/format.hpp"

#include <random>

namespace dsh {

void require_primitive(const XSeries& psi, const char* where)
{
    if (!x_is_primitive(psi))
        throw DomainError(std::string(where) + ": argument is not primitive");
}

DPsi::DPsi(const XSeries& psi) : psi_(psi)
{
    GroupPtr group = psi.group_ptr();
    const int cap = psi.cap();
    derivation_ = std::make_unique<Derivation<XTag>>(group, cap, Pieces::Letters, [group, cap, psi](const Word& letter) {
        if (is_x0(letter[0]))
            return XSeries(group, cap);
        return commutator(XSeries::monomial(group, cap, letter), t_action(letter_group(letter[0]), psi));
    });
}

XSeries d_psi(const XSeries& psi, const XSeries& a)
{
    psi.check_compatible(a);
    DPsi d(psi);
    return d(a);
}

XSeries s_psi(const XSeries& psi, const XSeries& a)
{
    psi.check_compatible(a);
    DPsi d(psi);
    return d.s(a);
}

XSeries lie_bracket(const XSeries& a, const XSeries& b)
{
    XSeries r = s_psi(a, b) - s_psi(b, a);
    if (!x_is_primitive(r))
        throw InternalError("lie_bracket: result is not primitive");
    return r;
}

UniSeries gamma_lower(const XSeries& psi)
{
    UniSeries s(psi.cap());
    Word w = x1_word();
    for (int n = 1; n <= psi.cap(); ++n) {
        s.set(n, Rational(n % 2 ? 1 : -1, n) * psi.coeff(w));
        w.insert(w.begin(), kX0);
    }
    return s;
}

UniSeries gamma_twist_lower(const XSeries& psi)
{
    UniSeries s = gamma_lower(psi);
    for (int n = 2; n <= psi.cap(); ++n)
        s.set(n, -s[n]);
    return s;
}

XSeries theta_lie(const XSeries& psi)
{
    XSeries g = evaluate_at_x1<XTag>(gamma_twist_lower(psi), psi.group_ptr(), psi.cap());
    return psi - g - x0_series(psi.group_ptr(), psi.cap()) * psi.coeff(Word(1, kX0));
}

YSeries psi_star_lie(const XSeries& psi)
{
    XSeries g = evaluate_at_x1<XTag>(gamma_twist_lower(psi), psi.group_ptr(), psi.cap());
    return q_Y(pi_Y(psi - g));
}

SYLieOperator::SYLieOperator(const XSeries& psi, bool gamma_twist) : d_(psi), twist_(psi.group_ptr(), psi.cap())
{
    if (gamma_twist)
        twist_ = -evaluate_at_x1<YTag>(gamma_twist_lower(psi), psi.group_ptr(), psi.cap());
    GroupPtr group = psi.group_ptr();
    const int cap = psi.cap();
    map_ = std::make_unique<LinearMap<YTag>>(group, cap, [this, group, cap](const Word& w) {
        Word x = q_inv_word(*group, w);
        YSeries r = q_Y(pi_Y(d_.psi() * XSeries::monomial(group, cap, x) + d_.of_word(x)));
        if (!twist_.is_zero())
            r += twist_ * YSeries::monomial(group, cap, w);
        return r;
    });
}

YSeries s_Y_psi(const XSeries& psi, const YSeries& m)
{
    SYLieOperator op(psi, false);
    return op(m);
}

YSeries gamma_s_Y_lie(const XSeries& psi, const YSeries& m)
{
    SYLieOperator op(psi, true);
    return op(m);
}

namespace {

template <class Tag>
std::string tensor_witness(const Group& group, const Word& on, const std::string& key, const Rational& a,
                           const Rational& b, Alphabet alphabet)
{
    std::string s = "on " + format_word(group, on, alphabet) + " (degree " + std::to_string(degree(on)) + "): ";
    return s + "coefficient of " + format_tensor_key(group, key, alphabet) + " is " + to_string(a) + " vs "
           + to_string(b);
}

// (A (x) id + id (x) A) o Delta = Delta o A on the given words.
template <class Tag, class Delta, class Op>
ConditionResult check_derivation_commutation(const std::string& name, const Group& group, Delta& delta,
                                             const std::vector<Word>& words, Op& op, Alphabet alphabet)
{
    ConditionResult c{name, true, ""};
    for (auto& w : words) {
        Tensor<Tag> lhs = tensor_derivation_map(delta.of_word(w), [&](const Word& u) -> const Series<Tag>& {
            return op(u);
        });
        Tensor<Tag> rhs = delta(op(w));
        if (auto diff = first_difference(lhs, rhs)) {
            c.pass = false;
            c.witness = tensor_witness<Tag>(group, w, diff->first, diff->second.first, diff->second.second, alphabet);
            break;
        }
    }
    return c;
}

std::vector<Word> generator_words(const Group& group, int cap)
{
    std::vector<Word> words;
    for (int n = 1; n <= cap; ++n)
        for (int g = 0; g < group.size(); ++g)
            words.push_back(y_letter_word(n, g));
    return words;
}

} // namespace

Verdict dmr0_lie_membership(const XSeries& psi)
{
    const Group& group = psi.group();
    if (!group.spec().is_cyclic())
        throw UnsupportedError("dmr0_lie_membership: group " + group.spec().to_string() + " is not cyclic");
    require_primitive(psi, "dmr0_lie_membership");
    Verdict v;

    Rational c0 = psi.coeff(Word(1, kX0));
    Rational c1 = psi.coeff(x1_word());
    ConditionResult i{"(i)", c0 == 0 && c1 == 0, ""};
    if (c0 != 0)
        i.witness = coefficient_witness("psi", "x0", c0);
    else if (c1 != 0)
        i.witness = coefficient_witness("psi", "x1", c1);
    v.add(i);

    YSeries star = psi_star_lie(psi);
    auto diff = first_difference(delta_star_mod(star), unit_tensor(star, true) + unit_tensor(star, false));
    ConditionResult ii{"(ii)", !diff, ""};
    if (diff)
        ii.witness = "coefficient of " + format_tensor_key(group, diff->first, Alphabet::Y) + " in Delta*(psi*) is "
                     + to_string(diff->second.first) + ", in psi* (x) 1 + 1 (x) psi* it is "
                     + to_string(diff->second.second);
    v.add(ii);

    // Only these instances of (iii) are not implied by (i) and (ii). The
    // trivial group needs (2, 1) as well: [x0, x1] satisfies (i) and (ii).
    std::vector<std::pair<int, int>> cases;
    if (group.size() <= 2)
        cases.push_back({2, 0});
    else if (group.size() >= 3)
        for (int g = 0; g < group.size(); ++g)
            cases.push_back({1, g});
    ConditionResult iii{"(iii)", true, ""};
    for (auto [n, g] : cases) {
        if (n > psi.cap())
            continue;
        Rational a = star.coeff(y_letter_word(n, g));
        Rational b = star.coeff(y_letter_word(n, group.inv(g)));
        if (n % 2 == 0)
            b = -b;
        if (a != b) {
            iii.pass = false;
            iii.witness = coefficient_witness("psi*", format_word(group, y_letter_word(n, g), Alphabet::Y), a)
                          + " but the mirrored coefficient is " + to_string(b);
            break;
        }
    }
    v.add(iii);
    return v;
}

Verdict stab_mod_lie_membership(const XSeries& psi)
{
    require_primitive(psi, "stab_mod_lie_membership");
    const Group& group = psi.group();
    SYLieOperator op(psi, true);
    HarmonicCoproduct<YTag> delta(psi.group_ptr(), psi.cap());
    auto apply = [&](const Word& u) -> const YSeries& { return op.of_word(u); };
    Verdict v;
    // Both sides vanish on words too heavy to leave room for psi.
    int room = psi.cap() - std::max(psi.min_degree(), 0);
    v.add(check_derivation_commutation<YTag>("commutes with Delta*mod", group, delta, all_y_words(group, room), apply,
                                             Alphabet::Y));
    return v;
}

namespace {

XSeries exp_unchecked(const XSeries& psi)
{
    DPsi d(psi);
    XSeries term = XSeries::one(psi.group_ptr(), psi.cap());
    XSeries result = term;
    for (int k = 1; k <= psi.cap(); ++k) {
        term = d.s(term) * Rational(1, k);
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

} // namespace

XSeries exp_circledast(const XSeries& psi)
{
    require_primitive(psi, "exp_circledast");
    return exp_unchecked(psi);
}

XSeries log_circledast(const XSeries& a)
{
    require_grouplike(a, "log_circledast");
    XSeries phi(a.group_ptr(), a.cap());
    for (int k = 1; k <= a.cap(); ++k)
        phi += (a - exp_unchecked(phi)).homogeneous(k);
    return phi;
}

XSeries cbh(const XSeries& psi, const XSeries& phi)
{
    return log_circledast(circledast(exp_circledast(psi), exp_circledast(phi)));
}

CrossedLieActions::CrossedLieActions(const XSeries& psi)
    : d_(psi),
      psi_v_(v_from_x(psi)),
      gamma_(evaluate_at_x1<ZTag>(gamma_twist_lower(psi), psi.group_ptr(), psi.cap())),
      gamma_v_(w_to_v(gamma_))
{
    GroupPtr group = psi.group_ptr();
    const int cap = psi.cap();
    der_W1_ = std::make_unique<Derivation<ZTag>>(group, cap, Pieces::YLetters, [this, group, cap](const Word& z) {
        return v_to_w(der_V1(w_to_v(ZSeries::monomial(group, cap, z))));
    });
    gamma_der_W1_ = std::make_unique<Derivation<ZTag>>(
        group, cap, Pieces::YLetters,
        [this, group, cap](const Word& z) { return v_to_w(gamma_der_V1(w_to_v(ZSeries::monomial(group, cap, z)))); });
    end_M10_ = std::make_unique<LinearMap<ZTag>>(group, cap, [this, group, cap](const Word& z) {
        return m_project(end_V10(w_to_v(ZSeries::monomial(group, cap, z))));
    });
    gamma_end_M10_ = std::make_unique<LinearMap<ZTag>>(group, cap, [this, group, cap](const Word& z) {
        return end_M10_->of_word(z) - gamma_ * ZSeries::monomial(group, cap, z);
    });
}

VElem CrossedLieActions::der_V0(const VElem& a)
{
    psi_v_.check_compatible(a);
    VElem out(a.group_ptr(), a.cap());
    for (int h = 0; h < a.group().size(); ++h)
        if (!a.part(h).is_zero())
            out.part(h) = d_(a.part(h));
    return out;
}

VElem CrossedLieActions::der_V1(const VElem& a) { return psi_v_ * a - a * psi_v_ + der_V0(a); }

VElem CrossedLieActions::end_V10(const VElem& a) { return psi_v_ * a + der_V0(a); }

VElem CrossedLieActions::gamma_der_V1(const VElem& a) { return a * gamma_v_ - gamma_v_ * a + der_V1(a); }

VElem der_V0(const XSeries& psi, const VElem& a)
{
    CrossedLieActions act(psi);
    return act.der_V0(a);
}

VElem der_V1(const XSeries& psi, const VElem& a)
{
    CrossedLieActions act(psi);
    return act.der_V1(a);
}

VElem end_V10(const XSeries& psi, const VElem& a)
{
    CrossedLieActions act(psi);
    return act.end_V10(a);
}

VElem gamma_der_V1(const XSeries& psi, const VElem& a)
{
    CrossedLieActions act(psi);
    return act.gamma_der_V1(a);
}

ZSeries der_W1(const XSeries& psi, const ZSeries& w)
{
    CrossedLieActions act(psi);
    return v_to_w(act.der_V1(w_to_v(w)));
}

ZSeries gamma_der_W1(const XSeries& psi, const ZSeries& w)
{
    CrossedLieActions act(psi);
    return v_to_w(act.gamma_der_V1(w_to_v(w)));
}

ZSeries end_M10(const XSeries& psi, const ZSeries& m)
{
    CrossedLieActions act(psi);
    return m_project(act.end_V10(w_to_v(m)));
}

ZSeries gamma_end_M10(const XSeries& psi, const ZSeries& m)
{
    CrossedLieActions act(psi);
    return m_project(act.end_V10(w_to_v(m))) - act.gamma_z11() * m;
}

GammaDY::GammaDY(const XSeries& psi, AutYRoute route)
{
    GroupPtr group = psi.group_ptr();
    const int cap = psi.cap();
    if (route == AutYRoute::ThroughW) {
        actions_ = std::make_unique<CrossedLieActions>(psi);
        derivation_ = std::make_unique<Derivation<YTag>>(group, cap, Pieces::YLetters, [this](const Word& piece) {
            return varpi_inverse(actions_->gamma_der_W1_of_word(piece));
        });
        return;
    }
    XSeries gamma_x1 = evaluate_at_x1<XTag>(gamma_twist_lower(psi), group, cap);
    derivation_ = std::make_unique<Derivation<YTag>>(
        group, cap, Pieces::YLetters, [group, cap, psi, gamma_x1](const Word& piece) {
            int g = letter_group(piece.back());
            Word prefix = piece.substr(0, piece.size() - 1);
            XSeries a = mul_word_right(psi, prefix) - mul_word_left(prefix, t_action(g, psi));
            XSeries b = mul_word_left(prefix, t_action(g, gamma_x1)) - mul_word_right(gamma_x1, prefix);
            return q_Y(pi_Y(mul_word_right(a + b, Word(1, x_letter(g)))));
        });
}

YSeries gamma_d_Y(const XSeries& psi, const YSeries& y, AutYRoute route)
{
    psi.check_compatible(retag<XTag>(y));
    GammaDY d(psi, route);
    return d(y);
}

Verdict stab_alg_lie_membership(const XSeries& psi)
{
    require_primitive(psi, "stab_alg_lie_membership");
    const Group& group = psi.group();
    GammaDY d(psi, AutYRoute::Explicit);
    HarmonicCoproduct<YTag> delta(psi.group_ptr(), psi.cap());
    auto apply = [&](const Word& u) -> const YSeries& { return d.of_word(u); };
    Verdict v;
    v.add(check_derivation_commutation<YTag>("commutes with Delta*alg", group, delta,
                                             generator_words(group, psi.cap()), apply, Alphabet::Y));
    return v;
}

Verdict stab_W_lie_membership(const XSeries& psi, int audit_words, std::uint64_t seed)
{
    require_primitive(psi, "stab_W_lie_membership");
    const Group& group = psi.group();
    CrossedLieActions act(psi);
    HarmonicCoproduct<ZTag> delta(psi.group_ptr(), psi.cap());
    auto apply = [&](const Word& u) -> const ZSeries& { return act.gamma_der_W1_of_word(u); };
    Verdict v;
    v.add(check_derivation_commutation<ZTag>("commutes with Delta^W on generators", group, delta,
                                             generator_words(group, psi.cap()), apply, Alphabet::Z));
    if (audit_words > 0) {
        std::vector<Word> all = all_y_words(group, psi.cap());
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        std::vector<Word> sample;
        for (int k = 0; k < audit_words; ++k)
            sample.push_back(all[pick(rng)]);
        v.add(check_derivation_commutation<ZTag>("commutes with Delta^W on audited words", group, delta, sample,
                                                 apply, Alphabet::Z));
    }
    return v;
}

Verdict stab_M_lie_membership(const XSeries& psi)
{
    require_primitive(psi, "stab_M_lie_membership");
    const Group& group = psi.group();
    CrossedLieActions act(psi);
    HarmonicCoproduct<ZTag> delta(psi.group_ptr(), psi.cap());
    auto apply = [&](const Word& u) -> const ZSeries& { return act.gamma_end_M10_of_word(u); };
    Verdict v;
    v.add(check_derivation_commutation<ZTag>("commutes with Delta^M", group, delta, all_y_words(group, psi.cap()),
                                             apply, Alphabet::Z));
    return v;
}

} // namespace dsh
