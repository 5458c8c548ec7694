#include "dsh/racinet_group.hpp"

#include "dsh/format.hpp"

namespace dsh {

std::string Verdict::first_failure() const
{
    for (auto& c : conditions)
        if (!c.pass)
            return c.name + ": " + c.witness;
    return {};
}

void require_grouplike(const XSeries& psi, const char* where)
{
    if (!x_is_grouplike(psi))
        throw DomainError(std::string(where) + ": argument is not grouplike");
}

std::string coefficient_witness(const std::string& name, const std::string& word, const Rational& value)
{
    return "(" + name + "|" + word + ") = " + to_string(value);
}

AutPsi::AutPsi(const XSeries& psi) : psi_(psi), psi_inv_(series_inverse(psi))
{
    GroupPtr group = psi.group_ptr();
    const int cap = psi.cap();
    XSeries inv = psi_inv_;
    XSeries fwd = psi_;
    morphism_ = std::make_unique<AlgebraMorphism<XTag>>(
        group, cap, Pieces::Letters, [group, cap, inv, fwd](const Word& letter) {
            XSeries x = XSeries::monomial(group, cap, letter);
            if (is_x0(letter[0]))
                return x;
            int g = letter_group(letter[0]);
            return t_action(g, inv) * x * t_action(g, fwd);
        });
}

XSeries aut_psi(const XSeries& psi, const XSeries& a)
{
    psi.check_compatible(a);
    AutPsi aut(psi);
    return aut(a);
}

XSeries s_big(const XSeries& psi, const XSeries& a)
{
    return psi * aut_psi(psi, a);
}

XSeries circledast(const XSeries& psi, const XSeries& phi)
{
    return s_big(psi, phi);
}

XSeries circledast_inverse(const XSeries& psi)
{
    require_grouplike(psi, "circledast_inverse");
    AutPsi aut(psi);
    // Solve aut_Psi(Phi) = Psi^{-1} degree by degree: aut_Psi(u) = u + (higher
    // degree) for homogeneous u.
    XSeries phi = XSeries::one(psi.group_ptr(), psi.cap());
    for (int k = 1; k <= psi.cap(); ++k)
        phi += (aut.psi_inverse() - aut(phi)).homogeneous(k);
    return phi;
}

UniSeries gamma_of(const XSeries& psi)
{
    UniSeries s(psi.cap());
    Word w = x1_word();
    for (int n = 2; n <= psi.cap(); ++n) {
        w.insert(w.begin(), kX0);
        s.set(n, Rational(n % 2 ? 1 : -1, n) * psi.coeff(w));
    }
    return uniseries_exp(s);
}

XSeries theta_of(const XSeries& psi)
{
    XSeries left = evaluate_at_x1<XTag>(gamma_of(psi), psi.group_ptr(), psi.cap());
    XSeries right = series_exp(x0_series(psi.group_ptr(), psi.cap()) * (-psi.coeff(Word(1, kX0))));
    return left * psi * right;
}

YSeries psi_star(const XSeries& psi)
{
    XSeries left = evaluate_at_x1<XTag>(gamma_of(psi), psi.group_ptr(), psi.cap());
    return q_Y(pi_Y(left * psi));
}

SYOperator::SYOperator(const XSeries& psi, bool gamma_twist)
    : aut_(psi), left_factor_(YSeries::one(psi.group_ptr(), psi.cap()))
{
    if (gamma_twist)
        left_factor_ = evaluate_at_x1<YTag>(gamma_of(psi), psi.group_ptr(), psi.cap());
    map_ = std::make_unique<LinearMap<YTag>>(psi.group_ptr(), psi.cap(), [this](const Word& w) {
        const XSeries& image = aut_.of_word(q_inv_word(aut_.psi().group(), w));
        return left_factor_ * q_Y(pi_Y(aut_.psi() * image));
    });
}

YSeries s_Y(const XSeries& psi, const YSeries& m)
{
    SYOperator op(psi, false);
    return op(m);
}

YSeries gamma_s_Y(const XSeries& psi, const YSeries& m)
{
    SYOperator op(psi, true);
    return op(m);
}

Verdict dmr0_membership(const XSeries& psi)
{
    const Group& group = psi.group();
    if (!group.spec().is_cyclic())
        throw UnsupportedError("dmr0_membership: group " + group.spec().to_string() + " is not cyclic");
    Verdict v;

    bool grouplike = x_is_grouplike(psi);
    v.add({"grouplike", grouplike, grouplike ? "" : "Delta(Psi) != Psi (x) Psi"});

    Rational c0 = psi.coeff(Word(1, kX0));
    Rational c1 = psi.coeff(x1_word());
    ConditionResult i{"(i)", c0 == 0 && c1 == 0, ""};
    if (c0 != 0)
        i.witness = coefficient_witness("Psi", "x0", c0);
    else if (c1 != 0)
        i.witness = coefficient_witness("Psi", "x1", c1);
    v.add(i);

    YSeries star = psi_star(psi);
    auto diff = first_difference(delta_star_mod(star), tensor_product(star, star));
    ConditionResult ii{"(ii)", !diff, ""};
    if (diff)
        ii.witness = "coefficient of " + format_tensor_key(group, diff->first, Alphabet::Y) + " in Delta*(Psi*) is "
                     + to_string(diff->second.first) + ", in Psi* (x) Psi* it is " + to_string(diff->second.second);
    v.add(ii);

    if (group.size() <= 2) {
        Word w{kX0, x_letter(0)};
        Rational c = psi.coeff(w);
        v.add({"(iii)", c == 0, c == 0 ? "" : coefficient_witness("Psi", "x0 x1", c)});
    } else {
        ConditionResult iv{"(iv)", true, ""};
        for (int g = 0; g < group.size() && iv.pass; ++g) {
            Rational a = psi.coeff(Word(1, x_letter(g)));
            Rational b = psi.coeff(Word(1, x_letter(group.inv(g))));
            if (a != b) {
                iv.pass = false;
                iv.witness = coefficient_witness("Psi", format_word(group, Word(1, x_letter(g)), Alphabet::X), a)
                             + " but "
                             + coefficient_witness("Psi", format_word(group, Word(1, x_letter(group.inv(g))), Alphabet::X),
                                                   b);
            }
        }
        v.add(iv);
    }
    return v;
}

Verdict stab_mod_membership(const XSeries& psi)
{
    require_grouplike(psi, "stab_mod_membership");
    const Group& group = psi.group();
    SYOperator op(psi, true);
    HarmonicCoproduct<YTag> delta(psi.group_ptr(), psi.cap());
    Verdict v;
    ConditionResult c{"commutes with Delta*mod", true, ""};
    for (auto& w : all_y_words(group, psi.cap())) {
        YTensor lhs = tensor_square_map(delta.of_word(w), [&](const Word& u) -> const YSeries& { return op.of_word(u); });
        YTensor rhs = delta(op.of_word(w));
        if (auto diff = first_difference(lhs, rhs)) {
            c.pass = false;
            c.witness = "on " + format_word(group, w, Alphabet::Y) + " (degree " + std::to_string(degree(w))
                        + "): coefficient of " + format_tensor_key(group, diff->first, Alphabet::Y) + " is "
                        + to_string(diff->second.first) + " vs " + to_string(diff->second.second);
            break;
        }
    }
    v.add(c);
    return v;
}

} // namespace dsh
