#include "dsh/crossed_product.hpp"

#include "dsh/format.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace dsh {

VElem::VElem(GroupPtr group, int cap) : group_(std::move(group)), cap_(cap)
{
    parts_.reserve(group_->size());
    for (int h = 0; h < group_->size(); ++h)
        parts_.emplace_back(group_, cap_);
}

VElem VElem::one(GroupPtr group, int cap)
{
    VElem v(std::move(group), cap);
    v.add_term(Word{}, 0, 1);
    return v;
}

bool VElem::is_zero() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](const XSeries& p) { return p.is_zero(); });
}

size_t VElem::size() const
{
    size_t n = 0;
    for (auto& p : parts_)
        n += p.size();
    return n;
}

std::vector<std::tuple<Word, int, Rational>> VElem::sorted_terms() const
{
    std::vector<std::tuple<Word, int, Rational>> out;
    for (int h = 0; h < group_->size(); ++h)
        for (auto& [w, c] : parts_[h].sorted_terms())
            out.emplace_back(w, h, c);
    return out;
}

void VElem::check_compatible(const VElem& o) const
{
    detail::check_same(group_, o.group_, cap_, o.cap_);
}

VElem& VElem::operator+=(const VElem& o)
{
    check_compatible(o);
    for (size_t h = 0; h < parts_.size(); ++h)
        parts_[h] += o.parts_[h];
    return *this;
}

VElem& VElem::operator-=(const VElem& o)
{
    check_compatible(o);
    for (size_t h = 0; h < parts_.size(); ++h)
        parts_[h] -= o.parts_[h];
    return *this;
}

VElem& VElem::operator*=(const Rational& s)
{
    for (auto& p : parts_)
        p *= s;
    return *this;
}

VElem operator*(const VElem& a, const VElem& b)
{
    a.check_compatible(b);
    const Group& group = a.group();
    VElem out(a.group_ptr(), a.cap());
    for (int g = 0; g < group.size(); ++g) {
        if (a.parts_[g].is_zero())
            continue;
        for (int h = 0; h < group.size(); ++h) {
            if (b.parts_[h].is_zero())
                continue;
            out.parts_[group.mul(g, h)] += a.parts_[g] * t_action(g, b.parts_[h]);
        }
    }
    return out;
}

bool VElem::operator==(const VElem& o) const
{
    check_compatible(o);
    return parts_ == o.parts_;
}

VElem v_from_x(const XSeries& a)
{
    VElem v(a.group_ptr(), a.cap());
    v.part(0) = a;
    return v;
}

VElem v_grp(const GroupPtr& group, int cap, int g)
{
    VElem v(group, cap);
    v.add_term(Word{}, g, 1);
    return v;
}

VElem v_e0(const GroupPtr& group, int cap)
{
    VElem v(group, cap);
    v.add_term(Word(1, kX0), 0, 1);
    return v;
}

VElem v_e1(const GroupPtr& group, int cap)
{
    VElem v(group, cap);
    v.add_term(x1_word(), 0, -1);
    return v;
}

CanonicalCoords canonical_basis(const VElem& a)
{
    const Group& group = a.group();
    CanonicalCoords out;
    for (int h = 0; h < group.size(); ++h) {
        for (auto& [w, c] : a.part(h).terms()) {
            BasisIndex idx;
            int run = 0, prev = 0;
            for (char letter : w) {
                if (is_x0(letter)) {
                    ++run;
                    continue;
                }
                int cum = letter_group(letter);
                idx.n.push_back(run + 1);
                idx.g.push_back(group.div(cum, prev));
                prev = cum;
                run = 0;
            }
            idx.n.push_back(run + 1);
            idx.g.push_back(group.div(h, prev));
            out[idx] += idx.r() % 2 ? Rational(-c) : c;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

VElem from_canonical_basis(const GroupPtr& group, int cap, const CanonicalCoords& coords)
{
    VElem v(group, cap);
    for (auto& [idx, c] : coords) {
        if (idx.n.empty() || idx.n.size() != idx.g.size())
            throw StructuralError("from_canonical_basis: malformed basis index");
        Word w;
        int cum = 0;
        for (int i = 0; i < idx.r(); ++i) {
            cum = group->mul(cum, idx.g[i]);
            w.append(static_cast<size_t>(idx.n[i] - 1), kX0);
            w += x_letter(cum);
        }
        w.append(static_cast<size_t>(idx.n.back() - 1), kX0);
        v.add_term(w, group->mul(cum, idx.g.back()), idx.r() % 2 ? Rational(-c) : c);
    }
    return v;
}

VElem canonical_basis_element(const GroupPtr& group, int cap, const BasisIndex& index)
{
    VElem e0 = v_e0(group, cap), e1 = v_e1(group, cap);
    VElem out = VElem::one(group, cap);
    for (size_t i = 0; i < index.n.size(); ++i) {
        for (int k = 1; k < index.n[i]; ++k)
            out = out * e0;
        out = out * v_grp(group, cap, index.g[i]);
        if (static_cast<int>(i) < index.r())
            out = out * e1;
    }
    return out;
}

VElem w_to_v(const ZSeries& w)
{
    const Group& group = w.group();
    VElem v(w.group_ptr(), w.cap());
    for (auto& [z, c] : w.terms()) {
        Word x = q_inv_word(group, z);
        int h = x.empty() ? 0 : letter_group(x.back());
        v.add_term(x, h, c);
    }
    return v;
}

namespace {

bool term_in_w(const Word& w, int h)
{
    if (w.empty())
        return h == 0;
    return !is_x0(w.back()) && letter_group(w.back()) == h;
}

} // namespace

bool v_in_w(const VElem& a)
{
    for (int h = 0; h < a.group().size(); ++h)
        for (auto& [w, c] : a.part(h).terms())
            if (!term_in_w(w, h))
                return false;
    return true;
}

ZSeries v_to_w(const VElem& a)
{
    const Group& group = a.group();
    ZSeries out(a.group_ptr(), a.cap());
    for (int h = 0; h < group.size(); ++h) {
        for (auto& [w, c] : a.part(h).terms()) {
            if (!term_in_w(w, h))
                throw InternalError("v_to_w: term " + format_word(group, w, Alphabet::X) + " @ "
                                    + group.label(h) + " lies outside W_G");
            out.add_term(q_word(group, w), c);
        }
    }
    return out;
}

ZSeries m_project(const VElem& a)
{
    const Group& group = a.group();
    ZSeries out(a.group_ptr(), a.cap());
    for (int h = 0; h < group.size(); ++h)
        for (auto& [w, c] : a.part(h).terms())
            if (is_y_word(w))
                out.accumulate(q_word(group, w), c);
    out.prune();
    return out;
}

ZSeries varpi(const YSeries& y) { return retag<ZTag>(y); }
YSeries varpi_inverse(const ZSeries& z) { return retag<YTag>(z); }
ZSeries kappa(const YSeries& quotient) { return varpi(q_Y(quotient)); }
YSeries kappa_inverse(const ZSeries& m) { return q_Y_inv(varpi_inverse(m)); }

ZTensor delta_W(const ZSeries& w)
{
    HarmonicCoproduct<ZTag> delta(w.group_ptr(), w.cap());
    return delta(w);
}

ZTensor delta_M(const ZSeries& m) { return delta_W(m); }

CrossedActions::CrossedActions(const XSeries& psi)
    : aut_(psi),
      psi_v_(v_from_x(psi)),
      psi_inv_v_(v_from_x(aut_.psi_inverse())),
      gamma_inv_(evaluate_at_x1<ZTag>(gamma_of(psi), psi.group_ptr(), psi.cap())),
      gamma_(evaluate_at_x1<ZTag>(uniseries_inv(gamma_of(psi)), psi.group_ptr(), psi.cap()))
{
    GroupPtr group = psi.group_ptr();
    const int cap = psi.cap();
    aut_W1_ = std::make_unique<AlgebraMorphism<ZTag>>(group, cap, Pieces::YLetters, [this, group, cap](const Word& z) {
        return v_to_w(aut_V1(w_to_v(ZSeries::monomial(group, cap, z))));
    });
    gamma_aut_W1_ = std::make_unique<AlgebraMorphism<ZTag>>(
        group, cap, Pieces::YLetters,
        [this](const Word& z) { return gamma_inv_ * aut_W1_->of_word(z) * gamma_; });
    aut_M10_ = std::make_unique<LinearMap<ZTag>>(group, cap, [this, group, cap](const Word& z) {
        return m_project(aut_V10(w_to_v(ZSeries::monomial(group, cap, z))));
    });
    gamma_aut_M10_ = std::make_unique<LinearMap<ZTag>>(
        group, cap, [this](const Word& z) { return gamma_inv_ * aut_M10_->of_word(z); });
}

VElem CrossedActions::aut_V0(const VElem& a)
{
    psi_v_.check_compatible(a);
    VElem out(a.group_ptr(), a.cap());
    for (int h = 0; h < a.group().size(); ++h)
        if (!a.part(h).is_zero())
            out.part(h) = aut_(a.part(h));
    return out;
}

VElem CrossedActions::aut_V1(const VElem& a) { return psi_v_ * aut_V0(a) * psi_inv_v_; }

VElem CrossedActions::aut_V10(const VElem& a) { return psi_v_ * aut_V0(a); }

VElem CrossedActions::gamma_aut_V1(const VElem& a) { return w_to_v(gamma_inv_) * aut_V1(a) * w_to_v(gamma_); }

VElem aut_V0(const XSeries& psi, const VElem& a)
{
    CrossedActions act(psi);
    return act.aut_V0(a);
}

VElem aut_V1(const XSeries& psi, const VElem& a)
{
    CrossedActions act(psi);
    return act.aut_V1(a);
}

VElem aut_V10(const XSeries& psi, const VElem& a)
{
    CrossedActions act(psi);
    return act.aut_V10(a);
}

VElem gamma_aut_V1(const XSeries& psi, const VElem& a)
{
    CrossedActions act(psi);
    return act.gamma_aut_V1(a);
}

ZSeries aut_W1(const XSeries& psi, const ZSeries& w)
{
    CrossedActions act(psi);
    return v_to_w(act.aut_V1(w_to_v(w)));
}

ZSeries gamma_aut_W1(const XSeries& psi, const ZSeries& w)
{
    CrossedActions act(psi);
    return v_to_w(act.gamma_aut_V1(w_to_v(w)));
}

ZSeries aut_M10(const XSeries& psi, const ZSeries& m)
{
    CrossedActions act(psi);
    return m_project(act.aut_V10(w_to_v(m)));
}

ZSeries gamma_aut_M10(const XSeries& psi, const ZSeries& m)
{
    CrossedActions act(psi);
    return act.gamma_inv_z11() * m_project(act.aut_V10(w_to_v(m)));
}

YSeries gamma_aut_Y(const XSeries& psi, const YSeries& y, AutYRoute route)
{
    psi.check_compatible(retag<XTag>(y));
    if (route == AutYRoute::ThroughW) {
        CrossedActions act(psi);
        return varpi_inverse(act.gamma_aut_W1(varpi(y)));
    }
    GroupPtr group = psi.group_ptr();
    const int cap = psi.cap();
    UniSeries gamma = gamma_of(psi);
    XSeries left = evaluate_at_x1<XTag>(gamma, group, cap) * psi;
    XSeries right = series_inverse(psi) * evaluate_at_x1<XTag>(uniseries_inv(gamma), group, cap);
    AlgebraMorphism<YTag> morphism(group, cap, Pieces::YLetters, [&](const Word& piece) {
        int g = letter_group(piece.back());
        XSeries a = mul_word_right(left, piece.substr(0, piece.size() - 1)) * t_action(g, right);
        return q_Y(pi_Y(mul_word_right(a, Word(1, x_letter(g)))));
    });
    return morphism(y);
}

namespace {

template <class F, class G>
ConditionResult check_commutation(const std::string& name, const Group& group, HarmonicCoproduct<ZTag>& delta,
                                  const std::vector<Word>& words, F&& of_word, G&& apply)
{
    ConditionResult c{name, true, ""};
    for (auto& w : words) {
        ZTensor lhs = tensor_square_map(delta.of_word(w), of_word);
        ZTensor rhs = delta(apply(w));
        if (auto diff = first_difference(lhs, rhs)) {
            c.pass = false;
            c.witness = "on " + format_word(group, w, Alphabet::Z) + " (degree " + std::to_string(degree(w))
                        + "): coefficient of " + format_tensor_key(group, diff->first, Alphabet::Z) + " is "
                        + to_string(diff->second.first) + " vs " + to_string(diff->second.second);
            break;
        }
    }
    return c;
}

} // namespace

Verdict stab_W_membership(const XSeries& psi, bool full_word_audit)
{
    require_grouplike(psi, "stab_W_membership");
    const Group& group = psi.group();
    CrossedActions act(psi);
    HarmonicCoproduct<ZTag> delta(psi.group_ptr(), psi.cap());
    std::vector<Word> words;
    if (full_word_audit) {
        words = all_y_words(group, psi.cap());
    } else {
        for (int n = 1; n <= psi.cap(); ++n)
            for (int g = 0; g < group.size(); ++g)
                words.push_back(y_letter_word(n, g));
    }
    Verdict v;
    v.add(check_commutation(
        "commutes with Delta^W", group, delta, words,
        [&](const Word& u) -> const ZSeries& { return act.gamma_aut_W1_of_word(u); },
        [&](const Word& u) { return act.gamma_aut_W1_of_word(u); }));
    return v;
}

Verdict stab_M_membership(const XSeries& psi)
{
    require_grouplike(psi, "stab_M_membership");
    const Group& group = psi.group();
    CrossedActions act(psi);
    HarmonicCoproduct<ZTag> delta(psi.group_ptr(), psi.cap());
    Verdict v;
    v.add(check_commutation(
        "commutes with Delta^M", group, delta, all_y_words(group, psi.cap()),
        [&](const Word& u) -> const ZSeries& { return act.gamma_aut_M10_of_word(u); },
        [&](const Word& u) { return act.gamma_aut_M10_of_word(u); }));
    return v;
}

Verdict stab_alg_membership(const XSeries& psi, AutYRoute route)
{
    require_grouplike(psi, "stab_alg_membership");
    const Group& group = psi.group();
    std::unordered_map<Word, YSeries> memo;
    auto image = [&](const Word& u) -> const YSeries& {
        auto it = memo.find(u);
        if (it == memo.end())
            it = memo.emplace(u, gamma_aut_Y(psi, YSeries::monomial(psi.group_ptr(), psi.cap(), u), route)).first;
        return it->second;
    };
    HarmonicCoproduct<YTag> delta(psi.group_ptr(), psi.cap());
    ConditionResult c{"commutes with Delta^Y", true, ""};
    for (int n = 1; n <= psi.cap() && c.pass; ++n)
        for (int g = 0; g < group.size(); ++g) {
            Word w = y_letter_word(n, g);
            YTensor lhs = tensor_square_map(delta.of_word(w), image);
            YTensor rhs = delta(image(w));
            if (auto diff = first_difference(lhs, rhs)) {
                c.pass = false;
                c.witness = "on " + format_word(group, w, Alphabet::Y) + ": coefficient of "
                            + format_tensor_key(group, diff->first, Alphabet::Y) + " is "
                            + to_string(diff->second.first) + " vs " + to_string(diff->second.second);
                break;
            }
        }
    Verdict v;
    v.add(c);
    return v;
}

} // namespace dsh
