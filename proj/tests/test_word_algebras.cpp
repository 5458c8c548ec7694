#include "support.hpp"

#include "dsh/errors.hpp"
#include "dsh/word_algebras.hpp"

#include <set>

using namespace dsh;
using namespace dsh::test;

TEST(XCoproduct, Examples)
{
    auto g = grp("Z2");
    XTensor d = x_coproduct(X(g, 3, {{"1", "x0"}}));
    XTensor expect(g, 3);
    expect.add_term(w(g, "x0"), Word{}, 1);
    expect.add_term(Word{}, w(g, "x0"), 1);
    EXPECT_EQ(d, expect);

    XTensor unit(g, 3);
    unit.add_term(Word{}, Word{}, 1);
    EXPECT_EQ(x_coproduct(XSeries::one(g, 3)), unit);

    XTensor e(g, 3);
    e.add_term(w(g, "x0 x[1]"), Word{}, 1);
    e.add_term(w(g, "x0"), w(g, "x[1]"), 1);
    e.add_term(w(g, "x[1]"), w(g, "x0"), 1);
    e.add_term(Word{}, w(g, "x0 x[1]"), 1);
    EXPECT_EQ(x_coproduct(X(g, 3, {{"1", "x0 x[1]"}})), e);
}

TEST(XCoproduct, GrouplikeAndPrimitive)
{
    auto g = grp("Z2");
    EXPECT_TRUE(x_is_grouplike(XSeries::one(g, 4)));
    EXPECT_TRUE(x_is_grouplike(series_exp(X(g, 4, {{"1", "x0"}}))));
    EXPECT_FALSE(x_is_grouplike(X(g, 4, {{"1", "1"}, {"1", "x0 x[1]"}})));
    EXPECT_TRUE(x_is_primitive(X(g, 4, {{"1", "x[1]"}})));
    EXPECT_TRUE(x_is_primitive(X(g, 4, {{"1", "x0 x[1]"}, {"-1", "x[1] x0"}})));
    EXPECT_FALSE(x_is_primitive(X(g, 4, {{"1", "x0 x[1]"}})));
}

TEST(XCoproduct, ExpOfPrimitiveAndProductsAreGrouplike)
{
    Rng rng(3);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 10; ++t) {
            XSeries lie = random_lie(g, 4, rng, 4);
            EXPECT_TRUE(x_is_primitive(lie));
            XSeries a = series_exp(lie);
            XSeries b = random_grouplike(g, 4, rng, 3);
            EXPECT_TRUE(x_is_grouplike(a));
            EXPECT_TRUE(x_is_grouplike(a * b));
        }
    }
}

TEST(XCoproduct, Cocommutative)
{
    Rng rng(4);
    auto g = grp("Z3");
    for (int t = 0; t < 20; ++t) {
        XSeries a = random_series(g, 4, rng, 6);
        XTensor d = x_coproduct(a), swapped(g, 4);
        for (auto& [lr, c] : d.sorted_terms())
            swapped.add_term(lr.second, lr.first, c);
        EXPECT_EQ(d, swapped);
    }
}

TEST(TAction, Examples)
{
    auto g = grp("Z2");
    XSeries a = X(g, 3, {{"2", "x1 x[1]"}, {"1", "x0"}});
    EXPECT_EQ(t_action(0, a), a);
    EXPECT_EQ(t_action(1, X(g, 3, {{"1", "x1 x[1]"}})), X(g, 3, {{"1", "x[1] x1"}}));
    auto z3 = grp("Z3");
    Rng rng(1);
    XSeries b = random_series(z3, 4, rng, 8);
    EXPECT_EQ(t_action(1, t_action(2, b)), t_action(0, b));
    EXPECT_EQ(t_action(1, t_action(1, b)), t_action(2, b));
}

TEST(TAction, CoproductIntertwinesRandomized)
{
    Rng rng(8);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 20; ++t) {
            XSeries a = random_series(g, 4, rng, 6);
            int h = rng.uniform(0, g->size() - 1);
            XTensor lhs = x_coproduct(t_action(h, a));
            XTensor rhs(g, 4);
            for (auto& [lr, c] : x_coproduct(a).sorted_terms())
                rhs.add_term(t_word(*g, h, lr.first), t_word(*g, h, lr.second), c);
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(QMap, Examples)
{
    auto g = grp("Z3");
    XSeries x0k = X(g, 4, {{"1", "x0 x0 x0"}});
    EXPECT_EQ(q_map(x0k), x0k);
    EXPECT_EQ(q_map(X(g, 4, {{"1", "x[1] x[2]"}})), X(g, 4, {{"1", "x[1] x[1]"}}));
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        XSeries a = random_series(g, 5, rng, 8);
        EXPECT_EQ(q_inv(q_map(a)), a);
        EXPECT_EQ(q_map(q_inv(a)), a);
    }
}

TEST(QMap, PreservesTheIdealOfWordsEndingInX0)
{
    Rng rng(21);
    auto g = grp("Z3");
    for (int t = 0; t < 20; ++t) {
        XSeries a = random_series(g, 5, rng, 8);
        EXPECT_EQ(pi_Y(q_map(a)), q_Y(pi_Y(a)));
        XSeries shifted = q_map(a * X(g, 5, {{"1", "x0"}}));
        for (auto& [word, c] : shifted.terms())
            EXPECT_TRUE(is_x0(word.back()));
    }
}

TEST(PiY, Examples)
{
    auto g = grp("Z2");
    EXPECT_TRUE(pi_Y(X(g, 4, {{"1", "x0"}})).is_zero());
    EXPECT_EQ(pi_Y(X(g, 4, {{"1", "x0 x[1]"}})), Y(g, 4, {{"1", "y2[1]"}}));
    EXPECT_EQ(pi_Y(X(g, 4, {{"1", "x[1] x0 x1"}})), Y(g, 4, {{"1", "y1[1] y2"}}));
    EXPECT_EQ(y_inject(Y(g, 4, {{"1", "y1[1] y2"}})), X(g, 4, {{"1", "x[1] x0 x1"}}));
}

TEST(PiY, SectionRandomized)
{
    Rng rng(9);
    auto g = grp("Z3");
    for (int t = 0; t < 20; ++t) {
        YSeries m = random_y_series(g, 5, rng, 8);
        EXPECT_EQ(pi_Y(y_inject(m)), m);
        XSeries a = y_inject(m);
        EXPECT_EQ(y_inject(pi_Y(a)), a);
    }
}

TEST(QY, Examples)
{
    auto g = grp("Z3");
    YSeries single = Y(g, 4, {{"1", "y2[2]"}});
    EXPECT_EQ(q_Y(single), single);
    EXPECT_EQ(q_Y(Y(g, 4, {{"1", "y1[1] y1[2]"}})), Y(g, 4, {{"1", "y1[1] y1[1]"}}));
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        YSeries m = random_y_series(g, 5, rng, 8);
        EXPECT_EQ(q_Y_inv(q_Y(m)), m);
    }
}

TEST(HarmonicCoproduct, Examples)
{
    auto g = grp("Z2");
    YTensor d1 = y_harmonic_coproduct(Y(g, 4, {{"1", "y1[1]"}}));
    YTensor e1(g, 4);
    e1.add_term(w(g, "y1[1]", Alphabet::Y), Word{}, 1);
    e1.add_term(Word{}, w(g, "y1[1]", Alphabet::Y), 1);
    EXPECT_EQ(d1, e1);

    YTensor d2 = y_harmonic_coproduct(Y(g, 4, {{"1", "y2[1]"}}));
    YTensor e2(g, 4);
    e2.add_term(w(g, "y2[1]", Alphabet::Y), Word{}, 1);
    e2.add_term(Word{}, w(g, "y2[1]", Alphabet::Y), 1);
    e2.add_term(w(g, "y1", Alphabet::Y), w(g, "y1[1]", Alphabet::Y), 1);
    e2.add_term(w(g, "y1[1]", Alphabet::Y), w(g, "y1", Alphabet::Y), 1);
    EXPECT_EQ(d2, e2);

    YTensor prod = y_harmonic_coproduct(Y(g, 4, {{"1", "y1[1]"}})) * y_harmonic_coproduct(Y(g, 4, {{"1", "y1"}}));
    EXPECT_EQ(y_harmonic_coproduct(Y(g, 4, {{"1", "y1[1] y1"}})), prod);
    EXPECT_EQ(delta_star_mod(Y(g, 4, {{"1", "y2[1]"}})), e2);
}

// The generator formula printed with y_{n-k,hg^{-1}} is not symmetric under
// swapping tensor factors once G has an element of order 3.
TEST(HarmonicCoproduct, PrintedIndexConventionIsNotCocommutativeForZ3)
{
    Group g(GroupSpec::parse("Z3"));
    const int a = 1;
    std::set<std::pair<int, int>> printed;
    for (int h = 0; h < g.size(); ++h)
        printed.insert({h, g.div(h, a)});
    std::set<std::pair<int, int>> swapped;
    for (auto [l, r] : printed)
        swapped.insert({r, l});
    EXPECT_NE(printed, swapped);

    // The implemented convention y_{k,h} (x) y_{n-k,h^{-1}g} is symmetric.
    auto gp = grp("Z3");
    YTensor d = y_harmonic_coproduct(Y(gp, 4, {{"1", "y2[1]"}}));
    YTensor s(gp, 4);
    for (auto& [lr, c] : d.sorted_terms())
        s.add_term(lr.second, lr.first, c);
    EXPECT_EQ(d, s);
}

TEST(HarmonicProduct, Examples)
{
    auto g = grp("trivial");
    YSeries a = Y(g, 4, {{"2", "y1 y2"}, {"1", "y3"}});
    EXPECT_EQ(harmonic_product(YSeries::one(g, 4), a), a);
    EXPECT_EQ(harmonic_product(Y(g, 4, {{"1", "y2"}}), Y(g, 4, {{"1", "y1"}})),
              Y(g, 4, {{"1", "y2 y1"}, {"1", "y1 y2"}, {"1", "y3"}}));
}

TEST(HarmonicProduct, CommutativeAndAssociativeRandomized)
{
    Rng rng(14);
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        for (int t = 0; t < 20; ++t) {
            YSeries a = random_y_series(g, 5, rng, 3), b = random_y_series(g, 5, rng, 3),
                    c = random_y_series(g, 5, rng, 3);
            EXPECT_EQ(harmonic_product(a, b), harmonic_product(b, a));
            EXPECT_EQ(harmonic_product(harmonic_product(a, b), c), harmonic_product(a, harmonic_product(b, c)));
        }
    }
}

TEST(ShuffleProduct, Examples)
{
    auto g = grp("Z2");
    XSeries a = X(g, 3, {{"1", "x0"}, {"3", "x[1] x1"}});
    EXPECT_EQ(shuffle_product(X(g, 3, {{"1", "x0"}}), X(g, 3, {{"1", "x[1]"}})),
              X(g, 3, {{"1", "x0 x[1]"}, {"1", "x[1] x0"}}));
    EXPECT_EQ(shuffle_product(XSeries::one(g, 3), a), a);
}

// Exhaustive duality at degree <= 4: the coefficient of u (x) v in the
// coproduct of w equals the coefficient of w in the product of u and v.
template <class Product, class Coproduct, class Tag>
void check_duality(const GroupPtr& g, const std::vector<Word>& words, Product product, Coproduct coproduct)
{
    const int cap = 4;
    std::vector<decltype(coproduct(Series<Tag>::monomial(g, cap, Word{})))> co;
    for (auto& wd : words)
        co.push_back(coproduct(Series<Tag>::monomial(g, cap, wd)));
    for (auto& u : words)
        for (auto& v : words) {
            if (degree(u) + degree(v) > cap)
                continue;
            auto p = product(Series<Tag>::monomial(g, cap, u), Series<Tag>::monomial(g, cap, v));
            for (size_t i = 0; i < words.size(); ++i)
                if (degree(words[i]) == degree(u) + degree(v))
                    ASSERT_EQ(p.coeff(words[i]), co[i].coeff(u, v));
        }
}

TEST(Duality, ShuffleAgainstCoproduct)
{
    for (const char* spec : {"trivial", "Z2"}) {
        auto g = grp(spec);
        check_duality<decltype(&shuffle_product), decltype(&x_coproduct), XTag>(g, all_x_words(*g, 4),
                                                                             &shuffle_product, &x_coproduct);
    }
}

TEST(Duality, HarmonicAgainstHarmonicCoproduct)
{
    for (const char* spec : kGroups) {
        auto g = grp(spec);
        check_duality<decltype(&harmonic_product), decltype(&y_harmonic_coproduct), YTag>(
            g, all_y_words(*g, 4), &harmonic_product, &y_harmonic_coproduct);
    }
}

TEST(Pairing, Examples)
{
    auto g = grp("Z2");
    EXPECT_EQ(pairing(X(g, 3, {{"1", "x0"}}), X(g, 3, {{"1", "x0"}})), 1);
    EXPECT_EQ(pairing(X(g, 3, {{"1", "1"}, {"2", "x0 x[1]"}}), X(g, 3, {{"1", "x0 x[1]"}})), 2);
}

TEST(Series, CapMismatchIsAnError)
{
    auto g = grp("Z2");
    EXPECT_THROW(XSeries::one(g, 3) * XSeries::one(g, 4), StructuralError);
    EXPECT_THROW(XSeries::one(g, 3) + XSeries::one(grp("Z3"), 3), StructuralError);
    EXPECT_EQ(X(g, 2, {{"1", "1"}, {"1", "x0"}}) * X(g, 2, {{"1", "1"}, {"-1", "x0"}}),
              X(g, 2, {{"1", "1"}, {"-1", "x0 x0"}}));
}

TEST(Words, Enumeration)
{
    auto g = grp("Z3");
    EXPECT_EQ(all_x_words(*g, 3).size(), 1u + 4 + 16 + 64);
    EXPECT_EQ(all_y_words(*g, 3).size(), 1u + 3 + 12 + 48);
    EXPECT_THROW(y_letters(w(g, "x[1] x0")), DomainError);
}
