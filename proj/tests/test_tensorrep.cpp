#include "doctest.h"

#include "periplectiq/tensorrep.hpp"

using namespace periplectiq;

namespace {

RatFunc half_eps() {
    return (RatFunc::q_power(1) - RatFunc::q_power(-1)) * RatFunc(Rat(1, 2));
}

// dictionary rescale of a t-coproduct matrix onto the DJ label g
SuperMatrix rescaled_t_action(int n, int k, const GeneratorLabel& g) {
    const RatFunc eps = RatFunc::q_power(1) - RatFunc::q_power(-1);
    switch (g.kind) {
        case GenKind::E: return tij_coproduct_action(n, k, -g.i, -g.i - 1).scaled(-eps.inv());
        case GenKind::F: return tij_coproduct_action(n, k, g.i, g.i + 1).scaled(eps.inv());
        case GenKind::EBar: return tij_coproduct_action(n, k, -g.i, g.i + 1).scaled(eps.inv());
        case GenKind::FBar: return tij_coproduct_action(n, k, g.i, -g.i - 1).scaled(-eps.inv());
        case GenKind::FFBar:
            return tij_coproduct_action(n, k, g.i, -g.i).scaled(RatFunc(-2L) * eps.inv());
        default: throw std::logic_error("not a rescalable label");
    }
}

} // namespace

TEST_CASE("qh coproduct is the diagonal product") {
    for (int n = 2; n <= 3; ++n) {
        TensorModule m(n, 2);
        for (int i = 1; i <= n; ++i) {
            const auto g = GeneratorLabel::qk(i, n);
            const SuperMatrix a = dj_matrix(n, g);
            CHECK(coproduct_action(n, 2, g) == super_kron({&a, &a}, n));
        }
    }
}

TEST_CASE("ebar on tensor powers equals the signed placement sum") {
    const int n = 2, i = 1;
    for (int k = 1; k <= 3; ++k) {
        const SuperMatrix x = dj_matrix(n, GeneratorLabel::ebar(i));
        const SuperMatrix l = dj_matrix(n, GeneratorLabel::qk(i, n));
        const SuperMatrix r = dj_matrix(n, GeneratorLabel::qk(i + 1, n));
        SuperMatrix sum(x.rows(), x.cols(), 1);
        TensorShape s{n, k};
        sum = SuperMatrix(s.dim(), s.dim(), 1);
        for (int a = 1; a <= k; ++a) sum = sum + place_operator(x, a, k, l, r);
        CHECK(coproduct_action(n, k, GeneratorLabel::ebar(i)) == sum);
    }
}

TEST_CASE("e_i on V⊗2 is the three-term coproduct") {
    const int n = 2, i = 1;
    const SuperMatrix e = dj_matrix(n, GeneratorLabel::e(i));
    const SuperMatrix eb = dj_matrix(n, GeneratorLabel::ebar(i));
    const SuperMatrix Fb = dj_matrix(n, GeneratorLabel::Fbar(i + 1));
    const SuperMatrix qi = dj_matrix(n, GeneratorLabel::qk(i, n));
    const SuperMatrix qi1 = dj_matrix(n, GeneratorLabel::qk(i + 1, n));
    const SuperMatrix expected = super_kron({&qi, &e}, n) + super_kron({&e, &qi1}, n) +
                                 super_kron({&eb, &Fb}, n).scaled(-half_eps());
    CHECK(coproduct_action(n, 2, GeneratorLabel::e(i)) == expected);
}

TEST_CASE("t_ij coproduct: counit case and diagonal survival") {
    const int n = 2;
    CHECK(tij_coproduct_action(n, 1, 1, 2) == t_matrix(n, 1, 2));
    const SuperMatrix t11 = t_matrix(n, 1, 1);
    CHECK(tij_coproduct_action(n, 2, 1, 1) == super_kron({&t11, &t11}, n));
}

TEST_CASE("DJ coproduct equals the rescaled t_ij coproduct (dictionary consistency)") {
    for (int n = 2; n <= 3; ++n) {
        for (int k = 2; k <= 3; ++k) {
            for (int i = 1; i < n; ++i) {
                for (auto g : {GeneratorLabel::e(i), GeneratorLabel::f(i),
                               GeneratorLabel::ebar(i), GeneratorLabel::fbar(i)})
                    CHECK(coproduct_action(n, k, g) == rescaled_t_action(n, k, g));
            }
            for (int j = 1; j <= n; ++j)
                CHECK(coproduct_action(n, k, GeneratorLabel::Fbar(j)) ==
                      rescaled_t_action(n, k, GeneratorLabel::Fbar(j)));
        }
    }
}

TEST_CASE("the as-printed Delta(f_i) tail disagrees with the t_ij coproduct") {
    // documents the corrected reading Fbar_i ⊗ ebar_i (vs printed ebar_{i+1})
    const int n = 3, k = 2, i = 1;
    const SuperMatrix f = dj_matrix(n, GeneratorLabel::f(i));
    const SuperMatrix Fb = dj_matrix(n, GeneratorLabel::Fbar(i));
    const SuperMatrix eb1 = dj_matrix(n, GeneratorLabel::ebar(i + 1));
    const SuperMatrix qi = dj_matrix(n, GeneratorLabel::qk(i, n));
    const SuperMatrix qi1 = dj_matrix(n, GeneratorLabel::qk(i + 1, n));
    const SuperMatrix printed = super_kron({&qi, &f}, n) + super_kron({&f, &qi1}, n) +
                                super_kron({&Fb, &eb1}, n).scaled(half_eps());
    CHECK(printed != rescaled_t_action(n, k, GeneratorLabel::f(i)));
    CHECK(coproduct_action(n, k, GeneratorLabel::f(i)) ==
          rescaled_t_action(n, k, GeneratorLabel::f(i)));
}

TEST_CASE("coassociativity at the matrix level, k = 3") {
    for (int n = 2; n <= 3; ++n) {
        TensorModule m(n, 1); // label list source
        for (const auto& g : m.labels())
            CHECK(coproduct_action(n, 3, g) == coproduct_action_right(n, 3, g));
    }
}

TEST_CASE("grading: generator matrices shift weight by their degree") {
    for (int n = 2; n <= 3; ++n) {
        TensorModule m(n, 2);
        for (const auto& g : m.labels()) {
            const auto deg = g.degree(n);
            const SuperMatrix& a = m.action(g);
            for (int c = 0; c < a.cols(); ++c) {
                const Weight wc = m.weight_of_index(c);
                for (const auto& [r, v] : a.col(c)) {
                    Weight wr = m.weight_of_index(r);
                    for (int t = 0; t < n; ++t) wr[t] -= wc[t];
                    CHECK(wr == deg);
                }
            }
        }
    }
}

TEST_CASE("qh matrices commute and act by q^mu(h) on weight spaces") {
    TensorModule m(2, 2);
    const auto a = m.qh_action({1, 0});
    const auto b = m.qh_action({-1, 2});
    CHECK(a * b == b * a);
    CHECK(a * b == m.qh_action({0, 2}));
    for (const auto& [w, idxs] : m.weight_spaces()) {
        for (int idx : idxs) {
            CHECK(b.entry(idx, idx) == RatFunc::q_power(weight_pair(w, {-1, 2})));
        }
    }
    // validates weight(u_a) = sgn(a) eps_|a| against the t_ii diagonal
    TensorModule m1(2, 1);
    for (int i = 1; i <= 2; ++i)
        CHECK(m1.qh_action(GeneratorLabel::qk(i, 2).h) == t_matrix(2, i, i));
}

TEST_CASE("weight multiplicities") {
    TensorModule m1(2, 1);
    CHECK(m1.character().size() == 4);
    for (const auto& [w, mult] : m1.character()) CHECK(mult == 1);

    TensorModule m2(2, 2);
    const auto ch = m2.character();
    CHECK(ch.at(Weight{0, 0}) == 4);
    int total = 0;
    for (const auto& [w, mult] : ch) total += mult;
    CHECK(total == 16);
    CHECK(character_json(m1) ==
          "[{\"weight\":[-1,0],\"multiplicity\":1},{\"weight\":[0,-1],\"multiplicity\":1},"
          "{\"weight\":[0,1],\"multiplicity\":1},{\"weight\":[1,0],\"multiplicity\":1}]");
}

TEST_CASE("dominance order and dominant weights") {
    const Weight lam{2, 1, 0};
    CHECK(weight_leq(lam, lam));
    CHECK(weight_leq(Weight{0, 0}, Weight{1, 1})); // difference is gamma_1
    CHECK(weight_leq(Weight{0, 0, 0}, Weight{2, 0, 0}));
    CHECK_FALSE(weight_leq(Weight{1, 1}, Weight{0, 0}));
    CHECK(weight_leq(Weight{0, 1}, Weight{1, 0})); // difference is alpha_1
    CHECK_FALSE(weight_leq(Weight{0, 0}, Weight{1, 0})); // odd coordinate sum
    CHECK(weight_leq(Weight{-1, -1}, Weight{0, 0}));     // beta/gamma direction
    CHECK_FALSE(weight_leq(Weight{1, 0}, Weight{0, 1}));
    CHECK(is_dominant(Weight{1, 0, 0}));
    CHECK(is_dominant(Weight{3, 3, 1}));
    CHECK_FALSE(is_dominant(Weight{0, 1, 0}));
}
