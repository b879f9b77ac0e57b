#include "doctest.h"

#include "periplectiq/qbrauer.hpp"

using namespace periplectiq;

namespace {

RatFunc q() { return RatFunc::q_power(1); }
RatFunc qi() { return RatFunc::q_power(-1); }

SuperVector omega(const BrauerContext& ctx) { // Σ u_i ⊗ u_{-i}
    SuperVector v(ctx.shape());
    for (int i = -ctx.n(); i <= ctx.n(); ++i)
        if (i != 0) v.add_tuple({i, -i}, RatFunc::one());
    return v;
}

} // namespace

TEST_CASE("contraction on u_1 ⊗ u_{-1} gives the invariant vector") {
    for (int n = 2; n <= 3; ++n) {
        BrauerContext ctx(n, 2);
        SuperVector in(ctx.shape());
        in.add_tuple({1, -1}, RatFunc::one());
        CHECK(ctx.c(1).apply(in) == omega(ctx));
        CHECK(rank_of(c_op(n)) == 1);
    }
}

TEST_CASE("Hecke quadratic and braid relations hold exactly") {
    for (int n = 2; n <= 3; ++n) {
        BrauerContext ctx(n, 2);
        const SuperMatrix& t = ctx.t(1);
        CHECK(((t - ctx.id().scaled(q())) * (t + ctx.id().scaled(qi()))).is_zero());
    }
    for (int n = 2; n <= 3; ++n) {
        BrauerContext ctx(n, 3);
        CHECK(ctx.t(1) * ctx.t(2) * ctx.t(1) == ctx.t(2) * ctx.t(1) * ctx.t(2));
        // negative control: a perturbed quadratic does not vanish
        const SuperMatrix& t = ctx.t(1);
        CHECK_FALSE(((t - ctx.id().scaled(q())) * (t + ctx.id().scaled(q()))).is_zero());
    }
}

TEST_CASE("t and c centralize the quantum group action") {
    for (int n = 2; n <= 3; ++n) {
        for (int k = 2; k <= 3; ++k) {
            BrauerContext ctx(n, k);
            TensorModule m(n, k);
            for (int i = 1; i <= k - 1; ++i) {
                for (const auto& g : m.labels()) {
                    const SuperMatrix& a = m.action(g);
                    CHECK((ctx.t(i) * a) == (a * ctx.t(i)));
                    CHECK((ctx.c(i) * a) == (a * ctx.c(i)));
                }
            }
        }
    }
}

TEST_CASE("place_brauer seats the operator on adjacent slots") {
    const int n = 2;
    CHECK(place_brauer(t_op(n), 1, n, 2) == t_op(n));
    BrauerContext ctx(n, 3);
    // t_1 c_2 applied to u_1 ⊗ u_1 ⊗ u_{-1} stays inside V^3 with the expected support
    SuperVector in(ctx.shape());
    in.add_tuple({1, 1, -1}, RatFunc::one());
    const SuperVector out = ctx.c(2).apply(in);
    SuperVector expect(ctx.shape());
    for (int i = -n; i <= n; ++i)
        if (i != 0) expect.add_tuple({1, i, -i}, RatFunc::one());
    CHECK(out == expect);
    CHECK_THROWS_AS(place_brauer(t_op(n), 3, n, 3), ShapeError);
}

TEST_CASE("hecke words: identity, inverses, word independence") {
    BrauerContext ctx(2, 3);
    CHECK(hecke(Permutation::identity(3), ctx) == ctx.id());
    const Permutation s1 = Permutation::transposition(1, 2, 3);
    CHECK(hecke(s1, ctx) * hecke_inverse(s1, ctx) == ctx.id());
    // longest element of S_3 via its two reduced words
    const SuperMatrix w1 = ctx.t(1) * ctx.t(2) * ctx.t(1);
    const SuperMatrix w2 = ctx.t(2) * ctx.t(1) * ctx.t(2);
    Permutation longest;
    longest.img = {3, 2, 1};
    CHECK(hecke(longest, ctx) == w1);
    CHECK(w1 == w2);
    CHECK(longest.length() == 3);
    CHECK(longest.reduced_word().size() == 3);
}

TEST_CASE("q-Young symmetrizers match the k = 2 displays") {
    BrauerContext ctx(2, 2);
    const Symmetrizer row = young_symmetrizer(StandardTableau({{1, 2}}), ctx);
    const Symmetrizer col = young_symmetrizer(StandardTableau({{1}, {2}}), ctx);
    CHECK(row.xi == parse_ratfunc("q^2 + 1"));
    CHECK(col.xi == parse_ratfunc("1 + q^-2"));
    CHECK(row.y == (ctx.id() + ctx.t(1).scaled(q())).scaled(parse_ratfunc("q^2 + 1").inv()));
    CHECK(col.y == (ctx.id() - ctx.t(1).scaled(qi())).scaled(parse_ratfunc("1 + q^-2").inv()));
    CHECK(row.y * row.y == row.y);
    CHECK(col.y * col.y == col.y);
    CHECK((row.y * col.y).is_zero());
    CHECK((col.y * row.y).is_zero());
}

TEST_CASE("q-Young symmetrizers match the k = 3 displays coefficient-for-coefficient") {
    BrauerContext ctx(2, 3);
    const SuperMatrix t1 = ctx.t(1), t2 = ctx.t(2);
    const RatFunc eps = q() - qi();

    // the six Hecke word matrices are linearly independent on V^3, so matrix
    // equality pins every coefficient
    const SuperMatrix words[6] = {ctx.id(), t1, t2, t1 * t2, t2 * t1, t1 * t2 * t1};
    EchelonBasis span(ctx.dim() * ctx.dim());
    for (const auto& w : words) {
        SparseVec flat;
        for (int c = 0; c < w.cols(); ++c)
            for (const auto& [r, v] : w.col(c)) flat[r * w.cols() + c] = v;
        span.insert(flat);
    }
    CHECK(span.rank() == 6);

    const Symmetrizer y123 = young_symmetrizer(StandardTableau({{1, 2, 3}}), ctx);
    CHECK(y123.xi == parse_ratfunc("1 + 2q^2 + 2q^4 + q^6"));
    CHECK(y123.y == (ctx.id() + t1.scaled(q()) + t2.scaled(q()) + (t1 * t2).scaled(q().pow(2)) +
                     (t2 * t1).scaled(q().pow(2)) + (t1 * t2 * t1).scaled(q().pow(3)))
                        .scaled(y123.xi.inv()));

    const Symmetrizer y12_3 = young_symmetrizer(StandardTableau({{1, 2}, {3}}), ctx);
    CHECK(y12_3.xi == parse_ratfunc("q^2 + 1 + q^-2"));
    CHECK(y12_3.y ==
          (ctx.id() + t1.scaled(q()) + t2.scaled(eps) - (t1 * t2) +
           (t2 * t1).scaled(q().pow(2) - RatFunc::one()) - (t1 * t2 * t1).scaled(q()))
              .scaled(y12_3.xi.inv()));

    const Symmetrizer y13_2 = young_symmetrizer(StandardTableau({{1, 3}, {2}}), ctx);
    CHECK(y13_2.xi == parse_ratfunc("q^2 + 1 + q^-2"));
    CHECK(y13_2.y == (ctx.id() - t1.scaled(qi()) - (t2 * t1).scaled(q().pow(2)) +
                      (t1 * t2 * t1).scaled(q()))
                         .scaled(y13_2.xi.inv()));

    const Symmetrizer y1_2_3 = young_symmetrizer(StandardTableau({{1}, {2}, {3}}), ctx);
    CHECK(y1_2_3.xi == parse_ratfunc("1 + 2q^-2 + 2q^-4 + q^-6"));
    CHECK(y1_2_3.y ==
          (ctx.id() - t1.scaled(qi()) - t2.scaled(qi()) + (t1 * t2).scaled(qi().pow(2)) +
           (t2 * t1).scaled(qi().pow(2)) - (t1 * t2 * t1).scaled(qi().pow(3)))
              .scaled(y1_2_3.xi.inv()));

    // idempotents, and the orthogonality the decomposition proof uses
    const SuperMatrix* ys[4] = {&y123.y, &y12_3.y, &y13_2.y, &y1_2_3.y};
    for (int a = 0; a < 4; ++a) {
        CHECK((*ys[a]) * (*ys[a]) == *ys[a]);
        for (int b = 0; b < 4; ++b)
            if (a != b) CHECK(((*ys[a]) * (*ys[b])).is_zero());
    }
}

TEST_CASE("quasi-idempotent eigen relations (rows and columns)") {
    BrauerContext ctx(2, 3);
    const SuperMatrix ep = quasi_idempotent_plus({3}, ctx);
    const SuperMatrix em = quasi_idempotent_minus({1, 1, 1}, ctx);
    for (const auto& rho : {Permutation{{2, 1, 3}}, Permutation{{1, 3, 2}}, Permutation{{3, 2, 1}}}) {
        const SuperMatrix h = hecke(rho, ctx);
        const RatFunc ql = RatFunc::q_power(rho.length());
        CHECK(h * ep == ep.scaled(ql));
        CHECK(ep * h == ep.scaled(ql));
        const RatFunc mql = RatFunc::q_power(-rho.length(), Rat(rho.length() % 2 ? -1 : 1));
        CHECK(h * em == em.scaled(mql));
        CHECK(em * h == em.scaled(mql));
    }
    // mixed shape: W_+ of (2,1) is {e, s_1}
    const SuperMatrix ep21 = quasi_idempotent_plus({2, 1}, ctx);
    CHECK(hecke(Permutation{{2, 1, 3}}, ctx) * ep21 == ep21.scaled(q()));
}

TEST_CASE("contraction conjugates: convention fixed by matching placements") {
    BrauerContext ctx(2, 3);
    CHECK(c_rs(1, 2, ctx) == ctx.c(1));
    CHECK(c_pattern(ContractionPattern({}, 3), ctx) == ctx.id());
    // right-to-left lands exactly on the placement; left-to-right does not
    CHECK(c_rs(2, 3, ctx, ComposeOrder::RightToLeft) == ctx.c(2));
    CHECK(c_rs(2, 3, ctx, ComposeOrder::LeftToRight) != ctx.c(2));
    // module maps: conjugated contractions still centralize the action
    TensorModule m(2, 3);
    const SuperMatrix c13 = c_rs(1, 3, ctx);
    for (const auto& g : m.labels()) CHECK(c13 * m.action(g) == m.action(g) * c13);
    CHECK_THROWS_AS(c_rs(2, 1, ctx), PatternError);
    CHECK_THROWS_AS(ContractionPattern({{1, 2}, {2, 3}}, 3), PatternError);
}

TEST_CASE("maximal candidates for k = 2 reproduce the theta vectors") {
    BrauerContext ctx(2, 2);
    // row tableau, no contraction: u_1 ⊗ u_1
    SuperVector theta1 = maximal_candidate(StandardTableau({{1, 2}}), ContractionPattern({}, 2), ctx);
    SuperVector expect1(ctx.shape());
    expect1.add_tuple({1, 1}, RatFunc::one());
    CHECK(theta1 == expect1);

    // full contraction: Σ u_i ⊗ u_{-i}
    SuperVector theta3 =
        maximal_candidate(StandardTableau(), ContractionPattern({{1, 2}}, 2), ctx);
    CHECK(theta3 == omega(ctx));

    // column tableau: the display times the computed normalization q^{-1}
    SuperVector theta2 = maximal_candidate(StandardTableau({{1}, {2}}), ContractionPattern({}, 2), ctx);
    SuperVector display(ctx.shape());
    const RatFunc denom = (RatFunc::one() + qi() * qi()).inv();
    display.add_tuple({1, 2}, qi() * denom);
    display.add_tuple({2, 1}, -denom);
    CHECK(theta2 == display.scaled(qi()));
}

TEST_CASE("the composite theta_2 of k = 3 is a theorem-form candidate up to q") {
    BrauerContext ctx(3, 3);
    SuperVector w(ctx.shape());
    w.add_tuple({1, 1, -1}, RatFunc::one());
    const SuperVector composite = ctx.t(2).apply(ctx.c(1).apply(ctx.c(2).apply(w)));
    const SuperVector candidate = maximal_candidate(
        StandardTableau(std::vector<std::vector<int>>{{2}}), ContractionPattern({{1, 3}}, 3), ctx);
    CHECK(candidate == composite.scaled(q()));
}

TEST_CASE("candidate enumeration counts") {
    CHECK(theorem_candidates(2, 2).size() == 3);
    CHECK(theorem_candidates(3, 3).size() == 7);
    CHECK(theorem_candidates(2, 3).size() == 6); // (1,1,1) filtered by row count
    CHECK(partitions(4).size() == 5);
    CHECK(standard_tableaux({2, 1}, {1, 2, 3}).size() == 2);
    CHECK(contraction_patterns(4).size() == 1 + 6 + 3);
}

TEST_CASE("tableau and pattern serialization") {
    CHECK(tableau_json(StandardTableau({{1, 2}, {3}})) == "[[1,2],[3]]");
    CHECK(pattern_json(ContractionPattern({{1, 3}}, 3)) == "[[1,3]]");
    CHECK_THROWS_AS(StandardTableau({{2, 1}}), ShapeError);          // row not increasing
    CHECK_THROWS_AS(StandardTableau({{3, 4}, {1, 2}}), ShapeError);  // column not increasing
    CHECK_THROWS_AS(StandardTableau({{1}, {2, 3}}), ShapeError);     // not a partition shape
}
