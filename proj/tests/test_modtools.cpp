#include "doctest.h"

#include "periplectiq/modtools.hpp"

using namespace periplectiq;

namespace {

RatFunc q() { return RatFunc::q_power(1); }

SuperVector omega2(const TensorModule& m) {
    SuperVector v(m.shape());
    for (int i = -m.n(); i <= m.n(); ++i)
        if (i != 0) v.add_tuple({i, -i}, RatFunc::one());
    return v;
}

struct ThetaK2 {
    SuperVector t1, t2, t3;
};

ThetaK2 thetas_k2(const TensorModule& m, const BrauerContext& ctx) {
    ThetaK2 th{SuperVector(m.shape()), SuperVector(m.shape()), SuperVector(m.shape())};
    th.t1.add_tuple({1, 1}, RatFunc::one());
    SuperVector u12(m.shape());
    u12.add_tuple({1, 2}, RatFunc::one());
    th.t2 = young_symmetrizer(StandardTableau({{1}, {2}}), ctx).y.apply(u12);
    th.t3 = omega2(m);
    return th;
}

bool in_span(const Submodule& s, const SparseVec& v) {
    RrefResult r;
    r.rows = s.basis;
    r.pivots = s.pivots;
    return span_contains(r, v);
}

} // namespace

TEST_CASE("maximal vectors of V⊗2: count, spanning, annihilation") {
    for (int n = 2; n <= 3; ++n) {
        TensorModule m(n, 2);
        BrauerContext ctx(n, 2);
        const auto profile = maximal_vectors(whole_space(m));
        const auto th = thetas_k2(m, ctx);
        // every theta is annihilated by all raising operators
        for (const auto* v : {&th.t1, &th.t2, &th.t3})
            for (const auto& g : m.raising_labels()) CHECK(m.action(g).apply(*v).is_zero());
        // thetas lie in the kernel span
        std::vector<SparseVec> kernel_rows;
        for (const auto& p : profile)
            for (const auto& v : p.vectors) kernel_rows.push_back(v);
        const RrefResult kernel = rref_rows(kernel_rows, m.dim());
        for (const auto* v : {&th.t1, &th.t2, &th.t3}) CHECK(span_contains(kernel, v->coeffs));
        if (n == 2) {
            // boundary case n = k: one extra maximal line of weight eps_1 - eps_2
            CHECK(maximal_dimension(profile) == 4);
            SuperVector extra(m.shape());
            extra.add_tuple({1, -2}, RatFunc::one());
            extra.add_tuple({-2, 1}, -q());
            for (const auto& g : m.raising_labels())
                CHECK(m.action(g).apply(extra).is_zero());
            CHECK(span_contains(kernel, extra.coeffs));
        } else {
            CHECK(maximal_dimension(profile) == 3);
        }
    }
}

TEST_CASE("maximal vectors of V⊗3 at n = 3 and the theta membership lists") {
    TensorModule m(3, 3);
    BrauerContext ctx(3, 3);
    const auto profile = maximal_vectors(whole_space(m));
    // boundary case n = k again: the seven theorem vectors plus one extra line
    CHECK(maximal_dimension(profile) == 8);

    // the paper's seven vectors
    SuperVector w11m1(m.shape()), w1m11(m.shape());
    w11m1.add_tuple({1, 1, -1}, RatFunc::one());
    w1m11.add_tuple({1, -1, 1}, RatFunc::one());
    std::vector<SuperVector> theta(8, SuperVector(m.shape()));
    theta[1] = ctx.c(1).apply(w1m11);
    theta[2] = ctx.t(2).apply(ctx.c(1).apply(ctx.c(2).apply(w11m1)));
    theta[3] = ctx.c(2).apply(w11m1);
    SuperVector u111(m.shape()), u112(m.shape()), u121(m.shape()), u123(m.shape());
    u111.add_tuple({1, 1, 1}, RatFunc::one());
    u112.add_tuple({1, 1, 2}, RatFunc::one());
    u121.add_tuple({1, 2, 1}, RatFunc::one());
    u123.add_tuple({1, 2, 3}, RatFunc::one());
    theta[4] = young_symmetrizer(StandardTableau({{1, 2, 3}}), ctx).y.apply(u111);
    theta[5] = young_symmetrizer(StandardTableau({{1, 2}, {3}}), ctx).y.apply(u112);
    theta[6] = young_symmetrizer(StandardTableau({{1, 3}, {2}}), ctx).y.apply(u121);
    theta[7] = young_symmetrizer(StandardTableau({{1}, {2}, {3}}), ctx).y.apply(u123);

    std::vector<SparseVec> kernel_rows;
    for (const auto& p : profile)
        for (const auto& v : p.vectors) kernel_rows.push_back(v);
    const RrefResult kernel = rref_rows(kernel_rows, m.dim());
    EchelonBasis theta_span(m.dim());
    for (int i = 1; i <= 7; ++i) {
        CHECK_FALSE(theta[i].is_zero());
        for (const auto& g : m.raising_labels()) CHECK(m.action(g).apply(theta[i]).is_zero());
        CHECK(span_contains(kernel, theta[i].coeffs));
        CHECK(theta_span.insert(theta[i].coeffs)); // linearly independent
    }

    // membership lists per the decomposition propositions
    const Symmetrizer y123 = young_symmetrizer(StandardTableau({{1, 2, 3}}), ctx);
    const Symmetrizer y12_3 = young_symmetrizer(StandardTableau({{1, 2}, {3}}), ctx);
    const Symmetrizer y13_2 = young_symmetrizer(StandardTableau({{1, 3}, {2}}), ctx);
    const Symmetrizer y1_2_3 = young_symmetrizer(StandardTableau({{1}, {2}, {3}}), ctx);
    const Submodule s123 = image_submodule(m, y123.y, "y[[1,2,3]]V3");
    const Submodule s12_3 = image_submodule(m, y12_3.y, "y[[1,2],[3]]V3");
    const Submodule s13_2 = image_submodule(m, y13_2.y, "y[[1,3],[2]]V3");
    const Submodule s1_2_3 = image_submodule(m, y1_2_3.y, "y[[1],[2],[3]]V3");

    const SuperVector comb123 = theta[1] + theta[2].scaled(q()) + theta[3].scaled(q() * q());
    CHECK(in_span(s123, theta[4].coeffs));
    CHECK(in_span(s123, comb123.coeffs));
    const SuperVector comb12_3 =
        theta[3] - theta[1] - theta[2].scaled(q() - RatFunc::q_power(-1));
    CHECK(in_span(s12_3, theta[5].coeffs));
    CHECK(in_span(s12_3, comb12_3.coeffs));
    const SuperVector comb13_2 = theta[3] - theta[2].scaled(q());
    CHECK(in_span(s13_2, theta[6].coeffs));
    CHECK(in_span(s13_2, comb13_2.coeffs));
    CHECK(in_span(s1_2_3, theta[7].coeffs));
    // cross-membership fails where it should
    CHECK_FALSE(in_span(s123, theta[7].coeffs));
    CHECK_FALSE(in_span(s1_2_3, theta[4].coeffs));
}

TEST_CASE("generated submodules") {
    TensorModule m(2, 2);
    BrauerContext ctx(2, 2);
    const auto th = thetas_k2(m, ctx);
    CHECK(generated_submodule({th.t3.coeffs}, m, "trivial").rank() == 1);
    const Symmetrizer row = young_symmetrizer(StandardTableau({{1, 2}}), ctx);
    const Submodule srow = image_submodule(m, row.y, "yrowV2");
    const Submodule gen = generated_submodule({th.t1.coeffs}, m, "from theta1");
    CHECK(gen.rank() == srow.rank());
    for (const auto& v : gen.basis) CHECK(in_span(srow, v));
    CHECK(generated_submodule({}, m, "zero").rank() == 0);
}

TEST_CASE("invariance checks") {
    TensorModule m(2, 2);
    BrauerContext ctx(2, 2);
    const Symmetrizer row = young_symmetrizer(StandardTableau({{1, 2}}), ctx);
    CHECK(is_invariant(image_submodule(m, row.y, "yrow").basis, m));
    SparseVec u12{{m.shape().encode({1, 2}), RatFunc::one()}};
    CHECK_FALSE(is_invariant({u12}, m)); // f_1 moves u_1 ⊗ u_2 out of the line
    CHECK(is_invariant(whole_space(m).basis, m));
}

TEST_CASE("direct sum certificate for V⊗2") {
    for (int n = 2; n <= 3; ++n) {
        TensorModule m(n, 2);
        BrauerContext ctx(n, 2);
        const Symmetrizer row = young_symmetrizer(StandardTableau({{1, 2}}), ctx);
        const Symmetrizer col = young_symmetrizer(StandardTableau({{1}, {2}}), ctx);
        const auto cert = direct_sum_certificate(
            {{"y[[1,2]]", row.y}, {"y[[1],[2]]", col.y}}, m);
        CHECK(cert.pass);
        CHECK(cert.ranks[0] + cert.ranks[1] == 4 * n * n);
        // a failing certificate names the bad identity
        CHECK_THROWS_AS(direct_sum_certificate({{"a", row.y}, {"b", row.y}}, m),
                        CertificateFailure);
    }
}

TEST_CASE("theta membership in the V⊗2 summands") {
    for (int n = 2; n <= 3; ++n) {
        TensorModule m(n, 2);
        BrauerContext ctx(n, 2);
        const auto th = thetas_k2(m, ctx);
        const Symmetrizer row = young_symmetrizer(StandardTableau({{1, 2}}), ctx);
        const Symmetrizer col = young_symmetrizer(StandardTableau({{1}, {2}}), ctx);
        const Submodule srow = image_submodule(m, row.y, "yrowV2");
        const Submodule scol = image_submodule(m, col.y, "ycolV2");
        CHECK(in_span(srow, th.t1.coeffs));
        CHECK(in_span(srow, th.t3.coeffs));
        CHECK(in_span(scol, th.t2.coeffs));
        CHECK_FALSE(in_span(scol, th.t1.coeffs));
        CHECK_FALSE(in_span(srow, th.t2.coeffs));
        // for n > k the row summand's maximal space is exactly span{theta_1, theta_3}
        // and the column summand's exactly span{theta_2}
        const auto prow = maximal_vectors(srow);
        const auto pcol = maximal_vectors(scol);
        CHECK(maximal_dimension(prow) == 2);
        if (n == 3) {
            CHECK(maximal_dimension(pcol) == 1);
        } else {
            // n = k boundary: the column summand carries the extra line of
            // weight eps_1 - eps_2 next to theta_2
            CHECK(maximal_dimension(pcol) == 2);
            CHECK(pcol.front().weight == Weight{1, -1});
        }
    }
}

TEST_CASE("splitness verdicts for the V⊗2 summands") {
    for (int n = 2; n <= 3; ++n) {
        TensorModule m(n, 2);
        BrauerContext ctx(n, 2);
        const Symmetrizer row = young_symmetrizer(StandardTableau({{1, 2}}), ctx);
        const Symmetrizer col = young_symmetrizer(StandardTableau({{1}, {2}}), ctx);
        const auto rrow = splitness_report(image_submodule(m, row.y, "yrowV2"));
        const auto rcol = splitness_report(image_submodule(m, col.y, "ycolV2"));
        CHECK(rrow.verdict == Verdict::ReducibleIndecomposable);
        CHECK(rcol.verdict == Verdict::ReducibleIndecomposable);
        // the row summand contains the trivial line and is generated by theta_1
        CHECK(rrow.cyclic_ranks.front() == 1);
        CHECK(rrow.cyclic_ranks.back() == rrow.rank);
    }
}

TEST_CASE("k = 3 certificate, verdicts and the scalar identity") {
    const int n = 3;
    TensorModule m(n, 3);
    BrauerContext ctx(n, 3);
    const Symmetrizer y123 = young_symmetrizer(StandardTableau({{1, 2, 3}}), ctx);
    const Symmetrizer y12_3 = young_symmetrizer(StandardTableau({{1, 2}, {3}}), ctx);
    const Symmetrizer y13_2 = young_symmetrizer(StandardTableau({{1, 3}, {2}}), ctx);
    const Symmetrizer y1_2_3 = young_symmetrizer(StandardTableau({{1}, {2}, {3}}), ctx);
    const auto cert = direct_sum_certificate({{"y[[1,2,3]]", y123.y},
                                              {"y[[1,2],[3]]", y12_3.y},
                                              {"y[[1,3],[2]]", y13_2.y},
                                              {"y[[1],[2],[3]]", y1_2_3.y}},
                                             m);
    CHECK(cert.pass);
    CHECK(cert.ranks == std::vector<int>{38, 70, 70, 38});
    CHECK(cert.ranks[1] == cert.ranks[2]); // the isomorphic middle pair

    const auto r1 = splitness_report(image_submodule(m, y123.y, "y[[1,2,3]]V3"));
    const auto r2 = splitness_report(image_submodule(m, y12_3.y, "y[[1,2],[3]]V3"));
    const auto r3 = splitness_report(image_submodule(m, y13_2.y, "y[[1,3],[2]]V3"));
    const auto r4 = splitness_report(image_submodule(m, y1_2_3.y, "y[[1],[2],[3]]V3"));
    CHECK(r1.verdict == Verdict::ReducibleIndecomposable);
    CHECK(r2.verdict == Verdict::Split);
    CHECK(r3.verdict == Verdict::Split);
    CHECK(r4.verdict == Verdict::ReducibleIndecomposable);
    CHECK(r2.maximal_profile == r3.maximal_profile); // matching profiles
    // the split summands break into highest weights 2eps_1+eps_2 and eps_1
    CHECK(r2.maximal_profile ==
          std::vector<std::pair<Weight, int>>{{Weight{1, 0, 0}, 1}, {Weight{2, 1, 0}, 1}});

    // c_2 y_{12,3} c_2 = (q^-2 / (q^2 + 1 + q^-2)) c_2
    const RatFunc coef = RatFunc::q_power(-2) * parse_ratfunc("q^2 + 1 + q^-2").inv();
    CHECK(ctx.c(2) * y12_3.y * ctx.c(2) == ctx.c(2).scaled(coef));

    // K = c_1 c_2 + q t_2 c_1 c_2 + q^2 c_2: fixed by y_123, and its image is
    // the cyclic module of theta_1 + q theta_2 + q^2 theta_3
    const SuperMatrix K = ctx.c(1) * ctx.c(2) + (ctx.t(2) * ctx.c(1) * ctx.c(2)).scaled(q()) +
                          ctx.c(2).scaled(q() * q());
    CHECK(y123.y * K == K);
    CHECK(rank_of(K) == 2 * n);
    SuperVector w11m1(m.shape());
    w11m1.add_tuple({1, 1, -1}, RatFunc::one());
    const SuperVector comb = K.apply(w11m1);
    const Submodule KV = image_submodule(m, K, "KV3");
    const Submodule cyc = generated_submodule({comb.coeffs}, m, "U.comb");
    CHECK(KV.rank() == cyc.rank());
    for (const auto& v : cyc.basis) CHECK(in_span(KV, v));
}

TEST_CASE("contraction reduction transfers the k-2 analysis") {
    const auto rep = contraction_reduction(2, 4);
    CHECK(rep.image_rank == 16);
    CHECK(rep.rank_matches);
    CHECK(rep.image_invariant);
    CHECK(rep.intertwines);
    CHECK(rep.image_is_omega_tensor);
    CHECK(rep.pass);
}
