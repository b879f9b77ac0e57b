#include "doctest.h"

#include <random>

#include "periplectiq/superlinalg.hpp"

using namespace periplectiq;

namespace {

// n=2 elementary matrix E_ab on V (4x4), declared parity p(a)+p(b)
SuperMatrix elementary(int n, int a, int b) {
    SuperMatrix m(2 * n, 2 * n, (index_parity(a) + index_parity(b)) & 1);
    m.add_entry(index_position(a, n), index_position(b, n), RatFunc::one());
    return m;
}

SuperMatrix from_dense(const std::vector<std::vector<const char*>>& rows) {
    SuperMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.add_entry(static_cast<int>(r), static_cast<int>(c), parse_ratfunc(rows[r][c]));
    return m;
}

} // namespace

TEST_CASE("canonical basis order and index math") {
    TensorShape s{2, 2};
    CHECK(s.dim() == 16);
    // u_{-2} is first, u_2 last
    CHECK(index_position(-2, 2) == 0);
    CHECK(index_position(-1, 2) == 1);
    CHECK(index_position(1, 2) == 2);
    CHECK(index_position(2, 2) == 3);
    CHECK(s.encode({-2, -2}) == 0);
    CHECK(s.encode({2, 2}) == 15);
    CHECK(s.decode(s.encode({1, -2})) == std::vector<int>{1, -2});
}

TEST_CASE("matmul, scaling, elementary calculus") {
    const SuperMatrix a = from_dense({{"q", "1"}, {"0", "q^-1"}});
    CHECK(SuperMatrix::identity(2) * a == a);
    CHECK(a.scaled(RatFunc::zero()).is_zero());
    // E_12 E_21 = E_11 for n=2 elementary matrices
    CHECK(elementary(2, 1, 2) * elementary(2, 2, 1) == elementary(2, 1, 1));
    CHECK((elementary(2, 1, 2) * elementary(2, 2, 1)).parity() == 0);
    CHECK((elementary(2, -1, 2) * elementary(2, 2, 1)).parity() == 1);
    CHECK_THROWS_AS(from_dense({{"1", "0"}}) * from_dense({{"1", "0"}}), ShapeError);
}

TEST_CASE("nullspace on the worked examples") {
    CHECK(nullspace_rows(SuperMatrix(2, 2, 0)).size() == 2);
    CHECK(nullspace_rows(SuperMatrix::identity(3)).empty());
    const SuperMatrix a = from_dense({{"1", "q"}});
    const auto basis = nullspace_rows(a);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0) == parse_ratfunc("-q"));
    CHECK(basis[0].at(1) == RatFunc::one());
}

TEST_CASE("rank and spans") {
    CHECK(rank_of(SuperMatrix::identity(4)) == 4);
    SparseVec v{{0, parse_ratfunc("q")}, {2, parse_ratfunc("q^2 - 1")}};
    SparseVec v2{{0, parse_ratfunc("2q")}, {2, parse_ratfunc("2q^2 - 2")}};
    const auto basis = span_union({v, v2}, 3);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0) == RatFunc::one()); // pivot normalized
    const auto b = rref_rows({v}, 3);
    CHECK(span_contains(b, v2));
    SparseVec w{{1, RatFunc::one()}};
    CHECK_FALSE(span_contains(b, w));
}

TEST_CASE("rank + nullity = cols and exact kernels on random sparse matrices") {
    std::mt19937 rng(7331);
    std::uniform_int_distribution<int> dim(2, 6), fill(0, 3), expo(-2, 2), co(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const int r = dim(rng), c = dim(rng);
        SuperMatrix a(r, c, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (fill(rng) == 0) a.add_entry(i, j, RatFunc::q_power(expo(rng), Rat(co(rng))));
        const int rk = rank_of(a);
        const auto ker = nullspace_rows(a);
        CHECK(rk + static_cast<int>(ker.size()) == c);
        for (const auto& v : ker) CHECK(a.apply(v).empty());
        // pivot-order determinism: repeated runs agree
        CHECK(nullspace_rows(a) == ker);
    }
}

TEST_CASE("place_operator and Koszul signs") {
    const int n = 2;
    const SuperMatrix id = SuperMatrix::identity(2 * n);
    const SuperMatrix odd = elementary(n, 1, -1); // odd: u_{-1} -> u_1
    CHECK(place_operator(odd, 1, 1, id, id) == odd);

    // odd x at position 2 of k=2 picks up the parity of slot 1
    const SuperMatrix placed = place_operator(odd, 2, 2, id, id);
    TensorShape s{n, 2};
    SuperVector in(s);
    in.add_tuple({-1, -1}, RatFunc::one());
    SuperVector out = placed.apply(in);
    REQUIRE(out.coeffs.size() == 1);
    CHECK(out.coeff(s.encode({-1, 1})) == RatFunc(-1L)); // sign -1: p(u_{-1}) = 1

    // even x never picks up a sign
    const SuperMatrix even = elementary(n, 1, 2);
    const SuperMatrix even2 = place_operator(even, 2, 2, id, id);
    SuperVector in2(s);
    in2.add_tuple({-1, 2}, RatFunc::one());
    CHECK(even2.apply(in2).coeff(s.encode({-1, 1})) == RatFunc::one());

    CHECK_THROWS_AS(place_operator(odd, 3, 2, id, id), ShapeError);
}

TEST_CASE("odd operators at disjoint positions anticommute") {
    const int n = 2;
    const SuperMatrix id = SuperMatrix::identity(2 * n);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(1, n);
    for (int trial = 0; trial < 8; ++trial) {
        const SuperMatrix x = elementary(n, pick(rng), -pick(rng));
        const SuperMatrix y = elementary(n, -pick(rng), pick(rng));
        const SuperMatrix a = place_operator(x, 1, 3, id, id);
        const SuperMatrix b = place_operator(y, 3, 3, id, id);
        CHECK(a * b == (b * a).scaled(RatFunc(-1L)));
        // same position composes with added parities
        const SuperMatrix xy = x * y;
        CHECK(place_operator(x, 2, 3, id, id) * place_operator(y, 2, 3, id, id) ==
              place_operator(xy, 2, 3, id, id));
    }
}

TEST_CASE("span_union and contains over tensor vectors") {
    TensorShape s{2, 1};
    SuperVector a(s), b(s), sum(s);
    a.add_tuple({1}, parse_ratfunc("q"));
    b.add_tuple({-1}, RatFunc::one());
    sum.add_tuple({1}, RatFunc::one());
    sum.add_tuple({-1}, parse_ratfunc("q^-1"));
    const auto basis = span_union(std::vector<SuperVector>{a, b, a.scaled(parse_ratfunc("2"))});
    CHECK(basis.size() == 2);
    CHECK(contains(basis, sum));
    SuperVector c(s);
    c.add_tuple({2}, RatFunc::one());
    CHECK_FALSE(contains(basis, c));
}

TEST_CASE("echelon basis closure bookkeeping") {
    EchelonBasis eb(4);
    SparseVec a{{0, RatFunc::one()}, {1, parse_ratfunc("q")}};
    SparseVec b{{1, RatFunc::one()}, {3, parse_ratfunc("q^-1")}};
    CHECK(eb.insert(a));
    CHECK_FALSE(eb.insert(a));
    CHECK(eb.insert(b));
    CHECK(eb.rank() == 2);
    SparseVec combo{{0, parse_ratfunc("q")},
                    {1, parse_ratfunc("q^2 + 1")},
                    {3, parse_ratfunc("q^-1")}};
    CHECK(eb.contains(combo));
    const auto rref = eb.rref();
    CHECK(rref.size() == 2);
    CHECK(rref[0].at(0) == RatFunc::one());
    CHECK(rref[0].find(1) == rref[0].end()); // reduced above pivots
}
