#include "doctest.h"

#include "periplectiq/natrep.hpp"

using namespace periplectiq;

namespace {

std::vector<int> basis_weight(int a, int n) {
    std::vector<int> w(n, 0);
    w[std::abs(a) - 1] = a > 0 ? 1 : -1;
    return w;
}

SuperMatrix unit(int n, int a, int b, const RatFunc& c) {
    SuperMatrix m(2 * n, 2 * n, (index_parity(a) + index_parity(b)) & 1);
    m.add_entry(index_position(a, n), index_position(b, n), c);
    return m;
}

std::vector<GeneratorLabel> all_dj_labels(int n) {
    std::vector<GeneratorLabel> out;
    for (int i = 1; i < n; ++i) {
        out.push_back(GeneratorLabel::e(i));
        out.push_back(GeneratorLabel::f(i));
        out.push_back(GeneratorLabel::ebar(i));
        out.push_back(GeneratorLabel::fbar(i));
    }
    for (int j = 1; j <= n; ++j) out.push_back(GeneratorLabel::Fbar(j));
    for (int i = 1; i <= n; ++i) out.push_back(GeneratorLabel::qk(i, n));
    return out;
}

} // namespace

TEST_CASE("t_ii action is the stated diagonal") {
    const int n = 2;
    const SuperMatrix t11 = t_matrix(n, 1, 1);
    CHECK(t11.entry(index_position(1, n), index_position(1, n)) == parse_ratfunc("q"));
    CHECK(t11.entry(index_position(-1, n), index_position(-1, n)) == parse_ratfunc("q^-1"));
    CHECK(t11.entry(index_position(2, n), index_position(2, n)) == RatFunc::one());
    CHECK(t11 == t_matrix(n, -1, -1));
}

TEST_CASE("t_{i,-i} and the vanishing patterns") {
    const int n = 2;
    CHECK(t_matrix(n, 1, -1) == unit(n, -1, 1, parse_ratfunc("q - q^-1")));
    CHECK(t_matrix(n, -1, 1).is_zero());
    CHECK(t_matrix(n, 2, 1).is_zero());  // |i| > |j|
    CHECK(t_matrix(n, -2, 1).is_zero());
    CHECK(t_matrix(n, 1, 2).parity() == 0);
    CHECK(t_matrix(n, -1, 2).parity() == 1);
}

TEST_CASE("dictionary rescales land on the classical constants") {
    for (int n = 2; n <= 3; ++n) {
        for (int i = 1; i < n; ++i) {
            CHECK(dj_matrix(n, GeneratorLabel::e(i)) == classical_matrix(n, -i - 1, -i));
            CHECK(dj_matrix(n, GeneratorLabel::f(i)) == classical_matrix(n, i + 1, i));
            CHECK(dj_matrix(n, GeneratorLabel::ebar(i)) ==
                  classical_matrix(n, i + 1, -i).scaled(RatFunc(-1L)));
            CHECK(dj_matrix(n, GeneratorLabel::fbar(i)) ==
                  classical_matrix(n, -i - 1, i).scaled(RatFunc(-1L)));
        }
        for (int j = 1; j <= n; ++j)
            CHECK(dj_matrix(n, GeneratorLabel::Fbar(j)) == unit(n, -j, j, RatFunc(-2L)));
    }
}

TEST_CASE("qh acts by the weight pairing") {
    const int n = 3;
    for (int i = 1; i <= n; ++i) {
        const SuperMatrix m = dj_matrix(n, GeneratorLabel::qk(i, n));
        CHECK(m.entry(index_position(i, n), index_position(i, n)) == parse_ratfunc("q"));
        CHECK(m.entry(index_position(-i, n), index_position(-i, n)) == parse_ratfunc("q^-1"));
    }
    const SuperMatrix m = dj_matrix(n, GeneratorLabel::qh({1, 0, -2}));
    CHECK(m.entry(index_position(1, n), index_position(1, n)) == parse_ratfunc("q"));
    CHECK(m.entry(index_position(2, n), index_position(2, n)) == RatFunc::one());
    CHECK(m.entry(index_position(-3, n), index_position(-3, n)) == parse_ratfunc("q^2"));
}

TEST_CASE("classical matrices") {
    const int n = 3;
    for (int i = 1; i <= n; ++i) CHECK(classical_matrix(n, i, -i).is_zero());
    for (int j = 1; j <= n; ++j)
        CHECK(classical_matrix(n, -j, j) == unit(n, -j, j, RatFunc(2L)));
    for (int i = 1; i <= n; ++i) {
        SuperMatrix ki(2 * n, 2 * n, 0);
        ki.add_entry(index_position(i, n), index_position(i, n), RatFunc::one());
        ki.add_entry(index_position(-i, n), index_position(-i, n), RatFunc(-1L));
        CHECK(classical_matrix(n, i, i) == ki);
    }
    // E_ij = -(-1)^{p(i)(p(j)+1)} E_{-j,-i}
    for (int i : {-3, -1, 2}) {
        for (int j : {-2, 1, 3}) {
            const int sgn = (index_parity(i) * (index_parity(j) + 1)) % 2 ? -1 : 1;
            CHECK(classical_matrix(n, i, j) ==
                  classical_matrix(n, -j, -i).scaled(RatFunc(static_cast<long>(-sgn))));
        }
    }
}

TEST_CASE("theta sign") {
    CHECK(theta_sign(1, 2, 3) == 1);
    CHECK(theta_sign(-1, -2, -3) == -1);
    CHECK(theta_sign(1, -1, 2) == 1);
    CHECK(theta_sign(-1, 1, -2) == -1);
}

TEST_CASE("generator matrices carry their declared parity and degree") {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& g : all_dj_labels(n)) {
            const SuperMatrix m = dj_matrix(n, g);
            const auto deg = g.degree(n);
            CHECK(m.parity() == g.parity());
            for (int c = 0; c < m.cols(); ++c) {
                const int b = position_index(c, n);
                for (const auto& [r, v] : m.col(c)) {
                    const int a = position_index(r, n);
                    // parity difference matches
                    CHECK(((index_parity(a) + index_parity(b)) & 1) == m.parity());
                    // weight difference equals the declared degree
                    std::vector<int> diff = basis_weight(a, n);
                    const auto wb = basis_weight(b, n);
                    for (int t = 0; t < n; ++t) diff[t] -= wb[t];
                    CHECK(diff == deg);
                }
            }
        }
    }
}

TEST_CASE("q = 1 specializations are pole-free") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& g : all_dj_labels(n)) {
            const SuperMatrix m = dj_matrix(n, g);
            for (int c = 0; c < m.cols(); ++c)
                for (const auto& [r, v] : m.col(c)) CHECK_NOTHROW(eval_at_one(v));
        }
}

TEST_CASE("label round trip") {
    for (const char* s : {"e1", "f2", "ebar1", "fbar1", "Fbar3", "qh[1,0,-1]", "t[-1,2]"})
        CHECK(parse_generator(s).str() == s);
}
