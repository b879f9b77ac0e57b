#pragma once

// The centralizer side of V^(⊗k): the contraction operator c and the braiding
// operator t on V^(⊗2), their placements c_i / t_i, Hecke elements h(σ),
// q-Young symmetrizers, contraction patterns and maximal-vector candidates.

#include <utility>
#include <vector>

#include "periplectiq/tensorrep.hpp"

namespace periplectiq {

enum class ComposeOrder { RightToLeft, LeftToRight };

struct Permutation {
    std::vector<int> img; // img[x-1] = sigma(x), values 1..k

    static Permutation identity(int k);
    static Permutation transposition(int a, int b, int k);
    int size() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x - 1]; }
    bool is_identity() const;
    Permutation inverse() const;
    int length() const; // inversion count
    /// Canonical reduced word via adjacent-transposition sorting.
    std::vector<int> reduced_word() const;
    bool operator==(const Permutation& o) const { return img == o.img; }
};

/// RightToLeft: (a ∘ b)(x) = a(b(x)), b applied first.
Permutation compose(const Permutation& a, const Permutation& b, ComposeOrder order);

struct StandardTableau {
    std::vector<std::vector<int>> rows;

    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> r);

    int size() const;
    bool empty() const { return rows.empty(); }
    std::vector<int> shape() const;
    std::vector<int> entries() const; // sorted
    int row_of(int entry) const;      // 1-based row index

    /// Row-filling T_+ and column-filling T_- of a shape, entries 1..m.
    static StandardTableau t_plus(const std::vector<int>& shape);
    static StandardTableau t_minus(const std::vector<int>& shape);
};

/// Pairs (r_m, s_m) with r_m < s_m and all 2j indices distinct; the empty
/// pattern is the identity contraction.
struct ContractionPattern {
    std::vector<std::pair<int, int>> pairs;

    ContractionPattern() = default;
    explicit ContractionPattern(std::vector<std::pair<int, int>> p, int k);
    std::vector<int> contracted() const; // sorted
};

SuperMatrix t_op(int n); // on V^(⊗2)
SuperMatrix c_op(int n); // on V^(⊗2), the contraction

/// op2 (an even operator on V^(⊗2)) applied to slots (i, i+1) of V^(⊗k).
SuperMatrix place_brauer(const SuperMatrix& op2, int i, int n, int k);

/// Caches the placements t_i, c_i on V^(⊗k).
class BrauerContext {
public:
    BrauerContext(int n, int k);
    int n() const { return n_; }
    int k() const { return k_; }
    const TensorShape& shape() const { return shape_; }
    int dim() const { return shape_.dim(); }
    const SuperMatrix& t(int i) const; // 1 <= i <= k-1
    const SuperMatrix& c(int i) const;
    const SuperMatrix& id() const { return id_; }

private:
    int n_, k_;
    TensorShape shape_;
    SuperMatrix id_;
    std::vector<SuperMatrix> t_, c_;
};

SuperMatrix hecke(const Permutation& sigma, const BrauerContext& ctx);
/// Factorwise inverse via h(s_i)^{-1} = h(s_i) - (q - q^{-1})·id.
SuperMatrix hecke_inverse(const Permutation& sigma, const BrauerContext& ctx);

/// e_+ / e_- of a shape: sums over the row group of T_+ (resp. column group
/// of T_-) weighted by q^l (resp. (-q)^(-l)).
SuperMatrix quasi_idempotent_plus(const std::vector<int>& shape, const BrauerContext& ctx);
SuperMatrix quasi_idempotent_minus(const std::vector<int>& shape, const BrauerContext& ctx);

/// The groups the quasi-idempotents sum over, embedded in S_k.
std::vector<Permutation> plus_group(const std::vector<int>& shape, int k);
std::vector<Permutation> minus_group(const std::vector<int>& shape, int k);

struct Symmetrizer {
    SuperMatrix x;
    RatFunc xi;
    SuperMatrix y; // x / xi, an idempotent
};

/// x_T = h(σ_-) e_- h(σ_-)^{-1} h(σ_+) e_+ h(σ_+)^{-1} and the scalar xi with
/// x_T^2 = xi·x_T; throws SymmetrizerDegenerate when x = 0 or xi = 0.
Symmetrizer young_symmetrizer(const StandardTableau& T, const BrauerContext& ctx);

SuperMatrix c_rs(int r, int s, const BrauerContext& ctx,
                 ComposeOrder order = ComposeOrder::RightToLeft);
SuperMatrix c_pattern(const ContractionPattern& p, const BrauerContext& ctx,
                      ComposeOrder order = ComposeOrder::RightToLeft);

/// The simple tensor w_{tau, r, s}: u_1 on r-slots, u_{-1} on s-slots, u_j on
/// complement slots sitting in row j of tau.
SuperVector pattern_tensor(const StandardTableau& tau, const ContractionPattern& p,
                           const BrauerContext& ctx);

/// y_tau · c_pattern · w, the maximal-vector candidate of the theorem.
SuperVector maximal_candidate(const StandardTableau& tau, const ContractionPattern& p,
                              const BrauerContext& ctx,
                              ComposeOrder order = ComposeOrder::RightToLeft);

// enumeration at desk scale
std::vector<std::vector<int>> partitions(int m);
std::vector<StandardTableau> standard_tableaux(const std::vector<int>& shape,
                                               const std::vector<int>& entries);
std::vector<ContractionPattern> contraction_patterns(int k);

struct CandidateSpec {
    ContractionPattern pattern;
    StandardTableau tableau;
};
/// All (pattern, tableau) labels of the maximal-vector theorem with
/// row count <= n.
std::vector<CandidateSpec> theorem_candidates(int n, int k);

std::string tableau_json(const StandardTableau& t);
std::string pattern_json(const ContractionPattern& p);

} // namespace periplectiq
