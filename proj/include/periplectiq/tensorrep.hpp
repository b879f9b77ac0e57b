#pragma once

// The U_q p_n action on V^(⊗k): iterated comultiplication of the
// Drinfeld-Jimbo generators and of the FRT generators t_ij, the weight-space
// decomposition, characters, and the dominance order.

#include <map>
#include <string>
#include <vector>

#include "periplectiq/natrep.hpp"

namespace periplectiq {

using Weight = std::vector<int>; // coefficients of eps_1..eps_n

Weight weight_alpha(int i, int n); // eps_i - eps_{i+1}
Weight weight_beta(int i, int n);  // 2 eps_i
Weight weight_gamma(int i, int n); // eps_i + eps_{i+1}
Weight weight_of_tuple(const std::vector<int>& tuple, int n);
int weight_pair(const Weight& mu, const std::vector<int>& h); // mu(h)

/// mu <= lam in the dominance order: lam - mu is a nonnegative integer
/// combination of the alpha_i, gamma_i and beta_j.
bool weight_leq(const Weight& mu, const Weight& lam);
bool is_dominant(const Weight& lam);

/// One term of an iterated coproduct: coeff * (site_1 ⊗ ... ⊗ site_k).
struct CoproductTerm {
    RatFunc coeff;
    std::vector<GeneratorLabel> sites;
};

/// Delta(g) as a list of (coeff, left, right) per Lemma-style formulas.
std::vector<std::tuple<RatFunc, GeneratorLabel, GeneratorLabel>> coproduct(
    const GeneratorLabel& g, int n);

std::vector<CoproductTerm> expand_coproduct(const GeneratorLabel& g, int n, int k);

/// Action of g on V^(⊗k) via the iterated coproduct (leftmost-slot convention
/// Delta^(k) = (Delta ⊗ id^(k-2)) ∘ Delta^(k-1)); k = 1 is dj_matrix.
SuperMatrix coproduct_action(int n, int k, const GeneratorLabel& g);

/// Same operator built with the opposite bracketing (id ⊗ Delta)...; used to
/// assert coassociativity at the matrix level.
SuperMatrix coproduct_action_right(int n, int k, const GeneratorLabel& g);

/// Action of t_ij on V^(⊗k) via the matrix-coefficient coproduct
/// Delta(t_ij) = Σ_m (-1)^((p(i)+p(m))(p(m)+p(j))) t_im ⊗ t_mj.
SuperMatrix tij_coproduct_action(int n, int k, int i, int j);

/// The representation V^(⊗k) with every generator action matrix cached and a
/// weight index over the basis tuples; immutable after construction.
class TensorModule {
public:
    TensorModule(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const TensorShape& shape() const { return shape_; }
    int dim() const { return shape_.dim(); }

    const SuperMatrix& action(const GeneratorLabel& g) const;
    SuperMatrix qh_action(const std::vector<int>& h) const;

    /// e_i and ebar_i for i in I: the raising operators.
    const std::vector<GeneratorLabel>& raising_labels() const { return raising_; }
    /// All cached generator labels (E/F/EBar/FBar/FFBar/QH(k_i)).
    const std::vector<GeneratorLabel>& labels() const { return labels_; }

    Weight weight_of_index(int linear) const;
    const std::map<Weight, std::vector<int>>& weight_spaces() const { return weight_spaces_; }
    std::map<Weight, int> character() const;

private:
    int n_, k_;
    TensorShape shape_;
    std::vector<GeneratorLabel> labels_, raising_;
    std::map<GeneratorLabel, SuperMatrix> actions_;
    std::map<Weight, std::vector<int>> weight_spaces_;
};

std::string character_json(const TensorModule& m);

} // namespace periplectiq
