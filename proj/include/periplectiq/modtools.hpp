#pragma once

// Module-theoretic analysis on subspaces of V^(⊗k): maximal vectors, cyclic
// submodules, invariance, direct-sum certificates and split/non-split
// diagnosis in the style of the decomposition proofs.

#include <string>
#include <vector>

#include "periplectiq/qbrauer.hpp"

namespace periplectiq {

/// An action-closed subspace with a reduced-echelon basis in the canonical
/// basis order; closure under every generator is verified at construction.
struct Submodule {
    const TensorModule* parent = nullptr;
    std::vector<SparseVec> basis; // RREF rows, pivot entries = 1
    std::vector<int> pivots;
    std::string provenance;

    int rank() const { return static_cast<int>(basis.size()); }
};

Submodule make_submodule(const TensorModule& m, const std::vector<SparseVec>& spanning,
                         std::string provenance, bool verify = true);
Submodule whole_space(const TensorModule& m);
Submodule image_submodule(const TensorModule& m, const SuperMatrix& op, std::string provenance);

bool is_invariant(const std::vector<SparseVec>& basis, const TensorModule& m);

struct MaximalSpace {
    Weight weight;
    std::vector<SparseVec> vectors; // echelonized
};

/// Per weight, a basis of {v in S : e_i v = ebar_i v = 0 for all i}.
std::vector<MaximalSpace> maximal_vectors(const Submodule& S);
int maximal_dimension(const std::vector<MaximalSpace>& profile);

/// Smallest action-closed subspace containing the seeds (breadth-first
/// closure under all cached generator actions).
Submodule generated_submodule(const std::vector<SparseVec>& seeds, const TensorModule& m,
                              std::string provenance);

struct CertificateReport {
    std::vector<std::string> names;
    std::vector<int> ranks;
    int dim = 0;
    bool orthogonal = false;
    bool images_invariant = false;
    bool ranks_sum = false;
    bool span_full = false;
    bool centralizes = false;
    bool pass = false;
};

/// Orthogonality, invariance and rank bookkeeping for a claimed direct-sum
/// decomposition by commuting projectors; throws CertificateFailure naming
/// the first failed identity.
CertificateReport direct_sum_certificate(
    const std::vector<std::pair<std::string, SuperMatrix>>& projectors, const TensorModule& m);

enum class Verdict { Split, ReducibleIndecomposable, Irreducible, Undetermined };
std::string verdict_str(Verdict v);

struct SplitnessReport {
    std::string summand;
    int rank = 0;
    std::vector<std::pair<Weight, int>> maximal_profile;
    std::vector<int> cyclic_ranks; // per maximal line, in profile order
    Verdict verdict = Verdict::Undetermined;
    std::vector<std::string> witnesses;
};

SplitnessReport splitness_report(const Submodule& S);

/// The k >= 4 reduction: the image of c_1 on V^(⊗k) is invariant of dimension
/// (2n)^(k-2) and v -> omega ⊗ v intertwines the actions on V^(⊗(k-2)).
struct ContractionReduction {
    int n = 0, k = 0;
    int image_rank = 0;
    bool rank_matches = false;
    bool image_invariant = false;
    bool intertwines = false;
    bool image_is_omega_tensor = false;
    bool pass = false;
};

ContractionReduction contraction_reduction(int n, int k);

} // namespace periplectiq
