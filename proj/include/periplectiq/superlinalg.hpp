#pragma once

// Sparse exact linear algebra over Q(q) on Z_2-graded spaces: super matrices
// and vectors on V^(⊗k), Koszul-signed tensor placement, and fraction-free
// elimination (rank, nullspace, echelonized spans, membership).

#include <map>
#include <string>
#include <vector>

#include "periplectiq/qrat.hpp"

namespace periplectiq {

// Basis index conventions for V = C_q(n|n): indices a with 1 <= |a| <= n,
// parity p(a) = 1 for a < 0, canonical order u_-n, ..., u_-1, u_1, ..., u_n.
inline int index_parity(int a) { return a < 0 ? 1 : 0; }
inline int index_position(int a, int n) { return a < 0 ? a + n : n + a - 1; }
inline int position_index(int p, int n) { return p < n ? p - n : p - n + 1; }

struct TensorShape {
    int n = 0;
    int k = 0;
    int site_dim() const { return 2 * n; }
    int dim() const;
    std::vector<int> decode(int linear) const; // basis-index tuple
    int encode(const std::vector<int>& tuple) const;
    bool operator==(const TensorShape& o) const { return n == o.n && k == o.k; }
};

using SparseVec = std::map<int, RatFunc>;

/// Element of V^(⊗k); coefficients keyed by the row-major linear index of the
/// basis tuple, which matches lexicographic order in the canonical basis order.
struct SuperVector {
    TensorShape shape;
    SparseVec coeffs;

    SuperVector() = default;
    explicit SuperVector(TensorShape s) : shape(s) {}

    bool is_zero() const { return coeffs.empty(); }
    void add(int linear, const RatFunc& v);
    void add_tuple(const std::vector<int>& tuple, const RatFunc& v);
    RatFunc coeff(int linear) const;
    SuperVector scaled(const RatFunc& c) const;
    friend SuperVector operator+(const SuperVector& a, const SuperVector& b);
    friend SuperVector operator-(const SuperVector& a, const SuperVector& b);
    bool operator==(const SuperVector& o) const { return shape == o.shape && coeffs == o.coeffs; }
};

/// Sparse Z_2-graded operator with RatFunc entries, column-major storage.
/// Parity is declared at construction; no zero entries are stored.
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(int rows, int cols, int parity);
    static SuperMatrix identity(int dim);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int parity() const { return parity_; }

    const SparseVec& col(int j) const { return cols_data_[j]; }
    RatFunc entry(int r, int c) const;
    void add_entry(int r, int c, const RatFunc& v);
    std::size_t nnz() const;
    bool is_zero() const;

    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    SuperMatrix scaled(const RatFunc& c) const;
    bool operator==(const SuperMatrix& o) const;
    bool operator!=(const SuperMatrix& o) const { return !(*this == o); }

    SparseVec apply(const SparseVec& v) const;
    SuperVector apply(const SuperVector& v) const;

private:
    int rows_ = 0, cols_ = 0, parity_ = 0;
    std::vector<SparseVec> cols_data_;
};

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix matadd(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix scale(const RatFunc& c, const SuperMatrix& a);

/// Super tensor product of one-site operators acting on V^(⊗k): on a basis
/// tuple w the pure tensor x_1 ⊗ ... ⊗ x_k acts with the Koszul sign
/// (-1)^(Σ_b p(x_b)·(p(w_1)+...+p(w_{b-1}))).
SuperMatrix super_kron(const std::vector<const SuperMatrix*>& site_ops, int n);

/// left_diag ⊗ ... ⊗ left_diag ⊗ x ⊗ right_diag ⊗ ... ⊗ right_diag with x at
/// the given 1-based position; the diag operators must be even.
SuperMatrix place_operator(const SuperMatrix& x, int position, int k,
                           const SuperMatrix& left_diag, const SuperMatrix& right_diag);

// --- fraction-free elimination -------------------------------------------
//
// Rows are cleared of denominators and kept as content-normalized Laurent
// polynomial rows; rational arithmetic reappears only when producing reduced
// echelon output. Pivoting: per column, the candidate row with the fewest
// stored terms wins, ties to the lowest row index.

using PolyVec = std::map<int, LaurentPoly>;

PolyVec clear_denominators(const SparseVec& v);
void normalize_poly_row(PolyVec& v);

/// Incrementally grown echelon basis (not reduced); used for span closures.
class EchelonBasis {
public:
    explicit EchelonBasis(int cols) : cols_(cols) {}
    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool insert(const SparseVec& v);      // true if the rank grew
    bool insert_poly(PolyVec v);
    /// Like insert, but reports where the reduced row landed (-1: dependent).
    int insert_indexed(const SparseVec& v);
    bool contains(const SparseVec& v) const;
    void reduce_in_place(PolyVec& v) const;
    const std::vector<PolyVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    std::vector<SparseVec> rref() const;  // canonical reduced rows, pivots = 1

private:
    int cols_;
    std::vector<PolyVec> rows_;   // sorted by pivot column
    std::vector<int> pivots_;
};

struct RrefResult {
    std::vector<SparseVec> rows; // reduced, pivot entries = 1
    std::vector<int> pivots;
};

RrefResult rref_rows(const std::vector<SparseVec>& input, int cols);

int rank_of(const SuperMatrix& a);
std::vector<SparseVec> nullspace_rows(const SuperMatrix& a);
std::vector<SuperVector> nullspace(const SuperMatrix& a, const TensorShape& shape);

std::vector<SparseVec> span_union(const std::vector<SparseVec>& vs, int cols);
std::vector<SuperVector> span_union(const std::vector<SuperVector>& vs);
/// Membership against a reduced echelon basis (pivot entries 1).
bool span_contains(const RrefResult& basis, const SparseVec& v);
/// Membership of v in the span of the given vectors (echelonizes first).
bool contains(const std::vector<SuperVector>& basis, const SuperVector& v);

/// Columns of a as rows (the image spanning set).
std::vector<SparseVec> matrix_columns(const SuperMatrix& a);
std::vector<SparseVec> matrix_rows(const SuperMatrix& a);

std::string vector_json(const SuperVector& v);

} // namespace periplectiq
