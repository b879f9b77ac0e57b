#include "periplectiq/superlinalg.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace periplectiq {

int TensorShape::dim() const {
    int d = 1;
    for (int i = 0; i < k; ++i) d *= site_dim();
    return d;
}

std::vector<int> TensorShape::decode(int linear) const {
    std::vector<int> tuple(k);
    for (int j = k - 1; j >= 0; --j) {
        tuple[j] = position_index(linear % site_dim(), n);
        linear /= site_dim();
    }
    return tuple;
}

int TensorShape::encode(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != k) throw ShapeError("tuple length != k");
    int linear = 0;
    for (int a : tuple) {
        if (a == 0 || a < -n || a > n) throw ShapeError("basis index out of range");
        linear = linear * site_dim() + index_position(a, n);
    }
    return linear;
}

void SuperVector::add(int linear, const RatFunc& v) {
    if (v.is_zero()) return;
    auto it = coeffs.find(linear);
    if (it == coeffs.end()) {
        coeffs[linear] = v;
    } else {
        it->second += v;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

void SuperVector::add_tuple(const std::vector<int>& tuple, const RatFunc& v) {
    add(shape.encode(tuple), v);
}

RatFunc SuperVector::coeff(int linear) const {
    auto it = coeffs.find(linear);
    return it == coeffs.end() ? RatFunc::zero() : it->second;
}

SuperVector SuperVector::scaled(const RatFunc& c) const {
    SuperVector out(shape);
    if (c.is_zero()) return out;
    for (const auto& [i, v] : coeffs) out.coeffs[i] = v * c;
    return out;
}

SuperVector operator+(const SuperVector& a, const SuperVector& b) {
    if (!(a.shape == b.shape)) throw ShapeError("SuperVector shape mismatch");
    SuperVector out = a;
    for (const auto& [i, v] : b.coeffs) out.add(i, v);
    return out;
}

SuperVector operator-(const SuperVector& a, const SuperVector& b) {
    if (!(a.shape == b.shape)) throw ShapeError("SuperVector shape mismatch");
    SuperVector out = a;
    for (const auto& [i, v] : b.coeffs) out.add(i, -v);
    return out;
}

SuperMatrix::SuperMatrix(int rows, int cols, int parity)
    : rows_(rows), cols_(cols), parity_(parity & 1), cols_data_(cols) {}

SuperMatrix SuperMatrix::identity(int dim) {
    SuperMatrix m(dim, dim, 0);
    for (int i = 0; i < dim; ++i) m.cols_data_[i][i] = RatFunc::one();
    return m;
}

RatFunc SuperMatrix::entry(int r, int c) const {
    const auto& col = cols_data_[c];
    auto it = col.find(r);
    return it == col.end() ? RatFunc::zero() : it->second;
}

void SuperMatrix::add_entry(int r, int c, const RatFunc& v) {
    if (v.is_zero()) return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeError("entry out of range");
    auto& col = cols_data_[c];
    auto it = col.find(r);
    if (it == col.end()) {
        col[r] = v;
    } else {
        it->second += v;
        if (it->second.is_zero()) col.erase(it);
    }
}

std::size_t SuperMatrix::nnz() const {
    std::size_t s = 0;
    for (const auto& col : cols_data_) s += col.size();
    return s;
}

bool SuperMatrix::is_zero() const {
    for (const auto& col : cols_data_)
        if (!col.empty()) return false;
    return true;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matmul dimension mismatch");
    SuperMatrix out(a.rows_, b.cols_, a.parity_ ^ b.parity_);
    for (int j = 0; j < b.cols_; ++j) {
        auto& dst = out.cols_data_[j];
        for (const auto& [r, v] : b.cols_data_[j]) {
            for (const auto& [r2, v2] : a.cols_data_[r]) {
                auto it = dst.find(r2);
                if (it == dst.end()) {
                    RatFunc p = v2 * v;
                    if (!p.is_zero()) dst[r2] = p;
                } else {
                    it->second += v2 * v;
                    if (it->second.is_zero()) dst.erase(it);
                }
            }
        }
    }
    return out;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matadd dimension mismatch");
    SuperMatrix out = a;
    if (a.is_zero()) out.parity_ = b.parity_;
    for (int j = 0; j < b.cols_; ++j)
        for (const auto& [r, v] : b.cols_data_[j]) out.add_entry(r, j, v);
    return out;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    return a + b.scaled(RatFunc(-1L));
}

SuperMatrix SuperMatrix::scaled(const RatFunc& c) const {
    SuperMatrix out(rows_, cols_, parity_);
    if (c.is_zero()) return out;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [r, v] : cols_data_[j]) out.cols_data_[j][r] = v * c;
    return out;
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && cols_data_ == o.cols_data_;
}

SparseVec SuperMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v) {
        if (i < 0 || i >= cols_) throw ShapeError("apply: index out of range");
        for (const auto& [r, m] : cols_data_[i]) {
            auto it = out.find(r);
            if (it == out.end()) {
                RatFunc p = m * c;
                if (!p.is_zero()) out[r] = p;
            } else {
                it->second += m * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

SuperVector SuperMatrix::apply(const SuperVector& v) const {
    SuperVector out(v.shape);
    out.coeffs = apply(v.coeffs);
    return out;
}

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b) { return a * b; }
SuperMatrix matadd(const SuperMatrix& a, const SuperMatrix& b) { return a + b; }
SuperMatrix scale(const RatFunc& c, const SuperMatrix& a) { return a.scaled(c); }

SuperMatrix super_kron(const std::vector<const SuperMatrix*>& site_ops, int n) {
    const int k = static_cast<int>(site_ops.size());
    const int site = 2 * n;
    int parity = 0;
    for (const auto* op : site_ops) {
        if (op->rows() != site || op->cols() != site) throw ShapeError("super_kron: site op must be 2n x 2n");
        parity ^= op->parity();
    }
    TensorShape shape{n, k};
    const int dim = shape.dim();
    SuperMatrix out(dim, dim, parity);
    std::vector<int> tuple;
    for (int j = 0; j < dim; ++j) {
        tuple = shape.decode(j);
        // prefix parities of the input tuple
        std::vector<int> prefix(k + 1, 0);
        for (int b = 0; b < k; ++b) prefix[b + 1] = prefix[b] ^ index_parity(tuple[b]);
        // cartesian product over per-slot column entries
        struct Branch {
            int slot;
            int row_acc;
            RatFunc val;
            int sign;
        };
        std::vector<Branch> stack{{0, 0, RatFunc::one(), 0}};
        while (!stack.empty()) {
            Branch b = stack.back();
            stack.pop_back();
            if (b.slot == k) {
                out.add_entry(b.row_acc, j, b.sign ? -b.val : b.val);
                continue;
            }
            const int pos = index_position(tuple[b.slot], n);
            const SuperMatrix& op = *site_ops[b.slot];
            const int extra = op.parity() & prefix[b.slot];
            for (const auto& [r, v] : op.col(pos)) {
                stack.push_back({b.slot + 1, b.row_acc * site + r, b.val * v,
                                 b.sign ^ extra});
            }
        }
    }
    return out;
}

SuperMatrix place_operator(const SuperMatrix& x, int position, int k,
                           const SuperMatrix& left_diag, const SuperMatrix& right_diag) {
    if (position < 1 || position > k) throw ShapeError("place_operator: position out of range");
    if (left_diag.parity() != 0 || right_diag.parity() != 0)
        throw ShapeError("place_operator: flanking operators must be even");
    const int n = x.rows() / 2;
    std::vector<const SuperMatrix*> ops(k);
    for (int i = 0; i < k; ++i)
        ops[i] = i + 1 < position ? &left_diag : (i + 1 == position ? &x : &right_diag);
    return super_kron(ops, n);
}

// --- elimination -----------------------------------------------------------

namespace {

Rat rat_gcd(const Rat& a, const Rat& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return b < 0 ? Rat(-b) : b;
    if (b == 0) return a < 0 ? Rat(-a) : a;
    Int gn = gcd(Int(boost::multiprecision::abs(numerator(a))),
                 Int(boost::multiprecision::abs(numerator(b))));
    Int dl = lcm(Int(denominator(a)), Int(denominator(b)));
    return Rat(gn, dl);
}

std::size_t row_weight(const PolyVec& v) {
    std::size_t w = 0;
    for (const auto& [c, p] : v) w += p.term_count();
    return w;
}

// r <- pc * r - rc * p  (the fraction-free two-row update)
void row_combine(PolyVec& r, const PolyVec& p, const LaurentPoly& rc, const LaurentPoly& pc) {
    PolyVec out;
    for (const auto& [c, val] : r) {
        LaurentPoly t = pc * val;
        auto it = p.find(c);
        if (it != p.end()) t -= rc * it->second;
        if (!t.is_zero()) out[c] = std::move(t);
    }
    for (const auto& [c, val] : p) {
        if (r.find(c) != r.end()) continue;
        LaurentPoly t = -(rc * val);
        if (!t.is_zero()) out[c] = std::move(t);
    }
    r = std::move(out);
}

} // namespace

PolyVec clear_denominators(const SparseVec& v) {
    LaurentPoly common(Rat(1));
    for (const auto& [c, val] : v) {
        const LaurentPoly& d = val.den();
        LaurentPoly g = poly_gcd(common, d);
        common = common * poly_divexact(d, g.is_zero() ? LaurentPoly(Rat(1)) : g);
    }
    PolyVec out;
    for (const auto& [c, val] : v) out[c] = val.num() * poly_divexact(common, val.den());
    return out;
}

void normalize_poly_row(PolyVec& v) {
    if (v.empty()) return;
    LaurentPoly g;
    Rat cont = 0;
    int shift = INT_MAX;
    for (const auto& [c, p] : v) {
        ContentSplit cs = content_split(p);
        g = poly_gcd(g, cs.primitive);
        cont = rat_gcd(cont, cs.content);
        shift = std::min(shift, cs.shift);
    }
    LaurentPoly factor = g.scaled(cont).shifted(shift);
    if (factor != LaurentPoly(Rat(1))) {
        for (auto& [c, p] : v) p = poly_divexact(p, factor);
    }
    if (v.begin()->second.leading_coeff() < 0) {
        for (auto& [c, p] : v) p = -p;
    }
}

bool EchelonBasis::insert(const SparseVec& v) { return insert_poly(clear_denominators(v)); }

void EchelonBasis::reduce_in_place(PolyVec& v) const {
    for (std::size_t i = 0; i < rows_.size() && !v.empty(); ++i) {
        const int p = pivots_[i];
        if (v.begin()->first > p) continue;
        auto it = v.find(p);
        if (it == v.end()) continue;
        row_combine(v, rows_[i], it->second, rows_[i].at(p));
    }
    normalize_poly_row(v);
}

bool EchelonBasis::insert_poly(PolyVec v) {
    normalize_poly_row(v);
    reduce_in_place(v);
    if (v.empty()) return false;
    const int pivot = v.begin()->first;
    auto at = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto idx = at - pivots_.begin();
    pivots_.insert(at, pivot);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

int EchelonBasis::insert_indexed(const SparseVec& v) {
    PolyVec p = clear_denominators(v);
    normalize_poly_row(p);
    reduce_in_place(p);
    if (p.empty()) return -1;
    const int pivot = p.begin()->first;
    auto at = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto idx = static_cast<int>(at - pivots_.begin());
    pivots_.insert(at, pivot);
    rows_.insert(rows_.begin() + idx, std::move(p));
    return idx;
}

bool EchelonBasis::contains(const SparseVec& v) const {
    PolyVec p = clear_denominators(v);
    reduce_in_place(p);
    return p.empty();
}

namespace {

// back-substitution to reduced echelon form over RatFunc
RrefResult reduce_echelon(std::vector<PolyVec> rows, const std::vector<int>& pivots) {
    const auto m = rows.size();
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = 0; j < i; ++j) {
            auto it = rows[j].find(pivots[i]);
            if (it == rows[j].end()) continue;
            row_combine(rows[j], rows[i], it->second, rows[i].at(pivots[i]));
            normalize_poly_row(rows[j]);
        }
    }
    RrefResult out;
    out.pivots = pivots;
    out.rows.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const LaurentPoly& piv = rows[i].at(pivots[i]);
        for (const auto& [c, p] : rows[i]) {
            RatFunc v(p, piv);
            if (!v.is_zero()) out.rows[i][c] = std::move(v);
        }
    }
    return out;
}

// forward elimination in column order with sparsity pivoting
struct ForwardResult {
    std::vector<PolyVec> rows; // pivot rows in pivot-column order
    std::vector<int> pivots;
};

ForwardResult forward_eliminate(std::vector<PolyVec> rows, int cols) {
    for (auto& r : rows) normalize_poly_row(r);
    std::vector<bool> used(rows.size(), false);
    ForwardResult out;
    for (int c = 0; c < cols; ++c) {
        // candidate with minimal total term count, ties to the lowest index
        std::size_t best = rows.size();
        std::size_t best_w = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty() || rows[i].begin()->first != c) continue;
            const std::size_t w = row_weight(rows[i]);
            if (best == rows.size() || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == rows.size()) continue;
        used[best] = true;
        const PolyVec& pivot_row = rows[best];
        const LaurentPoly& pv = pivot_row.at(c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end()) continue;
            row_combine(rows[i], pivot_row, it->second, pv);
            normalize_poly_row(rows[i]);
        }
        out.rows.push_back(pivot_row);
        out.pivots.push_back(c);
    }
    return out;
}

std::vector<PolyVec> to_poly_rows(const std::vector<SparseVec>& input) {
    std::vector<PolyVec> rows;
    rows.reserve(input.size());
    for (const auto& v : input)
        if (!v.empty()) rows.push_back(clear_denominators(v));
    return rows;
}

} // namespace

RrefResult rref_rows(const std::vector<SparseVec>& input, int cols) {
    ForwardResult f = forward_eliminate(to_poly_rows(input), cols);
    return reduce_echelon(std::move(f.rows), f.pivots);
}

std::vector<SparseVec> EchelonBasis::rref() const {
    return reduce_echelon(rows_, pivots_).rows;
}

std::vector<SparseVec> matrix_rows(const SuperMatrix& a) {
    std::vector<SparseVec> rows(a.rows());
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [r, v] : a.col(j)) rows[r][j] = v;
    return rows;
}

std::vector<SparseVec> matrix_columns(const SuperMatrix& a) {
    std::vector<SparseVec> cols(a.cols());
    for (int j = 0; j < a.cols(); ++j) cols[j] = a.col(j);
    return cols;
}

int rank_of(const SuperMatrix& a) {
    ForwardResult f = forward_eliminate(to_poly_rows(matrix_rows(a)), a.cols());
    return static_cast<int>(f.rows.size());
}

std::vector<SparseVec> nullspace_rows(const SuperMatrix& a) {
    RrefResult r = rref_rows(matrix_rows(a), a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<SparseVec> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        v[f] = RatFunc::one();
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            auto it = r.rows[i].find(f);
            if (it != r.rows[i].end()) v[r.pivots[i]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<SuperVector> nullspace(const SuperMatrix& a, const TensorShape& shape) {
    std::vector<SuperVector> out;
    for (auto& v : nullspace_rows(a)) {
        SuperVector sv(shape);
        sv.coeffs = std::move(v);
        out.push_back(std::move(sv));
    }
    return out;
}

std::vector<SparseVec> span_union(const std::vector<SparseVec>& vs, int cols) {
    return rref_rows(vs, cols).rows;
}

std::vector<SuperVector> span_union(const std::vector<SuperVector>& vs) {
    std::vector<SuperVector> out;
    if (vs.empty()) return out;
    const TensorShape shape = vs.front().shape;
    std::vector<SparseVec> rows;
    for (const auto& v : vs) {
        if (!(v.shape == shape)) throw ShapeError("span_union: mixed tensor shapes");
        rows.push_back(v.coeffs);
    }
    for (auto& r : rref_rows(rows, shape.dim()).rows) {
        SuperVector sv(shape);
        sv.coeffs = std::move(r);
        out.push_back(std::move(sv));
    }
    return out;
}

bool contains(const std::vector<SuperVector>& basis, const SuperVector& v) {
    EchelonBasis eb(v.shape.dim());
    for (const auto& b : basis) {
        if (!(b.shape == v.shape)) throw ShapeError("contains: mixed tensor shapes");
        eb.insert(b.coeffs);
    }
    return eb.contains(v.coeffs);
}

bool span_contains(const RrefResult& basis, const SparseVec& v) {
    SparseVec r = v;
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        auto it = r.find(basis.pivots[i]);
        if (it == r.end()) continue;
        const RatFunc c = it->second;
        for (const auto& [col, val] : basis.rows[i]) {
            auto jt = r.find(col);
            if (jt == r.end()) {
                RatFunc p = -(c * val);
                if (!p.is_zero()) r[col] = p;
            } else {
                jt->second -= c * val;
                if (jt->second.is_zero()) r.erase(jt);
            }
        }
    }
    return r.empty();
}

std::string vector_json(const SuperVector& v) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [i, c] : v.coeffs) {
        if (!first) os << ",";
        first = false;
        os << "{\"tuple\":[";
        const auto tuple = v.shape.decode(i);
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            if (j) os << ",";
            os << tuple[j];
        }
        os << "],\"coeff\":\"" << c.str() << "\"}";
    }
    os << "]";
    return os.str();
}

} // namespace periplectiq
