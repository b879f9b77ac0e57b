#include "periplectiq/qbrauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace periplectiq {

Permutation Permutation::identity(int k) {
    Permutation p;
    p.img.resize(k);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

Permutation Permutation::transposition(int a, int b, int k) {
    Permutation p = identity(k);
    std::swap(p.img[a - 1], p.img[b - 1]);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= size(); ++x)
        if (img[x - 1] != x) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img.resize(size());
    for (int x = 1; x <= size(); ++x) p.img[img[x - 1] - 1] = x;
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (img[a] > img[b]) ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    // sort the one-line notation by adjacent swaps, smallest descent first
    std::vector<int> w = img, word;
    while (true) {
        int j = -1;
        for (int t = 0; t + 1 < size(); ++t)
            if (w[t] > w[t + 1]) {
                j = t;
                break;
            }
        if (j < 0) break;
        std::swap(w[j], w[j + 1]);
        word.push_back(j + 1);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Permutation compose(const Permutation& a, const Permutation& b, ComposeOrder order) {
    if (a.size() != b.size()) throw ShapeError("permutation size mismatch");
    const Permutation& first = order == ComposeOrder::RightToLeft ? b : a;
    const Permutation& second = order == ComposeOrder::RightToLeft ? a : b;
    Permutation out;
    out.img.resize(a.size());
    for (int x = 1; x <= a.size(); ++x) out.img[x - 1] = second(first(x));
    return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    std::set<int> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) throw ShapeError("empty tableau row");
        if (i + 1 < rows.size() && rows[i + 1].size() > rows[i].size())
            throw ShapeError("tableau shape is not a partition");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (!seen.insert(rows[i][j]).second) throw ShapeError("repeated tableau entry");
            if (j > 0 && rows[i][j] <= rows[i][j - 1]) throw ShapeError("row not increasing");
            if (i > 0 && rows[i - 1][j] >= rows[i][j]) throw ShapeError("column not increasing");
        }
    }
}

int StandardTableau::size() const {
    int s = 0;
    for (const auto& r : rows) s += static_cast<int>(r.size());
    return s;
}

std::vector<int> StandardTableau::shape() const {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

std::vector<int> StandardTableau::entries() const {
    std::vector<int> e;
    for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
    std::sort(e.begin(), e.end());
    return e;
}

int StandardTableau::row_of(int entry) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int v : rows[i])
            if (v == entry) return static_cast<int>(i) + 1;
    throw ShapeError("entry not in tableau");
}

StandardTableau StandardTableau::t_plus(const std::vector<int>& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape) {
        std::vector<int> row(len);
        std::iota(row.begin(), row.end(), next);
        next += len;
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

StandardTableau StandardTableau::t_minus(const std::vector<int>& shape) {
    if (shape.empty()) return StandardTableau();
    std::vector<std::vector<int>> rows(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) rows[r].resize(shape[r]);
    int next = 1;
    for (int c = 0; c < shape[0]; ++c)
        for (std::size_t r = 0; r < shape.size(); ++r)
            if (c < shape[r]) rows[r][c] = next++;
    return StandardTableau(std::move(rows));
}

ContractionPattern::ContractionPattern(std::vector<std::pair<int, int>> p, int k)
    : pairs(std::move(p)) {
    std::set<int> seen;
    for (auto& [r, s] : pairs) {
        if (r >= s) throw PatternError("pattern pair needs r < s");
        if (r < 1 || s > k) throw PatternError("pattern index out of range");
        if (!seen.insert(r).second || !seen.insert(s).second)
            throw PatternError("overlapping contraction pattern");
    }
    std::sort(pairs.begin(), pairs.end());
}

std::vector<int> ContractionPattern::contracted() const {
    std::vector<int> out;
    for (const auto& [r, s] : pairs) {
        out.push_back(r);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// adds coeff * E_{ab} ⊗ E_{cd} with the Koszul sign (-1)^{p(E_cd) p(u_b)}
void add_two_site_term(SuperMatrix& out, const RatFunc& coeff, int a, int b, int c, int d,
                       int n) {
    const int site = 2 * n;
    const int row = index_position(a, n) * site + index_position(c, n);
    const int col = index_position(b, n) * site + index_position(d, n);
    const int sign = ((index_parity(c) + index_parity(d)) * index_parity(b)) % 2 ? -1 : 1;
    out.add_entry(row, col, sign < 0 ? -coeff : coeff);
}

} // namespace

SuperMatrix c_op(int n) {
    const int d = 4 * n * n;
    SuperMatrix out(d, d, 0);
    for (int a = -n; a <= n; ++a) {
        if (a == 0) continue;
        for (int b = -n; b <= n; ++b) {
            if (b == 0) continue;
            const RatFunc coeff(static_cast<long>((index_parity(a) * index_parity(b)) % 2 ? -1 : 1));
            add_two_site_term(out, coeff, a, b, -a, -b, n);
        }
    }
    return out;
}

SuperMatrix t_op(int n) {
    const int d = 4 * n * n;
    SuperMatrix out(d, d, 0);
    const RatFunc q = RatFunc::q_power(1), qi = RatFunc::q_power(-1), one = RatFunc::one();
    const RatFunc qm1 = q - one, qim1 = qi - one, eps = q - qi;
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        for (int j = -n; j <= n; ++j) {
            if (j == 0) continue;
            add_two_site_term(out, index_parity(j) ? RatFunc(-1L) : one, i, j, j, i, n);
        }
    }
    for (int i = 1; i <= n; ++i) {
        add_two_site_term(out, qm1, -i, i, i, -i, n);
        add_two_site_term(out, qm1, i, i, i, i, n);
        add_two_site_term(out, -qim1, i, -i, -i, i, n);
        add_two_site_term(out, -qim1, -i, -i, -i, -i, n);
        add_two_site_term(out, eps, i, i, -i, -i, n);
    }
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        for (int j = -n; j <= n; ++j) {
            if (j == 0 || std::abs(j) >= std::abs(i)) continue;
            add_two_site_term(out, eps, j, j, i, i, n);
            const RatFunc c(static_cast<long>((index_parity(i) * index_parity(j)) % 2 ? -1 : 1));
            add_two_site_term(out, eps * c, j, i, -j, -i, n);
        }
    }
    return out;
}

SuperMatrix place_brauer(const SuperMatrix& op2, int i, int n, int k) {
    if (i < 1 || i > k - 1) throw ShapeError("place_brauer: slot out of range");
    if (op2.parity() != 0) throw ShapeError("place_brauer: operator must be even");
    const int site = 2 * n;
    if (op2.rows() != site * site) throw ShapeError("place_brauer: operator must act on V⊗2");
    TensorShape shape{n, k};
    const int dim = shape.dim();
    // strides: slots i, i+1 (1-based) vary with period site^(k-i-1)
    int right = 1;
    for (int t = 0; t < k - i - 1; ++t) right *= site;
    SuperMatrix out(dim, dim, 0);
    for (int col = 0; col < dim; ++col) {
        const int low = col % right;
        const int pair = (col / right) % (site * site);
        const int high = col / right / (site * site);
        for (const auto& [rp, v] : op2.col(pair)) {
            out.add_entry((high * site * site + rp) * right + low, col, v);
        }
    }
    return out;
}

BrauerContext::BrauerContext(int n, int k)
    : n_(n), k_(k), shape_{n, k}, id_(SuperMatrix::identity(shape_.dim())) {
    const SuperMatrix t2 = t_op(n), c2 = c_op(n);
    for (int i = 1; i <= k - 1; ++i) {
        t_.push_back(place_brauer(t2, i, n, k));
        c_.push_back(place_brauer(c2, i, n, k));
    }
}

const SuperMatrix& BrauerContext::t(int i) const {
    if (i < 1 || i > k_ - 1) throw ShapeError("t_i slot out of range");
    return t_[i - 1];
}

const SuperMatrix& BrauerContext::c(int i) const {
    if (i < 1 || i > k_ - 1) throw ShapeError("c_i slot out of range");
    return c_[i - 1];
}

SuperMatrix hecke(const Permutation& sigma, const BrauerContext& ctx) {
    SuperMatrix out = ctx.id();
    for (int i : sigma.reduced_word()) out = out * ctx.t(i);
    return out;
}

SuperMatrix hecke_inverse(const Permutation& sigma, const BrauerContext& ctx) {
    const RatFunc eps = RatFunc::q_power(1) - RatFunc::q_power(-1);
    auto word = sigma.reduced_word();
    SuperMatrix out = ctx.id();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = out * (ctx.t(*it) - ctx.id().scaled(eps));
    return out;
}

namespace {

// permutations of {1..k} preserving each block setwise
std::vector<Permutation> block_group(const std::vector<std::vector<int>>& blocks, int k) {
    std::vector<Permutation> out{Permutation::identity(k)};
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> arrangement = sorted;
        std::vector<Permutation> extended;
        do {
            Permutation p = Permutation::identity(k);
            for (std::size_t t = 0; t < sorted.size(); ++t) p.img[sorted[t] - 1] = arrangement[t];
            for (const auto& prev : out)
                extended.push_back(compose(prev, p, ComposeOrder::RightToLeft));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        out = std::move(extended);
    }
    return out;
}

std::vector<std::vector<int>> columns_of(const StandardTableau& t) {
    std::vector<std::vector<int>> cols;
    if (t.rows.empty()) return cols;
    cols.resize(t.rows[0].size());
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
}

} // namespace

std::vector<Permutation> plus_group(const std::vector<int>& shape, int k) {
    return block_group(StandardTableau::t_plus(shape).rows, k);
}

std::vector<Permutation> minus_group(const std::vector<int>& shape, int k) {
    return block_group(columns_of(StandardTableau::t_minus(shape)), k);
}

SuperMatrix quasi_idempotent_plus(const std::vector<int>& shape, const BrauerContext& ctx) {
    SuperMatrix out(ctx.dim(), ctx.dim(), 0);
    for (const auto& rho : plus_group(shape, ctx.k()))
        out = out + hecke(rho, ctx).scaled(RatFunc::q_power(rho.length()));
    return out;
}

SuperMatrix quasi_idempotent_minus(const std::vector<int>& shape, const BrauerContext& ctx) {
    SuperMatrix out(ctx.dim(), ctx.dim(), 0);
    for (const auto& rho : minus_group(shape, ctx.k())) {
        const int l = rho.length();
        out = out + hecke(rho, ctx).scaled(RatFunc::q_power(-l, Rat(l % 2 ? -1 : 1)));
    }
    return out;
}

namespace {

// permutation sending T_pm to T (on the tableau entries), completed
// order-preservingly on the rest
Permutation transformer(const StandardTableau& from, const StandardTableau& to, int k) {
    Permutation p = Permutation::identity(k);
    std::vector<bool> in_domain(k + 1, false), in_codomain(k + 1, false);
    for (std::size_t r = 0; r < from.rows.size(); ++r)
        for (std::size_t c = 0; c < from.rows[r].size(); ++c) {
            const int x = from.rows[r][c], y = to.rows[r][c];
            p.img[x - 1] = y;
            in_domain[x] = true;
            in_codomain[y] = true;
        }
    std::vector<int> rest_domain, rest_codomain;
    for (int x = 1; x <= k; ++x) {
        if (!in_domain[x]) rest_domain.push_back(x);
        if (!in_codomain[x]) rest_codomain.push_back(x);
    }
    for (std::size_t t = 0; t < rest_domain.size(); ++t)
        p.img[rest_domain[t] - 1] = rest_codomain[t];
    return p;
}

} // namespace

Symmetrizer young_symmetrizer(const StandardTableau& T, const BrauerContext& ctx) {
    const auto shape = T.shape();
    const Permutation sp = transformer(StandardTableau::t_plus(shape), T, ctx.k());
    const Permutation sm = transformer(StandardTableau::t_minus(shape), T, ctx.k());
    const SuperMatrix x = hecke(sm, ctx) * quasi_idempotent_minus(shape, ctx) *
                          hecke_inverse(sm, ctx) * hecke(sp, ctx) *
                          quasi_idempotent_plus(shape, ctx) * hecke_inverse(sp, ctx);
    if (x.is_zero()) throw SymmetrizerDegenerate("x_T = 0 for this shape");
    const SuperMatrix x2 = x * x;
    RatFunc xi;
    bool found = false;
    for (int c = 0; c < x.cols() && !found; ++c) {
        for (const auto& [r, v] : x.col(c)) {
            const RatFunc w = x2.entry(r, c);
            if (!w.is_zero()) {
                xi = w / v;
                found = true;
                break;
            }
        }
    }
    if (!found) throw SymmetrizerDegenerate("x_T^2 = 0 with x_T nonzero");
    if (!(x2 == x.scaled(xi)))
        throw SymmetrizerDegenerate("x_T^2 is not a scalar multiple of x_T");
    return Symmetrizer{x, xi, x.scaled(xi.inv())};
}

SuperMatrix c_rs(int r, int s, const BrauerContext& ctx, ComposeOrder order) {
    if (r >= s || r < 1 || s > ctx.k()) throw PatternError("c_rs needs 1 <= r < s <= k");
    const Permutation sigma = compose(Permutation::transposition(1, r, ctx.k()),
                                      Permutation::transposition(2, s, ctx.k()), order);
    if (sigma.is_identity()) return ctx.c(1);
    return hecke(sigma, ctx) * ctx.c(1) * hecke_inverse(sigma, ctx);
}

SuperMatrix c_pattern(const ContractionPattern& p, const BrauerContext& ctx, ComposeOrder order) {
    SuperMatrix out = ctx.id();
    for (const auto& [r, s] : p.pairs) out = out * c_rs(r, s, ctx, order);
    return out;
}

SuperVector pattern_tensor(const StandardTableau& tau, const ContractionPattern& p,
                           const BrauerContext& ctx) {
    std::vector<int> tuple(ctx.k(), 0);
    for (const auto& [r, s] : p.pairs) {
        tuple[r - 1] = 1;
        tuple[s - 1] = -1;
    }
    for (const auto& row : tau.rows)
        for (int entry : row) {
            if (entry < 1 || entry > ctx.k() || tuple[entry - 1] != 0)
                throw PatternError("tableau entries must fill the pattern complement");
            const int j = tau.row_of(entry);
            if (j > ctx.n()) throw ShapeError("tableau has more rows than n");
            tuple[entry - 1] = j;
        }
    for (int v : tuple)
        if (v == 0) throw PatternError("pattern and tableau do not cover 1..k");
    SuperVector w(ctx.shape());
    w.add_tuple(tuple, RatFunc::one());
    return w;
}

SuperVector maximal_candidate(const StandardTableau& tau, const ContractionPattern& p,
                              const BrauerContext& ctx, ComposeOrder order) {
    SuperVector w = pattern_tensor(tau, p, ctx);
    SuperVector cw = c_pattern(p, ctx, order).apply(w);
    if (tau.empty()) return cw;
    return young_symmetrizer(tau, ctx).y.apply(cw);
}

std::vector<std::vector<int>> partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

std::vector<StandardTableau> standard_tableaux(const std::vector<int>& shape,
                                               const std::vector<int>& entries) {
    std::vector<StandardTableau> out;
    const int m = static_cast<int>(entries.size());
    std::vector<std::vector<int>> cells(shape.size());
    std::vector<int> filled(shape.size(), 0);
    auto rec = [&](auto&& self, int next) -> void {
        if (next == m) {
            std::vector<std::vector<int>> rows;
            for (std::size_t r = 0; r < shape.size(); ++r)
                rows.emplace_back(cells[r].begin(), cells[r].end());
            out.push_back(StandardTableau(std::move(rows)));
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] >= shape[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            cells[r].push_back(entries[next]);
            ++filled[r];
            self(self, next + 1);
            --filled[r];
            cells[r].pop_back();
        }
    };
    std::vector<int> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != entries) {
        return standard_tableaux(shape, sorted);
    }
    rec(rec, 0);
    return out;
}

std::vector<ContractionPattern> contraction_patterns(int k) {
    std::vector<ContractionPattern> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(k + 1, false);
    auto rec = [&](auto&& self, int minr) -> void {
        out.push_back(ContractionPattern(cur, k));
        for (int r = minr; r <= k; ++r) {
            if (used[r]) continue;
            for (int s = r + 1; s <= k; ++s) {
                if (used[s]) continue;
                used[r] = used[s] = true;
                cur.emplace_back(r, s);
                self(self, r + 1);
                cur.pop_back();
                used[r] = used[s] = false;
            }
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<CandidateSpec> theorem_candidates(int n, int k) {
    std::vector<CandidateSpec> out;
    for (const auto& pat : contraction_patterns(k)) {
        std::vector<int> rest;
        const auto used = pat.contracted();
        for (int i = 1; i <= k; ++i)
            if (!std::binary_search(used.begin(), used.end(), i)) rest.push_back(i);
        if (rest.empty()) {
            out.push_back(CandidateSpec{pat, StandardTableau()});
            continue;
        }
        for (const auto& shape : partitions(static_cast<int>(rest.size()))) {
            if (static_cast<int>(shape.size()) > n) continue;
            for (auto& tab : standard_tableaux(shape, rest))
                out.push_back(CandidateSpec{pat, std::move(tab)});
        }
    }
    return out;
}

std::string tableau_json(const StandardTableau& t) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) os << ",";
            os << t.rows[r][c];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string pattern_json(const ContractionPattern& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        if (i) os << ",";
        os << "[" << p.pairs[i].first << "," << p.pairs[i].second << "]";
    }
    os << "]";
    return os.str();
}

} // namespace periplectiq
