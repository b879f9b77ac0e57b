#include "periplectiq/tensorrep.hpp"

#include <sstream>

namespace periplectiq {

Weight weight_alpha(int i, int n) {
    Weight w(n, 0);
    w[i - 1] = 1;
    w[i] = -1;
    return w;
}

Weight weight_beta(int i, int n) {
    Weight w(n, 0);
    w[i - 1] = 2;
    return w;
}

Weight weight_gamma(int i, int n) {
    Weight w(n, 0);
    w[i - 1] = 1;
    w[i] = 1;
    return w;
}

Weight weight_of_tuple(const std::vector<int>& tuple, int n) {
    Weight w(n, 0);
    for (int a : tuple) w[std::abs(a) - 1] += a > 0 ? 1 : -1;
    return w;
}

int weight_pair(const Weight& mu, const std::vector<int>& h) {
    int s = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] * h[i];
    return s;
}

namespace {

// positive functional separating the cone generators: f(x) = sum (n-i+1) x_i
long cone_height(const Weight& v) {
    const int n = static_cast<int>(v.size());
    long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long>(n - i) * v[i];
    return s;
}

bool in_positive_cone(Weight v, std::map<Weight, bool>& memo) {
    bool zero = true;
    for (int x : v)
        if (x != 0) zero = false;
    if (zero) return true;
    if (cone_height(v) <= 0) return false;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    memo[v] = false; // cycle guard; height strictly decreases so none occur
    const int n = static_cast<int>(v.size());
    bool ok = false;
    std::vector<Weight> gens;
    for (int i = 1; i < n; ++i) {
        gens.push_back(weight_alpha(i, n));
        gens.push_back(weight_gamma(i, n));
    }
    for (int i = 1; i <= n; ++i) gens.push_back(weight_beta(i, n));
    for (const auto& g : gens) {
        Weight u = v;
        for (int t = 0; t < n; ++t) u[t] -= g[t];
        if (cone_height(u) >= 0 && in_positive_cone(u, memo)) {
            ok = true;
            break;
        }
    }
    memo[v] = ok;
    return ok;
}

} // namespace

bool weight_leq(const Weight& mu, const Weight& lam) {
    if (mu.size() != lam.size()) throw ShapeError("weight rank mismatch");
    Weight diff(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) diff[i] = lam[i] - mu[i];
    std::map<Weight, bool> memo;
    return in_positive_cone(diff, memo);
}

bool is_dominant(const Weight& lam) {
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) return false;
    return true;
}

std::vector<std::tuple<RatFunc, GeneratorLabel, GeneratorLabel>> coproduct(
    const GeneratorLabel& g, int n) {
    using T = std::tuple<RatFunc, GeneratorLabel, GeneratorLabel>;
    const RatFunc one = RatFunc::one();
    const RatFunc half_eps =
        (RatFunc::q_power(1) - RatFunc::q_power(-1)) * RatFunc(Rat(1, 2));
    const int i = g.i;
    switch (g.kind) {
        case GenKind::QH:
            return {T{one, g, g}};
        case GenKind::E:
            return {T{one, GeneratorLabel::qk(i, n), g},
                    T{one, g, GeneratorLabel::qk(i + 1, n)},
                    T{-half_eps, GeneratorLabel::ebar(i), GeneratorLabel::Fbar(i + 1)}};
        case GenKind::F:
            // The printed second tensor factor ebar_{i+1} is undefined at
            // i = n-1; the t_ij coproduct forces ebar_i here.
            return {T{one, GeneratorLabel::qk(i, n), g},
                    T{one, g, GeneratorLabel::qk(i + 1, n)},
                    T{half_eps, GeneratorLabel::Fbar(i), GeneratorLabel::ebar(i)}};
        case GenKind::EBar:
            return {T{one, GeneratorLabel::qk(i, n), g},
                    T{one, g, GeneratorLabel::qk(i + 1, n)}};
        case GenKind::FBar:
            return {T{one, GeneratorLabel::qk(i, n), g},
                    T{one, g, GeneratorLabel::qk(i + 1, n)},
                    T{-half_eps, GeneratorLabel::Fbar(i), GeneratorLabel::e(i)},
                    T{half_eps, GeneratorLabel::f(i), GeneratorLabel::Fbar(i + 1)}};
        case GenKind::FFBar:
            return {T{one, GeneratorLabel::qk(i, n), g},
                    T{one, g, GeneratorLabel::qk(i, n)}};
        case GenKind::T:
            throw ShapeError("coproduct: use tij_coproduct_action for t labels");
    }
    throw std::logic_error("unreachable");
}

std::vector<CoproductTerm> expand_coproduct(const GeneratorLabel& g, int n, int k) {
    if (k <= 1) return {CoproductTerm{RatFunc::one(), {g}}};
    std::vector<CoproductTerm> out;
    for (const auto& [c, left, right] : coproduct(g, n)) {
        for (auto term : expand_coproduct(left, n, k - 1)) {
            term.coeff *= c;
            term.sites.push_back(right);
            out.push_back(std::move(term));
        }
    }
    return out;
}

namespace {

std::vector<CoproductTerm> expand_coproduct_right(const GeneratorLabel& g, int n, int k) {
    if (k <= 1) return {CoproductTerm{RatFunc::one(), {g}}};
    std::vector<CoproductTerm> out;
    for (const auto& [c, left, right] : coproduct(g, n)) {
        for (auto term : expand_coproduct_right(right, n, k - 1)) {
            term.coeff *= c;
            term.sites.insert(term.sites.begin(), left);
            out.push_back(std::move(term));
        }
    }
    return out;
}

SuperMatrix assemble(const std::vector<CoproductTerm>& terms, int n, int k) {
    const TensorShape shape{n, k};
    const int d = shape.dim();
    std::map<GeneratorLabel, SuperMatrix> site_cache;
    SuperMatrix out(d, d, terms.empty() ? 0 : 0);
    bool first = true;
    for (const auto& term : terms) {
        std::vector<const SuperMatrix*> ops;
        ops.reserve(term.sites.size());
        for (const auto& s : term.sites) {
            auto it = site_cache.find(s);
            if (it == site_cache.end()) it = site_cache.emplace(s, dj_matrix(n, s)).first;
            ops.push_back(&it->second);
        }
        SuperMatrix m = super_kron(ops, n).scaled(term.coeff);
        if (first) {
            out = std::move(m);
            first = false;
        } else {
            out = out + m;
        }
    }
    return out;
}

} // namespace

SuperMatrix coproduct_action(int n, int k, const GeneratorLabel& g) {
    if (k == 1) return dj_matrix(n, g);
    return assemble(expand_coproduct(g, n, k), n, k);
}

SuperMatrix coproduct_action_right(int n, int k, const GeneratorLabel& g) {
    if (k == 1) return dj_matrix(n, g);
    return assemble(expand_coproduct_right(g, n, k), n, k);
}

namespace {

struct TTerm {
    int sign;
    std::vector<std::pair<int, int>> sites;
};

std::vector<TTerm> expand_t(int i, int j, int n, int k) {
    if (k <= 1) return {TTerm{1, {{i, j}}}};
    std::vector<TTerm> out;
    for (int m = -n; m <= n; ++m) {
        if (m == 0 || std::abs(i) > std::abs(m) || std::abs(m) > std::abs(j)) continue;
        const int s =
            ((index_parity(i) + index_parity(m)) * (index_parity(m) + index_parity(j))) % 2
                ? -1
                : 1;
        for (auto term : expand_t(i, m, n, k - 1)) {
            term.sign *= s;
            term.sites.emplace_back(m, j);
            out.push_back(std::move(term));
        }
    }
    return out;
}

} // namespace

SuperMatrix tij_coproduct_action(int n, int k, int i, int j) {
    if (k == 1) return t_matrix(n, i, j);
    const TensorShape shape{n, k};
    const int d = shape.dim();
    std::map<std::pair<int, int>, SuperMatrix> site_cache;
    const int parity = (index_parity(i) + index_parity(j)) & 1;
    SuperMatrix out(d, d, parity);
    for (const auto& term : expand_t(i, j, n, k)) {
        std::vector<const SuperMatrix*> ops;
        for (const auto& s : term.sites) {
            auto it = site_cache.find(s);
            if (it == site_cache.end())
                it = site_cache.emplace(s, t_matrix(n, s.first, s.second)).first;
            ops.push_back(&it->second);
        }
        const SuperMatrix m = super_kron(ops, n);
        out = term.sign < 0 ? out - m : out + m;
    }
    return out;
}

TensorModule::TensorModule(int n, int k) : n_(n), k_(k), shape_{n, k} {
    if (n < 1 || k < 1) throw ShapeError("TensorModule requires n >= 1, k >= 1");
    for (int i = 1; i < n; ++i) {
        labels_.push_back(GeneratorLabel::e(i));
        labels_.push_back(GeneratorLabel::f(i));
        labels_.push_back(GeneratorLabel::ebar(i));
        labels_.push_back(GeneratorLabel::fbar(i));
        raising_.push_back(GeneratorLabel::e(i));
        raising_.push_back(GeneratorLabel::ebar(i));
    }
    for (int j = 1; j <= n; ++j) labels_.push_back(GeneratorLabel::Fbar(j));
    for (int i = 1; i <= n; ++i) labels_.push_back(GeneratorLabel::qk(i, n));
    for (const auto& g : labels_) actions_.emplace(g, coproduct_action(n, k, g));
    for (int idx = 0; idx < shape_.dim(); ++idx)
        weight_spaces_[weight_of_tuple(shape_.decode(idx), n)].push_back(idx);
}

const SuperMatrix& TensorModule::action(const GeneratorLabel& g) const {
    auto it = actions_.find(g);
    if (it == actions_.end()) throw ShapeError("uncached generator label: " + g.str());
    return it->second;
}

SuperMatrix TensorModule::qh_action(const std::vector<int>& h) const {
    if (static_cast<int>(h.size()) != n_) throw ShapeError("qh coweight length != n");
    const int d = shape_.dim();
    SuperMatrix m(d, d, 0);
    for (const auto& [w, idxs] : weight_spaces_) {
        const RatFunc v = RatFunc::q_power(weight_pair(w, h));
        for (int idx : idxs) m.add_entry(idx, idx, v);
    }
    return m;
}

Weight TensorModule::weight_of_index(int linear) const {
    return weight_of_tuple(shape_.decode(linear), n_);
}

std::map<Weight, int> TensorModule::character() const {
    std::map<Weight, int> ch;
    for (const auto& [w, idxs] : weight_spaces_) ch[w] = static_cast<int>(idxs.size());
    return ch;
}

std::string character_json(const TensorModule& m) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [w, mult] : m.character()) {
        if (!first) os << ",";
        first = false;
        os << "{\"weight\":[";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ",";
            os << w[i];
        }
        os << "],\"multiplicity\":" << mult << "}";
    }
    os << "]";
    return os.str();
}

} // namespace periplectiq
