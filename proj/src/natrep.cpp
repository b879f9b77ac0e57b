#include "periplectiq/natrep.hpp"

#include <sstream>
#include <tuple>

namespace periplectiq {

GeneratorLabel GeneratorLabel::qk(int i, int n) {
    std::vector<int> h(n, 0);
    h[i - 1] = 1;
    return qh(std::move(h));
}

int GeneratorLabel::parity() const {
    switch (kind) {
        case GenKind::E:
        case GenKind::F:
        case GenKind::QH:
            return 0;
        case GenKind::EBar:
        case GenKind::FBar:
        case GenKind::FFBar:
            return 1;
        case GenKind::T:
            return (index_parity(i) + index_parity(j)) & 1;
    }
    return 0;
}

std::vector<int> GeneratorLabel::degree(int n) const {
    std::vector<int> d(n, 0);
    switch (kind) {
        case GenKind::E: // alpha_i
            d[i - 1] = 1;
            d[i] = -1;
            break;
        case GenKind::F:
            d[i - 1] = -1;
            d[i] = 1;
            break;
        case GenKind::EBar: // gamma_i
            d[i - 1] = 1;
            d[i] = 1;
            break;
        case GenKind::FBar:
            d[i - 1] = -1;
            d[i] = -1;
            break;
        case GenKind::FFBar: // -beta_i
            d[i - 1] = -2;
            break;
        case GenKind::QH:
            break;
        case GenKind::T: // wt(u_j) - wt(u_i)
            d[std::abs(j) - 1] += j > 0 ? 1 : -1;
            d[std::abs(i) - 1] -= i > 0 ? 1 : -1;
            break;
    }
    return d;
}

std::string GeneratorLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case GenKind::E: os << "e" << i; break;
        case GenKind::F: os << "f" << i; break;
        case GenKind::EBar: os << "ebar" << i; break;
        case GenKind::FBar: os << "fbar" << i; break;
        case GenKind::FFBar: os << "Fbar" << i; break;
        case GenKind::QH: {
            os << "qh[";
            for (std::size_t a = 0; a < h.size(); ++a) {
                if (a) os << ",";
                os << h[a];
            }
            os << "]";
            break;
        }
        case GenKind::T: os << "t[" << i << "," << j << "]"; break;
    }
    return os.str();
}

bool GeneratorLabel::operator<(const GeneratorLabel& o) const {
    return std::tie(kind, i, j, h) < std::tie(o.kind, o.i, o.j, o.h);
}

GeneratorLabel parse_generator(const std::string& text) {
    auto ints = [&](std::size_t from) {
        // parse "[a,b,...]" starting at from
        std::vector<int> out;
        if (from >= text.size() || text[from] != '[') throw ParseError("expected '[' in " + text);
        std::size_t i = from + 1;
        while (i < text.size() && text[i] != ']') {
            std::size_t j = i;
            while (j < text.size() && text[j] != ',' && text[j] != ']') ++j;
            out.push_back(std::stoi(text.substr(i, j - i)));
            i = text[j] == ',' ? j + 1 : j;
        }
        return out;
    };
    if (text.rfind("ebar", 0) == 0) return GeneratorLabel::ebar(std::stoi(text.substr(4)));
    if (text.rfind("fbar", 0) == 0) return GeneratorLabel::fbar(std::stoi(text.substr(4)));
    if (text.rfind("Fbar", 0) == 0) return GeneratorLabel::Fbar(std::stoi(text.substr(4)));
    if (text.rfind("qh", 0) == 0) return GeneratorLabel::qh(ints(2));
    if (text.rfind("t", 0) == 0) {
        auto v = ints(1);
        if (v.size() != 2) throw ParseError("t label needs two indices: " + text);
        return GeneratorLabel::t(v[0], v[1]);
    }
    if (text.rfind("e", 0) == 0) return GeneratorLabel::e(std::stoi(text.substr(1)));
    if (text.rfind("f", 0) == 0) return GeneratorLabel::f(std::stoi(text.substr(1)));
    throw ParseError("unknown generator label: " + text);
}

namespace {

void check_index(int n, int a) {
    if (a == 0 || a < -n || a > n) throw ShapeError("index out of range");
}

// E_ab as a matrix on V, with its natural parity
SuperMatrix unit_matrix(int n, int a, int b, const RatFunc& c) {
    SuperMatrix m(2 * n, 2 * n, (index_parity(a) + index_parity(b)) & 1);
    m.add_entry(index_position(a, n), index_position(b, n), c);
    return m;
}

RatFunc epsilon_q() { return RatFunc::q_power(1) - RatFunc::q_power(-1); }

} // namespace

SuperMatrix classical_matrix(int n, int i, int j) {
    check_index(n, i);
    check_index(n, j);
    const int parity = (index_parity(i) + index_parity(j)) & 1;
    SuperMatrix m(2 * n, 2 * n, parity);
    m.add_entry(index_position(i, n), index_position(j, n), RatFunc::one());
    const int sgn = (index_parity(i) * (index_parity(j) + 1)) % 2 ? -1 : 1;
    m.add_entry(index_position(-j, n), index_position(-i, n), RatFunc(static_cast<long>(-sgn)));
    return m;
}

SuperMatrix t_matrix(int n, int i, int j) {
    check_index(n, i);
    check_index(n, j);
    const int parity = (index_parity(i) + index_parity(j)) & 1;
    if (std::abs(i) > std::abs(j)) return SuperMatrix(2 * n, 2 * n, parity);
    if (i == j || i == -j) {
        if (i == j) {
            // t_ii = t_{-i,-i}: diagonal q^{delta_{a,i}(1-2p(i)) + delta_{a,-i}(2p(i)-1)}
            SuperMatrix m(2 * n, 2 * n, 0);
            for (int a = -n; a <= n; ++a) {
                if (a == 0) continue;
                int e = 0;
                if (a == i) e += 1 - 2 * index_parity(i);
                if (a == -i) e += 2 * index_parity(i) - 1;
                m.add_entry(index_position(a, n), index_position(a, n), RatFunc::q_power(e));
            }
            return m;
        }
        // i == -j: t_{i,-i} = (q - q^-1) E_{-i,i} for i > 0, and t_{-i,i} = 0 for i >= 0
        if (i > 0) return unit_matrix(n, -i, i, epsilon_q());
        return SuperMatrix(2 * n, 2 * n, parity);
    }
    // |i| < |j|: (q - q^-1)(-1)^{p(i)} E_{ji}
    const RatFunc c = index_parity(i) ? -epsilon_q() : epsilon_q();
    return classical_matrix(n, j, i).scaled(c);
}

SuperMatrix dj_matrix(int n, const GeneratorLabel& g) {
    const RatFunc eps = epsilon_q();
    switch (g.kind) {
        case GenKind::E:
            return t_matrix(n, -g.i, -g.i - 1).scaled(-eps.inv());
        case GenKind::F:
            return t_matrix(n, g.i, g.i + 1).scaled(eps.inv());
        case GenKind::EBar:
            return t_matrix(n, -g.i, g.i + 1).scaled(eps.inv());
        case GenKind::FBar:
            return t_matrix(n, g.i, -g.i - 1).scaled(-eps.inv());
        case GenKind::FFBar:
            return t_matrix(n, g.i, -g.i).scaled(RatFunc(-2L) * eps.inv());
        case GenKind::QH: {
            if (static_cast<int>(g.h.size()) != n) throw ShapeError("qh coweight length != n");
            SuperMatrix m(2 * n, 2 * n, 0);
            for (int a = -n; a <= n; ++a) {
                if (a == 0) continue;
                const int e = (a > 0 ? 1 : -1) * g.h[std::abs(a) - 1];
                m.add_entry(index_position(a, n), index_position(a, n), RatFunc::q_power(e));
            }
            return m;
        }
        case GenKind::T:
            return t_matrix(n, g.i, g.j);
    }
    throw std::logic_error("unreachable");
}

int theta_sign(int i, int j, int k) {
    const int s = (i > 0 ? 1 : -1) + (j > 0 ? 1 : -1) + (k > 0 ? 1 : -1);
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

} // namespace periplectiq
