#pragma once

// Action matrices on the natural module V = C_q(n|n): the FRT generators
// t_ij, the Drinfeld-Jimbo generators obtained from them by rescaling, and
// the classical matrices E_ij of p_n.

#include <string>
#include <vector>

#include "periplectiq/superlinalg.hpp"

namespace periplectiq {

enum class GenKind { E, F, EBar, FBar, FFBar, QH, T };

/// Generator name: e_i, f_i, ebar_i, fbar_i (i in 1..n-1), Fbar_j (j in 1..n),
/// q^h for an integer coweight h, or t_ij.
struct GeneratorLabel {
    GenKind kind;
    int i = 0;
    int j = 0;
    std::vector<int> h; // QH only

    static GeneratorLabel e(int i) { return {GenKind::E, i, 0, {}}; }
    static GeneratorLabel f(int i) { return {GenKind::F, i, 0, {}}; }
    static GeneratorLabel ebar(int i) { return {GenKind::EBar, i, 0, {}}; }
    static GeneratorLabel fbar(int i) { return {GenKind::FBar, i, 0, {}}; }
    static GeneratorLabel Fbar(int j) { return {GenKind::FFBar, j, 0, {}}; }
    static GeneratorLabel qh(std::vector<int> h) { return {GenKind::QH, 0, 0, std::move(h)}; }
    static GeneratorLabel qk(int i, int n); // q^{k_i}
    static GeneratorLabel t(int i, int j) { return {GenKind::T, i, j, {}}; }

    int parity() const;
    /// Degree in the Q-grading as an epsilon-coordinate vector of length n.
    std::vector<int> degree(int n) const;
    std::string str() const;
    bool operator==(const GeneratorLabel& o) const = default;
    bool operator<(const GeneratorLabel& o) const;
};

GeneratorLabel parse_generator(const std::string& text);

/// t_ij on V per the closed-form action list; returns the zero matrix for
/// index patterns outside the support (|i| > |j|, and t_{-i,i} = 0 for i >= 0).
SuperMatrix t_matrix(int n, int i, int j);

/// Drinfeld-Jimbo generator matrix on V, obtained by the dictionary rescale
/// of the matching t_ij; QH(h) is diagonal with q^{sgn(a)·h_|a|} on u_a.
SuperMatrix dj_matrix(int n, const GeneratorLabel& g);

/// The classical matrix E_ij = E_ij - (-1)^{p(i)(p(j)+1)} E_{-j,-i}.
SuperMatrix classical_matrix(int n, int i, int j);

/// sgn(sgn(i) + sgn(j) + sgn(k)) for nonzero indices.
int theta_sign(int i, int j, int k);

} // namespace periplectiq
