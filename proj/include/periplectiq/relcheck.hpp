#pragma once

// Sweeps the presentation relations and derived identities as exact operator
// equations on V^(⊗k). Every pass is a literally-zero residual matrix over
// Q(q); flagged print ambiguities are evaluated in both readings and the
// report records which one holds.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "periplectiq/modtools.hpp"

namespace periplectiq {

/// coeff * g_1 g_2 ... g_m as an operator word (empty word = identity).
struct GenWord {
    RatFunc coeff;
    std::vector<GeneratorLabel> gens;
};
using GenExpr = std::vector<GenWord>;

SuperMatrix eval_expr(const GenExpr& expr, const TensorModule& m);

/// One relation instance; when `alt` is present the text admits two readings.
struct RelationCase {
    std::string id;
    GenExpr expr;
    std::optional<GenExpr> alt;
    std::string alt_note;
};

enum class CaseStatus { Pass, Fail, Ambiguous }; // Ambiguous: exactly one reading holds

struct ResidualEntry {
    std::vector<int> row, col; // basis tuples
    std::string value;
};

struct CaseResult {
    std::string id;
    CaseStatus status = CaseStatus::Fail;
    std::string reading;
    std::vector<ResidualEntry> residual; // truncated nonzero entries
};

struct Report {
    std::string suite;
    int n = 0, k = 0;
    bool mutated = false;
    std::vector<CaseResult> cases;
    std::map<std::string, std::string> notes;

    int failures() const;
    bool all_pass() const { return failures() == 0; }
};

/// Evaluates eq-style FRT relation over every index quadruple.
Report check_exprel(int n, int k, bool mutate = false);

/// The full Drinfeld-Jimbo presentation sweep; `families` restricts to a
/// comma-separated subset of {cartan,comm,adjacent,fbar,serre,mixed} when
/// nonempty.
Report check_dj_relations(int n, int k, bool mutate = false,
                          const std::string& families = "");

Report check_lemma_alg(int n, int k, bool mutate = false);

Report check_divided_powers(int n, int k, int m_max, bool mutate = false);

/// q = 1 specialization: the classical presentation relations, the bracket
/// lemma, and the superbracket formula brute-forced over basis pairs, under
/// the documented sign identification for Fbar (the flipped identification is
/// run as well and must fail).
Report check_classical(int n, bool mutate = false);

Report check_centralizer_and_symmetrizers(int n, int k, bool mutate = false);

std::string report_json(const Report& r);

} // namespace periplectiq
