#ifndef DEZA_VERIFIER_HPP
#define DEZA_VERIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "deza/analysis.hpp"
#include "deza/constructions.hpp"
#include "deza/graph.hpp"

namespace deza {

/// Recovered structure of a 2-clique extension of a complete multipartite
/// graph.
struct Theorem1Witness
{
    int s = 0; ///< number of parts
    int t = 0; ///< twin pairs per part
    std::vector<std::pair<Vertex, Vertex>> twin_pairs; ///< (v, twin), v < twin, sorted
    std::vector<VertexSet> parts;                      ///< rho classes by smallest member
    Graph quotient;
    /// Vertex v of the input corresponds to vertex relabeling[v] of
    /// theorem1_family(s, t).
    std::vector<Vertex> relabeling;
};

struct Counterexample
{
    std::string condition; ///< the check that failed, e.g. "strictly Deza"
    std::string detail;    ///< e.g. "diameter 3"
    std::vector<Vertex> vertices;
};

/// Holds with a witness, or fails with a counterexample; never both.
class TheoremVerdict
{
public:
    TheoremVerdict(Theorem1Witness witness) : outcome_(std::move(witness)) {}
    TheoremVerdict(Counterexample counterexample) : outcome_(std::move(counterexample)) {}

    bool holds() const { return std::holds_alternative<Theorem1Witness>(outcome_); }
    const Theorem1Witness& witness() const { return std::get<Theorem1Witness>(outcome_); }
    const Counterexample& counterexample() const { return std::get<Counterexample>(outcome_); }

private:
    std::variant<Theorem1Witness, Counterexample> outcome_;
};

/// Checks in order: strictly Deza; k = b + 1; beta > 1; every vertex of
/// type C with a closed-neighbourhood twin; the twins form a perfect
/// matching; the B[.] classes have size beta + 1 = n - k + 1 and are unions
/// of twin pairs; the quotient is complete; and the twin/part labeling
/// reproduces theorem1_family(n/(beta+1), (beta+1)/2) edge for edge.
TheoremVerdict verify_theorem1(const Graph& g);

enum class VerdictStatus { holds, fails, inapplicable };

std::string_view to_string(VerdictStatus status);

struct Theorem2Verdict
{
    VerdictStatus status = VerdictStatus::inapplicable;
    std::string reason;
    std::optional<FamilyIndex> family;
};

/// For (n, k, k-1, a) with beta > 1: a must equal 2k - n, and the remaining
/// feasibility identities must hold; reports the realizing (s, t).
Theorem2Verdict verify_theorem2(const DezaParameters& params);

struct LemmaCheck
{
    std::string id;    ///< stable identifier, e.g. "no_type_a1"
    std::string claim; ///< one-line statement of what is checked
    bool applicable = false;
    bool passed = false;
    std::string details; ///< failure detail, or the failed precondition
};

struct LemmaReport
{
    bool applicable = false;
    std::string precondition_failure;
    std::vector<LemmaCheck> checks;

    bool all_passed() const;
    const LemmaCheck* find(std::string_view id) const;
};

/// Evaluates each structural claim directly on g. When g is not
/// strictly Deza with k = b + 1 and beta > 1, every entry is inapplicable and
/// carries the failed precondition.
LemmaReport lemma_suite(const Graph& g);

} // namespace deza

#endif // DEZA_VERIFIER_HPP
