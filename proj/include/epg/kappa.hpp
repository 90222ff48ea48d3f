#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epg/graph.hpp"
#include "epg/group.hpp"
#include "epg/numtheory.hpp"

namespace epg {

// Roots(a) = { g in G : a lies in <g> }.
std::vector<GroupElement> roots(const FiniteGroup& G, GroupElement a);

// |Roots(g)| for every g, computed in one sweep over all cyclic subgroups.
std::vector<u64> root_counts(const FiniteGroup& G);

// Minimum |Roots(a)| over the order-p elements of a nontrivial p-group; the
// minimum size of a connected component of the deleted enhanced power graph
// for non-cyclic, non-quaternion p-groups.
u64 mr(const FiniteGroup& P, u64 p);

// (p-1)(p^{t_1 k} - 1)/(p^k - 1) for Z_{p^{t_1}} x ... x Z_{p^{t_k}} with
// k >= 2 factors; equals mr of that group.
u64 mr_abelian_closed_form(u64 p, const std::vector<unsigned>& exponents);

struct FactorStats {
    u64 size;  // |P_i|
    u64 mr;    // mr(P_i)
};

struct KappaFormulaResult {
    u64 value = 0;
    std::vector<int> minimizing_subset;  // 0-based factor indices; quaternion coordinate last
    std::vector<u64> per_factor_mr;
};

// min over proper subsets T of
//   prod_{i in T} |P_i| * ( prod_{i notin T} (mr_i + 1) - prod_{i notin T} mr_i ).
// Ties broken by smaller |T|, then lexicographically smaller T.
KappaFormulaResult tau(const std::vector<FactorStats>& factors);

// Same minimization with one extra final coordinate for a generalized
// quaternion factor, which contributes its group order inside T and the
// fixed pair (mr = 2, increment = 2) outside T.
KappaFormulaResult mu(const std::vector<FactorStats>& factors, u64 quaternion_order);

enum class Verdict { agree, disagree, oracle_skipped, formula_skipped };
const char* to_string(Verdict v);

struct OracleOptions {
    bool run = true;
    u64 budget = 600;  // largest group order the brute-force cut is attempted on
};

struct ConnectivityReport {
    std::string spec_text;
    u64 order = 0;
    bool complete_graph = false;               // cyclic group; kappa = order - 1
    std::optional<KappaFormulaResult> formula; // minimization detail (absent when complete)
    std::optional<u64> kappa_formula;
    std::optional<u64> kappa_oracle;
    std::optional<CutWitness> oracle_witness;
    std::optional<std::vector<GroupElement>> witness_set;  // constructive separating set
    std::optional<u64> variant_printed;        // abelian closed form exactly as typeset
    std::optional<u64> variant_mr_corrected;   // abelian closed form with the (p-1) factor
    Verdict verdict = Verdict::oracle_skipped;
};

// Dispatch: cyclic groups are complete (kappa = |G| - 1); otherwise
// kappa = n * tau without a quaternion Sylow subgroup and n * mu with one.
// Requires a nilpotent group.
ConnectivityReport kappa_enhanced(const GroupSpec& spec, const OracleOptions& opts = {});

enum class AbelianVariant { printed, mr_corrected };

// Closed form for Z_{p_1^{t_11}} x ... x Z_n. The printed variant uses
// (p^{t_1 k} - 1)/(p^k - 1) per factor, the corrected variant multiplies in
// the (p-1) factor (making it n * tau). The two disagree in general; the
// oracle adjudicates.
u64 kappa_abelian_closed_form(const GroupSpec& spec, AbelianVariant variant);

// Constructive separating set for a proper subset T of the decomposition's
// factor indices: identity separators and minimum components outside T
// ({identity, involution} and the proper graph on a quaternion coordinate),
// whole factors inside T, crossed with the full cyclic part. Its size is the
// T-term of the tau/mu minimization times the cyclic order.
std::vector<GroupElement> witness_separating_set(const GroupSpec& spec, const std::vector<int>& T);
std::vector<GroupElement> witness_separating_set(const FiniteGroup& G, const NilpotentDecomposition& d,
                                                 const std::vector<int>& T);

}  // namespace epg
