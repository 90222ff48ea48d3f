#include "epg/kappa.hpp"

#include <algorithm>
#include <stdexcept>

#include "epg/power_graphs.hpp"

namespace epg {

std::vector<GroupElement> roots(const FiniteGroup& G, GroupElement a) {
    G.check_element(a);
    std::vector<GroupElement> out;
    if (a == G.identity()) {
        out.resize(G.order());
        for (int g = 0; g < G.order(); ++g) out[g] = g;
        return out;
    }
    for (int g = 0; g < G.order(); ++g) {
        GroupElement h = g;
        while (h != G.identity()) {
            if (h == a) {
                out.push_back(g);
                break;
            }
            h = G.mul(h, g);
        }
    }
    return out;
}

std::vector<u64> root_counts(const FiniteGroup& G) {
    std::vector<u64> counts(G.order(), 0);
    for (int g = 0; g < G.order(); ++g) {
        counts[G.identity()] += 1;
        GroupElement h = g;
        while (h != G.identity()) {
            counts[h] += 1;
            h = G.mul(h, g);
        }
    }
    return counts;
}

u64 mr(const FiniteGroup& P, u64 p) {
    if (P.order() < 2) throw std::invalid_argument("mr requires a nontrivial p-group");
    auto primes = factorize(static_cast<u64>(P.order()));
    if (primes.size() != 1 || primes[0].first != p)
        throw std::invalid_argument("mr: group of order " + std::to_string(P.order()) + " is not a " +
                                    std::to_string(p) + "-group");
    auto counts = root_counts(P);
    u64 best = 0;
    bool found = false;
    for (int a = 0; a < P.order(); ++a) {
        if (element_order(P, a) != static_cast<int>(p)) continue;
        if (!found || counts[a] < best) best = counts[a];
        found = true;
    }
    if (!found) throw std::logic_error("p-group without an order-p element");
    return best;
}

namespace {

// multiplier * (1 + p^k + p^{2k} + ... + p^{(t1-1)k}), checked.
u64 root_count_geometric(u64 p, std::size_t k, unsigned t1, u64 multiplier) {
    u128 sum = 0;
    u128 power = 1;
    u128 step = 1;
    for (std::size_t i = 0; i < k; ++i) step = checked_mul128(step, p);
    for (unsigned j = 0; j < t1; ++j) {
        sum += checked_mul128(multiplier, power);
        power = checked_mul128(power, step);
    }
    return narrow_u64(sum);
}

}  // namespace

u64 mr_abelian_closed_form(u64 p, const std::vector<unsigned>& exponents) {
    if (!is_prime(p)) throw std::invalid_argument("mr closed form: " + std::to_string(p) + " is not prime");
    if (exponents.size() < 2)
        throw std::invalid_argument("mr closed form excludes the cyclic case: need at least two factors");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 1) throw std::invalid_argument("mr closed form: exponents must be at least 1");
        if (i && exponents[i - 1] > exponents[i])
            throw std::invalid_argument("mr closed form: exponents must be nondecreasing");
    }
    return root_count_geometric(p, exponents.size(), exponents.front(), p - 1);
}

// ---------------------------------------------------------------------------
// The subset minimization shared by tau, mu and the abelian closed form.

namespace {

struct SubsetMinimizer {
    std::vector<u64> sizes;
    std::vector<u64> mrs;
    std::vector<u64> increments;

    u128 term(const std::vector<int>& subset) const {
        const int r = static_cast<int>(sizes.size());
        std::vector<char> in(r, 0);
        for (int i : subset) in[i] = 1;
        u128 prod_subset = 1, prod_plus = 1, prod_mr = 1;
        for (int i = 0; i < r; ++i) {
            if (in[i]) {
                prod_subset = checked_mul128(prod_subset, sizes[i]);
            } else {
                prod_plus = checked_mul128(prod_plus, u128(mrs[i]) + increments[i]);
                prod_mr = checked_mul128(prod_mr, mrs[i]);
            }
        }
        return checked_mul128(prod_subset, prod_plus - prod_mr);
    }

    // Proper subsets only: T = [r] would give a degenerate zero term.
    // Enumeration by size then lexicographic order realizes the tie-break.
    KappaFormulaResult run() const {
        const int r = static_cast<int>(sizes.size());
        KappaFormulaResult best;
        bool have = false;
        u128 best_value = 0;
        std::vector<int> subset;
        for (int count = 0; count < r; ++count) {
            subset.resize(count);
            for (int i = 0; i < count; ++i) subset[i] = i;
            while (true) {
                u128 value = term(subset);
                if (!have || value < best_value) {
                    have = true;
                    best_value = value;
                    best.minimizing_subset = subset;
                }
                // next combination of {0..r-1} of this size
                int i = count - 1;
                while (i >= 0 && subset[i] == r - count + i) --i;
                if (i < 0) break;
                ++subset[i];
                for (int j = i + 1; j < count; ++j) subset[j] = subset[j - 1] + 1;
            }
        }
        best.value = narrow_u64(best_value);
        best.per_factor_mr = mrs;
        return best;
    }
};

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::agree: return "agree";
        case Verdict::disagree: return "disagree";
        case Verdict::oracle_skipped: return "oracle-skipped";
        case Verdict::formula_skipped: return "formula-skipped";
    }
    return "?";
}

KappaFormulaResult tau(const std::vector<FactorStats>& factors) {
    if (factors.empty()) throw std::invalid_argument("tau requires at least one factor");
    SubsetMinimizer m;
    for (const auto& f : factors) {
        if (f.size == 0 || f.mr == 0) throw std::invalid_argument("tau: factor sizes and mr values must be positive");
        m.sizes.push_back(f.size);
        m.mrs.push_back(f.mr);
        m.increments.push_back(1);
    }
    return m.run();
}

KappaFormulaResult mu(const std::vector<FactorStats>& factors, u64 quaternion_order) {
    if (quaternion_order < 8 || (quaternion_order & (quaternion_order - 1)) != 0)
        throw std::invalid_argument("mu: quaternion order must be a power of two at least 8");
    SubsetMinimizer m;
    for (const auto& f : factors) {
        if (f.size == 0 || f.mr == 0) throw std::invalid_argument("mu: factor sizes and mr values must be positive");
        m.sizes.push_back(f.size);
        m.mrs.push_back(f.mr);
        m.increments.push_back(1);
    }
    m.sizes.push_back(quaternion_order);
    m.mrs.push_back(2);  // fixed by the quaternion side condition, not Roots
    m.increments.push_back(2);
    return m.run();
}

// ---------------------------------------------------------------------------
// Witness construction

namespace {

GroupElement unique_involution(const FiniteGroup& G) {
    GroupElement found = -1;
    for (int g = 0; g < G.order(); ++g) {
        if (element_order(G, g) != 2) continue;
        if (found >= 0) throw std::logic_error("group has more than one involution");
        found = g;
    }
    if (found < 0) throw std::logic_error("group has no involution");
    return found;
}

// Minimum-size component of `whole` restricted to the complement of
// `removed`, in original vertex indices; ties go to the component holding
// the smallest vertex.
std::vector<int> min_component_after_removal(const SimpleGraph& whole, const std::vector<int>& removed) {
    auto reduced = remove_vertices(whole, removed);
    std::vector<int> kept;
    std::vector<char> dead(whole.size(), 0);
    for (int v : removed) dead[v] = 1;
    for (int v = 0; v < whole.size(); ++v)
        if (!dead[v]) kept.push_back(v);

    auto comps = connected_components(reduced);
    std::size_t pick = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() < comps[pick].size()) pick = i;
    std::vector<int> out;
    out.reserve(comps[pick].size());
    for (int v : comps[pick]) out.push_back(kept[v]);
    return out;
}

std::vector<GroupElement> product_set(const FiniteGroup& G,
                                      const std::vector<std::vector<GroupElement>>& coordinate_sets) {
    std::vector<GroupElement> acc{G.identity()};
    for (const auto& set : coordinate_sets) {
        std::vector<GroupElement> next;
        next.reserve(acc.size() * set.size());
        for (GroupElement a : acc)
            for (GroupElement m : set) next.push_back(G.mul(a, m));
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    if (std::adjacent_find(acc.begin(), acc.end()) != acc.end())
        throw std::logic_error("coordinate sets do not multiply injectively");
    return acc;
}

}  // namespace

std::vector<GroupElement> witness_separating_set(const FiniteGroup& G, const NilpotentDecomposition& d,
                                                 const std::vector<int>& T) {
    const int r = static_cast<int>(d.factors.size()) + (d.quaternion ? 1 : 0);
    if (r == 0)
        throw std::invalid_argument("witness construction needs a non-cyclic group (no separating set exists)");
    std::vector<int> subset = T;
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw std::invalid_argument("T contains a repeated index");
    for (int i : subset)
        if (i < 0 || i >= r) throw std::out_of_range("T index out of range");
    if (static_cast<int>(subset.size()) == r)
        throw std::invalid_argument("T must be a proper subset of the factor indices");

    std::vector<std::vector<GroupElement>> big{d.cyclic_part}, small{d.cyclic_part};
    for (int i = 0; i < r; ++i) {
        const bool quat = d.quaternion && i == r - 1;
        const SylowPart& part = quat ? *d.quaternion : d.factors[i];
        if (std::binary_search(subset.begin(), subset.end(), i)) {
            big.push_back(part.members);
            small.push_back(part.members);
            continue;
        }
        const FiniteGroup& P = part.group;
        std::vector<int> separator;
        if (quat) {
            separator = {P.identity(), unique_involution(P)};
            std::sort(separator.begin(), separator.end());
        } else {
            separator = {P.identity()};
        }
        std::vector<int> component = min_component_after_removal(enhanced_power_graph(P), separator);

        std::vector<GroupElement> u_parent, w_parent;
        for (int v : separator) u_parent.push_back(part.members[v]);
        for (int v : component) {
            u_parent.push_back(part.members[v]);
            w_parent.push_back(part.members[v]);
        }
        std::sort(u_parent.begin(), u_parent.end());
        std::sort(w_parent.begin(), w_parent.end());
        big.push_back(std::move(u_parent));
        small.push_back(std::move(w_parent));
    }

    auto all = product_set(G, big);
    auto inner = product_set(G, small);
    std::vector<GroupElement> out;
    out.reserve(all.size() - inner.size());
    std::set_difference(all.begin(), all.end(), inner.begin(), inner.end(), std::back_inserter(out));
    return out;
}

std::vector<GroupElement> witness_separating_set(const GroupSpec& spec, const std::vector<int>& T) {
    FiniteGroup G = build_group(spec);
    if (!is_nilpotent(G))
        throw std::invalid_argument("witness construction requires a nilpotent group; " + spec.text() +
                                    " is not nilpotent");
    return witness_separating_set(G, sylow_decomposition(G), T);
}

// ---------------------------------------------------------------------------
// Closed forms and dispatch

u64 kappa_abelian_closed_form(const GroupSpec& spec, AbelianVariant variant) {
    validate_spec(spec);
    u64 n = 1;
    std::vector<const GroupAtom*> abelian;
    for (const auto& atom : spec.factors) {
        switch (atom.kind) {
            case GroupAtom::Kind::Cyclic:
                if (gcd(n, atom.n) != 1)
                    throw std::invalid_argument(
                        "closed form: cyclic factors must have pairwise coprime orders");
                n = checked_mul(n, atom.n);
                break;
            case GroupAtom::Kind::AbelianP:
                abelian.push_back(&atom);
                break;
            default:
                throw std::invalid_argument("closed form applies only to abelian groups "
                                            "(cyclic and abelian p-group atoms)");
        }
    }
    if (abelian.empty())
        throw std::invalid_argument("closed form needs at least one abelian p-group factor with k >= 2; "
                                    "a cyclic group has a complete enhanced power graph");
    std::vector<FactorStats> stats;
    for (const auto* atom : abelian) {
        if (atom->exponents.size() < 2)
            throw std::invalid_argument("closed form requires k >= 2 cyclic factors per prime");
        for (const auto* other : abelian)
            if (other != atom && other->prime == atom->prime)
                throw std::invalid_argument("closed form: abelian p-group factors must use distinct primes");
        if (n % atom->prime == 0)
            throw std::invalid_argument("closed form: gcd(n, p_i) = 1 violated for p = " +
                                        std::to_string(atom->prime));
        u64 size = 1;
        for (unsigned t : atom->exponents) size = checked_mul(size, checked_pow(atom->prime, t));
        u64 quantity = variant == AbelianVariant::mr_corrected
                           ? mr_abelian_closed_form(atom->prime, atom->exponents)
                           : root_count_geometric(atom->prime, atom->exponents.size(),
                                                  atom->exponents.front(), 1);
        stats.push_back({size, quantity});
    }
    return narrow_u64(checked_mul128(n, tau(stats).value));
}

ConnectivityReport kappa_enhanced(const GroupSpec& spec, const OracleOptions& opts) {
    FiniteGroup G = build_group(spec);
    if (!is_nilpotent(G))
        throw std::invalid_argument("enhanced power graph formulas require a nilpotent group; " +
                                    spec.text() + " is not nilpotent");

    ConnectivityReport rep;
    rep.spec_text = spec.text();
    rep.order = static_cast<u64>(G.order());

    NilpotentDecomposition d = sylow_decomposition(G);
    if (d.factors.empty() && !d.quaternion) {
        rep.complete_graph = true;  // cyclic group
        rep.kappa_formula = rep.order - 1;
    } else {
        std::vector<FactorStats> stats;
        for (const auto& part : d.factors)
            stats.push_back({static_cast<u64>(part.group.order()), mr(part.group, part.prime)});
        KappaFormulaResult f =
            d.quaternion ? mu(stats, static_cast<u64>(d.quaternion->group.order())) : tau(stats);
        rep.kappa_formula = narrow_u64(checked_mul128(d.cyclic_order, f.value));
        rep.witness_set = witness_separating_set(G, d, f.minimizing_subset);
        rep.formula = std::move(f);
    }

    try {
        rep.variant_printed = kappa_abelian_closed_form(spec, AbelianVariant::printed);
        rep.variant_mr_corrected = kappa_abelian_closed_form(spec, AbelianVariant::mr_corrected);
    } catch (const std::invalid_argument&) {
        // not in the abelian closed-form shape; variants stay empty
    }

    if (opts.run && rep.order <= opts.budget) {
        auto oracle = vertex_connectivity(enhanced_power_graph(G));
        rep.kappa_oracle = static_cast<u64>(oracle.kappa);
        rep.oracle_witness = std::move(oracle.witness);
        rep.verdict = *rep.kappa_oracle == *rep.kappa_formula ? Verdict::agree : Verdict::disagree;
    } else {
        rep.verdict = Verdict::oracle_skipped;
    }
    return rep;
}

}  // namespace epg
