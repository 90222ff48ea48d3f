#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epg/numtheory.hpp"

namespace epg {

// Elements are dense indices into the owning group's Cayley table.
using GroupElement = int;

// One factor of a group description. Groups are direct products of atoms.
struct GroupAtom {
    enum class Kind { Cyclic, AbelianP, Dihedral, Quaternion, Table };

    Kind kind = Kind::Cyclic;
    u64 n = 1;                        // Cyclic: order; Dihedral/Quaternion: group order
    u64 prime = 0;                    // AbelianP: the prime p
    std::vector<unsigned> exponents;  // AbelianP: t_1 <= ... <= t_k
    std::string path;                 // Table: file with an explicit Cayley table

    u64 order() const;
    std::string text() const;
};

struct GroupSpec {
    std::vector<GroupAtom> factors;

    u64 order() const;
    std::string text() const;  // canonical form; parse(text()) == *this
};

bool operator==(const GroupAtom& a, const GroupAtom& b);
bool operator==(const GroupSpec& a, const GroupSpec& b);

// Throws std::invalid_argument naming the violated invariant.
void validate_spec(const GroupSpec& spec);

// A finite group as an explicit order x order multiplication table.
// Element 0 is always the identity for groups built by this library;
// arbitrary tables are normalized to have the identity at the stored index.
class FiniteGroup {
public:
    enum class Validation {
        Basic,  // identity present, labels unique (programmatic constructions)
        Full    // additionally Latin-square, inverses, associativity (external tables)
    };

    FiniteGroup(std::vector<std::uint16_t> table, std::vector<std::string> labels,
                std::optional<GroupSpec> provenance = std::nullopt,
                Validation validation = Validation::Basic);

    int order() const { return order_; }
    GroupElement identity() const { return identity_; }

    GroupElement mul(GroupElement a, GroupElement b) const {
        return table_[static_cast<std::size_t>(a) * order_ + b];
    }
    GroupElement inverse(GroupElement a) const;

    const std::string& label(GroupElement g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<GroupSpec>& atoms() const { return atoms_; }

    void check_element(GroupElement g) const;

private:
    int order_;
    std::vector<std::uint16_t> table_;  // row-major: table_[a * order_ + b] = a∘b
    GroupElement identity_;
    std::vector<std::string> labels_;
    std::optional<GroupSpec> atoms_;
};

// The unique Sylow p-subgroup of a nilpotent group, kept with its embedding.
struct SylowPart {
    u64 prime;
    std::vector<GroupElement> members;  // parent indices, ascending; members[i] realizes group element i
    FiniteGroup group;                  // reindexed subgroup table, labels inherited from the parent
};

// Nilpotent structure: cyclic Sylow subgroups merged into one coprime cyclic
// part of order n, a generalized quaternion 2-Sylow kept separate, and the
// remaining (non-cyclic, non-quaternion) Sylow subgroups as factors.
struct NilpotentDecomposition {
    u64 cyclic_order = 1;
    std::vector<GroupElement> cyclic_part;  // elements of the order-n subgroup, ascending
    std::vector<SylowPart> factors;         // primes ascending
    std::optional<SylowPart> quaternion;
};

FiniteGroup build_group(const GroupSpec& spec);
FiniteGroup load_table_file(const std::string& path);

int element_order(const FiniteGroup& G, GroupElement g);
std::vector<GroupElement> cyclic_subgroup(const FiniteGroup& G, GroupElement g);  // ascending
std::vector<GroupElement> center(const FiniteGroup& G);

// Upper central series: repeatedly quotient by the center until the quotient
// is trivial (nilpotent) or the center stalls at the identity (not).
bool is_nilpotent(const FiniteGroup& G);

// Per-prime Sylow subgroups of a nilpotent group, primes ascending.
// Rejects groups whose p-power-order elements are not closed under the
// group law (exactly the non-nilpotent case).
std::vector<SylowPart> sylow_subgroups(const FiniteGroup& G);

NilpotentDecomposition sylow_decomposition(const FiniteGroup& G);

}  // namespace epg
