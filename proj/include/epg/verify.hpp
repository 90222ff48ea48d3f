#pragma once

#include <string>
#include <vector>

#include "epg/kappa.hpp"

namespace epg {

struct VerifySummary {
    std::vector<ConnectivityReport> rows;
    int oracled = 0;
    int disagreements = 0;       // tau/mu (mr-corrected) formula vs oracle
    int printed_mismatches = 0;  // printed abelian variant vs oracle
};

// Formula-vs-oracle sweep; nilpotent specs only.
VerifySummary run_verify(const std::vector<GroupSpec>& specs, const OracleOptions& opts);

// Cyclic groups, p-groups (abelian, dihedral, quaternion) and coprime
// composites covering every formula dispatch case.
std::vector<GroupSpec> builtin_catalog();

// One spec per line; '#' starts a comment; blank lines ignored.
std::vector<GroupSpec> load_catalog_file(const std::string& path);

std::string format_verify_table(const VerifySummary& summary);

}  // namespace epg
