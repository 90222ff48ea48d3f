#include "epg/verify.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "epg/spec_parse.hpp"

namespace epg {

VerifySummary run_verify(const std::vector<GroupSpec>& specs, const OracleOptions& opts) {
    VerifySummary summary;
    for (const auto& spec : specs) {
        ConnectivityReport rep = kappa_enhanced(spec, opts);
        if (rep.kappa_oracle) {
            ++summary.oracled;
            if (rep.verdict == Verdict::disagree) ++summary.disagreements;
            if (rep.variant_printed && *rep.variant_printed != *rep.kappa_oracle)
                ++summary.printed_mismatches;
        }
        summary.rows.push_back(std::move(rep));
    }
    return summary;
}

std::vector<GroupSpec> builtin_catalog() {
    static const char* entries[] = {
        // cyclic: complete enhanced power graphs
        "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12",
        // p-groups
        "Ab(2;1,1)", "Ab(2;1,1,1)", "Ab(2;1,2)", "Ab(2;2,2)", "Ab(2;1,1,2)",
        "Ab(3;1,1)", "Ab(3;1,2)", "Ab(3;2,2)", "Ab(5;1,1)",
        "D8", "D16", "Q8", "Q16", "Q32",
        // one non-cyclic Sylow factor with a coprime cyclic part
        "Z4 x Ab(3;1,1)", "Z9 x Ab(2;1,1)", "Z5 x D8", "Z7 x Ab(2;1,1,1)", "Z5 x Ab(3;1,2)",
        // quaternion factor
        "Z3 x Q8", "Z5 x Q8", "Ab(3;1,1) x Q8",
        // several non-cyclic factors
        "Ab(3;1,1) x Ab(2;1,1)", "Ab(3;1,2) x Ab(2;1,1)", "Ab(5;1,1) x Ab(2;1,1)",
        "Ab(3;1,1) x Ab(2;1,1) x Z5",
    };
    std::vector<GroupSpec> specs;
    for (const char* text : entries) specs.push_back(parse_group_spec(text));
    return specs;
}

std::vector<GroupSpec> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog file: " + path);
    std::vector<GroupSpec> specs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            specs.push_back(parse_group_spec(line));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), e.offset);
        }
    }
    return specs;
}

std::string format_verify_table(const VerifySummary& summary) {
    std::ostringstream os;
    std::size_t spec_width = 4;
    for (const auto& r : summary.rows) spec_width = std::max(spec_width, r.spec_text.size());

    auto cell = [](const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string("-"); };

    os << std::left << std::setw(static_cast<int>(spec_width) + 2) << "spec" << std::right
       << std::setw(7) << "order" << std::setw(9) << "formula" << std::setw(8) << "oracle"
       << std::setw(9) << "printed" << std::setw(11) << "corrected" << "  verdict\n";
    for (const auto& r : summary.rows) {
        os << std::left << std::setw(static_cast<int>(spec_width) + 2) << r.spec_text << std::right
           << std::setw(7) << r.order << std::setw(9) << cell(r.kappa_formula) << std::setw(8)
           << cell(r.kappa_oracle) << std::setw(9) << cell(r.variant_printed) << std::setw(11)
           << cell(r.variant_mr_corrected) << "  " << to_string(r.verdict);
        if (r.variant_printed && r.kappa_oracle && *r.variant_printed != *r.kappa_oracle)
            os << "  [printed variant " << *r.variant_printed << " != oracle " << *r.kappa_oracle << "]";
        os << "\n";
    }
    os << summary.rows.size() << " groups, " << summary.oracled << " checked against the oracle, "
       << summary.disagreements << " disagreements, " << summary.printed_mismatches
       << " printed-variant mismatches\n";
    return os.str();
}

}  // namespace epg
