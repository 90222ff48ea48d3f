#include "epg/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace epg {

namespace {

constexpr u64 kMaxOrder = 65535;  // table entries are uint16_t

bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

u64 GroupAtom::order() const {
    switch (kind) {
        case Kind::Cyclic:
        case Kind::Dihedral:
        case Kind::Quaternion:
            return n;
        case Kind::AbelianP: {
            u64 o = 1;
            for (unsigned t : exponents) o = checked_mul(o, checked_pow(prime, t));
            return o;
        }
        case Kind::Table:
            throw std::logic_error("order of a table atom is known only after loading");
    }
    throw std::logic_error("unreachable");
}

std::string GroupAtom::text() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Cyclic: os << "Z" << n; break;
        case Kind::Dihedral: os << "D" << n; break;
        case Kind::Quaternion: os << "Q" << n; break;
        case Kind::AbelianP: {
            os << "Ab(" << prime << ";";
            for (std::size_t i = 0; i < exponents.size(); ++i) {
                if (i) os << ",";
                os << exponents[i];
            }
            os << ")";
            break;
        }
        case Kind::Table: os << "Table(" << path << ")"; break;
    }
    return os.str();
}

u64 GroupSpec::order() const {
    u64 o = 1;
    for (const auto& a : factors) o = checked_mul(o, a.order());
    return o;
}

std::string GroupSpec::text() const {
    std::vector<std::string> parts;
    parts.reserve(factors.size());
    for (const auto& a : factors) parts.push_back(a.text());
    return join(parts, " x ");
}

bool operator==(const GroupAtom& a, const GroupAtom& b) {
    return a.kind == b.kind && a.n == b.n && a.prime == b.prime && a.exponents == b.exponents &&
           a.path == b.path;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors == b.factors; }

void validate_spec(const GroupSpec& spec) {
    if (spec.factors.empty()) throw std::invalid_argument("group spec must contain at least one atom");
    for (const auto& atom : spec.factors) {
        switch (atom.kind) {
            case GroupAtom::Kind::Cyclic:
                if (atom.n < 1) throw std::invalid_argument("cyclic order must be at least 1");
                break;
            case GroupAtom::Kind::Dihedral:
                if (atom.n < 2 || atom.n % 2 != 0)
                    throw std::invalid_argument("dihedral order must be even and at least 2");
                break;
            case GroupAtom::Kind::Quaternion:
                if (!is_power_of_two(atom.n) || atom.n < 8)
                    throw std::invalid_argument("quaternion order must be a power of two at least 8");
                break;
            case GroupAtom::Kind::AbelianP: {
                if (!is_prime(atom.prime))
                    throw std::invalid_argument("abelian p-group base " + std::to_string(atom.prime) +
                                                " is not prime");
                if (atom.exponents.empty())
                    throw std::invalid_argument("abelian p-group needs at least one exponent");
                for (std::size_t i = 0; i < atom.exponents.size(); ++i) {
                    if (atom.exponents[i] < 1)
                        throw std::invalid_argument("abelian p-group exponents must be at least 1");
                    if (i && atom.exponents[i - 1] > atom.exponents[i])
                        throw std::invalid_argument("abelian p-group exponents must be nondecreasing");
                }
                break;
            }
            case GroupAtom::Kind::Table:
                if (atom.path.empty()) throw std::invalid_argument("table atom needs a file path");
                break;
        }
    }
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

void validate_latin(const std::vector<std::uint16_t>& t, int n) {
    std::vector<char> seen(n);
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            int v = t[static_cast<std::size_t>(r) * n + c];
            if (seen[v]) throw std::invalid_argument("table is not a group: row " + std::to_string(r) +
                                                     " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            int v = t[static_cast<std::size_t>(r) * n + c];
            if (seen[v]) throw std::invalid_argument("table is not a group: column " + std::to_string(c) +
                                                     " is not a permutation");
            seen[v] = 1;
        }
    }
}

void validate_inverses(const std::vector<std::uint16_t>& t, int n, int e) {
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b)
            found = t[static_cast<std::size_t>(a) * n + b] == e && t[static_cast<std::size_t>(b) * n + a] == e;
        if (!found)
            throw std::invalid_argument("table is not a group: element " + std::to_string(a) +
                                        " has no two-sided inverse");
    }
}

// Light's associativity test: a Latin square with identity is associative iff
// (x∘g)∘y = x∘(g∘y) holds for every g in a generating set.
void validate_associativity(const std::vector<std::uint16_t>& t, int n, int e) {
    auto mul = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };

    std::vector<char> closed(n, 0);
    std::vector<int> members;
    closed[e] = 1;
    members.push_back(e);
    std::vector<int> generators;
    while (static_cast<int>(members.size()) < n) {
        int g = 0;
        while (closed[g]) ++g;
        generators.push_back(g);
        std::vector<int> queue{g};
        closed[g] = 1;
        members.push_back(g);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (int w : {mul(u, members[i]), mul(members[i], u)}) {
                    if (!closed[w]) {
                        closed[w] = 1;
                        members.push_back(w);
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    for (int g : generators)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (mul(mul(x, g), y) != mul(x, mul(g, y)))
                    throw std::invalid_argument("table is not a group: associativity fails at generator " +
                                                std::to_string(g));
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::uint16_t> table, std::vector<std::string> labels,
                         std::optional<GroupSpec> provenance, Validation validation)
    : order_(static_cast<int>(labels.size())),
      table_(std::move(table)),
      identity_(-1),
      labels_(std::move(labels)),
      atoms_(std::move(provenance)) {
    if (order_ < 1) throw std::invalid_argument("group must have at least one element");
    if (static_cast<u64>(order_) > kMaxOrder)
        throw std::invalid_argument("group order exceeds " + std::to_string(kMaxOrder));
    if (table_.size() != static_cast<std::size_t>(order_) * order_)
        throw std::invalid_argument("table size does not match group order");
    if (*std::max_element(table_.begin(), table_.end()) >= order_)
        throw std::invalid_argument("table entry out of range");

    std::unordered_set<std::string> distinct(labels_.begin(), labels_.end());
    if (static_cast<int>(distinct.size()) != order_)
        throw std::invalid_argument("element labels must be unique");

    for (int e = 0; e < order_ && identity_ < 0; ++e) {
        if (mul(e, e) != e) continue;
        bool ok = true;
        for (int g = 0; g < order_ && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("table has no identity element");

    if (validation == Validation::Full) {
        validate_latin(table_, order_);
        validate_inverses(table_, order_, identity_);
        validate_associativity(table_, order_, identity_);
    }
}

GroupElement FiniteGroup::inverse(GroupElement a) const {
    check_element(a);
    for (int b = 0; b < order_; ++b)
        if (mul(a, b) == identity_) return b;
    throw std::logic_error("element has no inverse");
}

void FiniteGroup::check_element(GroupElement g) const {
    if (g < 0 || g >= order_) throw std::out_of_range("element index out of range");
}

// ---------------------------------------------------------------------------
// Construction from specs

namespace {

struct AtomGroup {
    std::vector<std::uint16_t> table;
    std::vector<std::string> labels;
};

std::vector<std::uint16_t> cyclic_table(int n) {
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>((i + j) % n);
    return t;
}

// Direct product law on flat indices; the first factor is the most
// significant digit, so tuple order is lexicographic.
std::vector<std::uint16_t> product_table(const std::vector<std::uint16_t>& ta, int na,
                                         const std::vector<std::uint16_t>& tb, int nb) {
    std::size_t n = static_cast<std::size_t>(na) * nb;
    std::vector<std::uint16_t> t(n * n);
    for (int a = 0; a < na; ++a) {
        const std::uint16_t* ra = &ta[static_cast<std::size_t>(a) * na];
        for (int b = 0; b < nb; ++b) {
            std::uint16_t* row = &t[(static_cast<std::size_t>(a) * nb + b) * n];
            const std::uint16_t* rb = &tb[static_cast<std::size_t>(b) * nb];
            for (int c = 0; c < na; ++c) {
                std::uint32_t base = static_cast<std::uint32_t>(ra[c]) * nb;
                std::uint16_t* cell = row + static_cast<std::size_t>(c) * nb;
                for (int d = 0; d < nb; ++d) cell[d] = static_cast<std::uint16_t>(base + rb[d]);
            }
        }
    }
    return t;
}

AtomGroup build_cyclic(u64 n) {
    AtomGroup g;
    g.table = cyclic_table(static_cast<int>(n));
    g.labels.reserve(n);
    for (u64 i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
    return g;
}

AtomGroup build_abelian_p(u64 p, const std::vector<unsigned>& exponents) {
    std::vector<int> radix;
    for (unsigned t : exponents) {
        u64 q = checked_pow(p, t);
        if (q > kMaxOrder) throw std::invalid_argument("abelian p-group component order exceeds table limit");
        radix.push_back(static_cast<int>(q));
    }
    AtomGroup g;
    g.table = {0};
    u64 n = 1;
    for (int q : radix) {
        n = checked_mul(n, static_cast<u64>(q));
        if (n > kMaxOrder) throw std::invalid_argument("group order exceeds " + std::to_string(kMaxOrder));
        g.table = product_table(g.table, static_cast<int>(n) / q, cyclic_table(q), q);
    }
    g.labels.reserve(n);
    for (u64 v = 0; v < n; ++v) {
        u64 rest = v;
        std::vector<std::string> digits(radix.size());
        for (std::size_t i = radix.size(); i-- > 0;) {
            digits[i] = std::to_string(rest % radix[i]);
            rest /= radix[i];
        }
        g.labels.push_back("(" + join(digits, ",") + ")");
    }
    return g;
}

// Dihedral group of order 2m: s^a r^i with r^m = s^2 = e, s r = r^-1 s.
AtomGroup build_dihedral(u64 order) {
    int m = static_cast<int>(order / 2);
    int n = 2 * m;
    AtomGroup g;
    g.table.resize(static_cast<std::size_t>(n) * n);
    auto idx = [m](int a, int i) { return a * m + i; };
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < m; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < m; ++j) {
                    int rot = b == 0 ? (i + j) % m : (j - i + m) % m;
                    g.table[static_cast<std::size_t>(idx(a, i)) * n + idx(b, j)] =
                        static_cast<std::uint16_t>(idx(a ^ b, rot));
                }
    g.labels.resize(n);
    for (int i = 0; i < m; ++i) {
        g.labels[idx(0, i)] = "r" + std::to_string(i);
        g.labels[idx(1, i)] = "sr" + std::to_string(i);
    }
    return g;
}

// Generalized quaternion group of order 2^k: elements x^a and x^a y, where
// x has order 2^(k-1), y^2 = x^(2^(k-2)) and y x y^-1 = x^-1.
AtomGroup build_quaternion(u64 order) {
    int m = static_cast<int>(order / 2);  // order of x
    int half = m / 2;
    int n = 2 * m;
    AtomGroup g;
    g.table.resize(static_cast<std::size_t>(n) * n);
    auto idx = [m](int a, int b) { return b * m + a; };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < 2; ++d) {
                    int ra, rb;
                    if (b == 0) {
                        ra = (a + c) % m;
                        rb = d;
                    } else if (d == 0) {
                        ra = (a - c + m) % m;
                        rb = 1;
                    } else {
                        ra = (a - c + m + half) % m;
                        rb = 0;
                    }
                    g.table[static_cast<std::size_t>(idx(a, b)) * n + idx(c, d)] =
                        static_cast<std::uint16_t>(idx(ra, rb));
                }
    g.labels.resize(n);
    for (int a = 0; a < m; ++a) {
        g.labels[idx(a, 0)] = "x" + std::to_string(a);
        g.labels[idx(a, 1)] = "x" + std::to_string(a) + "y";
    }
    return g;
}

AtomGroup build_atom(const GroupAtom& atom) {
    switch (atom.kind) {
        case GroupAtom::Kind::Cyclic: return build_cyclic(atom.n);
        case GroupAtom::Kind::AbelianP: return build_abelian_p(atom.prime, atom.exponents);
        case GroupAtom::Kind::Dihedral: return build_dihedral(atom.n);
        case GroupAtom::Kind::Quaternion: return build_quaternion(atom.n);
        case GroupAtom::Kind::Table: {
            FiniteGroup loaded = load_table_file(atom.path);
            AtomGroup g;
            g.labels = loaded.labels();
            g.table.resize(static_cast<std::size_t>(loaded.order()) * loaded.order());
            for (int a = 0; a < loaded.order(); ++a)
                for (int b = 0; b < loaded.order(); ++b)
                    g.table[static_cast<std::size_t>(a) * loaded.order() + b] =
                        static_cast<std::uint16_t>(loaded.mul(a, b));
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

FiniteGroup load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    long long n = 0;
    if (!(in >> n) || n < 1 || static_cast<u64>(n) > kMaxOrder)
        throw std::invalid_argument("table file " + path + ": bad order line");
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (auto& cell : table) {
        long long v;
        if (!(in >> v) || v < 0 || v >= n)
            throw std::invalid_argument("table file " + path + ": entries must be indices in [0, order)");
        cell = static_cast<std::uint16_t>(v);
    }
    for (int j = 0; j < n; ++j)
        if (table[j] != j || table[static_cast<std::size_t>(j) * n] != j)
            throw std::invalid_argument("table file " + path + ": element 0 must be the identity");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (long long i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return FiniteGroup(std::move(table), std::move(labels), std::nullopt, FiniteGroup::Validation::Full);
}

FiniteGroup build_group(const GroupSpec& spec) {
    validate_spec(spec);
    // Check orders before allocating any table (table atoms are capped on load).
    u64 bound = 1;
    for (const auto& a : spec.factors) {
        if (a.kind == GroupAtom::Kind::Table) continue;
        u64 ao = a.order();
        if (ao > kMaxOrder || (bound = checked_mul(bound, ao)) > kMaxOrder)
            throw std::invalid_argument("group order exceeds " + std::to_string(kMaxOrder));
    }
    std::vector<AtomGroup> atoms;
    atoms.reserve(spec.factors.size());
    u64 order = 1;
    for (const auto& a : spec.factors) {
        atoms.push_back(build_atom(a));
        order = checked_mul(order, atoms.back().labels.size());
        if (order > kMaxOrder) throw std::invalid_argument("group order exceeds " + std::to_string(kMaxOrder));
    }

    std::vector<std::uint16_t> table = {0};
    u64 folded = 1;
    for (const auto& a : atoms) {
        u64 na = a.labels.size();
        table = product_table(table, static_cast<int>(folded), a.table, static_cast<int>(na));
        folded *= na;
    }

    std::vector<std::string> labels;
    labels.reserve(order);
    if (atoms.size() == 1) {
        labels = atoms[0].labels;
    } else {
        for (u64 v = 0; v < order; ++v) {
            u64 rest = v;
            std::vector<std::string> digits(atoms.size());
            for (std::size_t i = atoms.size(); i-- > 0;) {
                u64 na = atoms[i].labels.size();
                digits[i] = atoms[i].labels[rest % na];
                rest /= na;
            }
            labels.push_back("(" + join(digits, ",") + ")");
        }
    }
    return FiniteGroup(std::move(table), std::move(labels), spec, FiniteGroup::Validation::Basic);
}

// ---------------------------------------------------------------------------
// Element and structure queries

int element_order(const FiniteGroup& G, GroupElement g) {
    G.check_element(g);
    int o = 1;
    GroupElement h = g;
    while (h != G.identity()) {
        h = G.mul(h, g);
        ++o;
    }
    return o;
}

std::vector<GroupElement> cyclic_subgroup(const FiniteGroup& G, GroupElement g) {
    G.check_element(g);
    std::vector<GroupElement> members{G.identity()};
    GroupElement h = g;
    while (h != G.identity()) {
        members.push_back(h);
        h = G.mul(h, g);
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<GroupElement> center(const FiniteGroup& G) {
    std::vector<GroupElement> z;
    for (int a = 0; a < G.order(); ++a) {
        bool central = true;
        for (int b = 0; b < G.order() && central; ++b) central = G.mul(a, b) == G.mul(b, a);
        if (central) z.push_back(a);
    }
    return z;
}

bool is_nilpotent(const FiniteGroup& G) {
    // Current quotient as a raw table; labels are irrelevant here.
    int n = G.order();
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(G.mul(a, b));

    while (n > 1) {
        auto mul = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
        std::vector<int> z;
        for (int a = 0; a < n; ++a) {
            bool central = true;
            for (int b = 0; b < n && central; ++b) central = mul(a, b) == mul(b, a);
            if (central) z.push_back(a);
        }
        if (static_cast<int>(z.size()) == n) return true;
        if (z.size() == 1) return false;

        // Quotient by the (normal, central) subgroup z via explicit cosets.
        std::vector<int> coset_of(n);
        for (int g = 0; g < n; ++g) {
            int rep = n;
            for (int zz : z) rep = std::min(rep, static_cast<int>(mul(zz, g)));
            coset_of[g] = rep;
        }
        std::vector<int> reps;
        std::vector<int> coset_index(n, -1);
        for (int g = 0; g < n; ++g) {
            if (coset_of[g] == g && coset_index[g] < 0) {
                coset_index[g] = static_cast<int>(reps.size());
                reps.push_back(g);
            }
        }
        int qn = static_cast<int>(reps.size());
        std::vector<std::uint16_t> qt(static_cast<std::size_t>(qn) * qn);
        for (int i = 0; i < qn; ++i)
            for (int j = 0; j < qn; ++j)
                qt[static_cast<std::size_t>(i) * qn + j] =
                    static_cast<std::uint16_t>(coset_index[coset_of[mul(reps[i], reps[j])]]);
        t = std::move(qt);
        n = qn;
    }
    return true;
}

std::vector<SylowPart> sylow_subgroups(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<int> order_of(n);
    for (int g = 0; g < n; ++g) order_of[g] = element_order(G, g);

    std::vector<SylowPart> parts;
    for (auto [p, e] : factorize(static_cast<u64>(n))) {
        std::vector<GroupElement> members;
        for (int g = 0; g < n; ++g) {
            int o = order_of[g];
            while (o % static_cast<int>(p) == 0) o /= static_cast<int>(p);
            if (o == 1) members.push_back(g);
        }
        u64 expected = checked_pow(p, static_cast<unsigned>(e));
        if (members.size() != expected)
            throw std::invalid_argument("group is not nilpotent: elements of " + std::to_string(p) +
                                        "-power order do not form the Sylow subgroup");
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
        std::size_t m = members.size();
        std::vector<std::uint16_t> table(m * m);
        std::vector<std::string> labels(m);
        for (std::size_t i = 0; i < m; ++i) {
            labels[i] = G.label(members[i]);
            for (std::size_t j = 0; j < m; ++j) {
                int prod = G.mul(members[i], members[j]);
                if (local[prod] < 0)
                    throw std::invalid_argument("group is not nilpotent: elements of " + std::to_string(p) +
                                                "-power order are not closed under the group law");
                table[i * m + j] = static_cast<std::uint16_t>(local[prod]);
            }
        }
        parts.push_back(SylowPart{p, std::move(members),
                                  FiniteGroup(std::move(table), std::move(labels))});
    }
    return parts;
}

NilpotentDecomposition sylow_decomposition(const FiniteGroup& G) {
    NilpotentDecomposition d;
    d.cyclic_part = {G.identity()};

    for (auto& part : sylow_subgroups(G)) {
        const FiniteGroup& P = part.group;
        bool cyclic = false;
        int involutions = 0;
        for (int g = 0; g < P.order(); ++g) {
            int o = element_order(P, g);
            if (o == P.order()) cyclic = true;
            if (o == 2) ++involutions;
        }
        if (cyclic) {
            d.cyclic_order = checked_mul(d.cyclic_order, static_cast<u64>(P.order()));
            std::vector<GroupElement> next;
            next.reserve(d.cyclic_part.size() * part.members.size());
            for (GroupElement a : d.cyclic_part)
                for (GroupElement m : part.members) next.push_back(G.mul(a, m));
            std::sort(next.begin(), next.end());
            d.cyclic_part = std::move(next);
        } else if (part.prime == 2 && involutions == 1 && P.order() >= 8) {
            d.quaternion = std::move(part);
        } else {
            d.factors.push_back(std::move(part));
        }
    }

    if (d.quaternion && d.cyclic_order % 2 == 0)
        throw std::logic_error("quaternion Sylow subgroup cannot coexist with an even cyclic part");
    if (d.cyclic_part.size() != d.cyclic_order)
        throw std::logic_error("cyclic part does not have the expected order");
    return d;
}

}  // namespace epg
