#include "epg/spec_parse.hpp"

#include <cctype>
#include <charconv>

namespace epg {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool try_consume(char c) {
        if (done() || peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
    }

    bool try_keyword(std::string_view kw) {
        if (s_.substr(pos_, kw.size()) != kw) return false;
        pos_ += kw.size();
        return true;
    }

    u64 number(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        u64 value = 0;
        auto* first = s_.data() + pos_;
        auto* last = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " is out of range", start);
        if (ptr == first) throw ParseError(std::string("expected a number for ") + what, start);
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::string until(char stop, const char* what) {
        std::size_t start = pos_;
        while (!done() && peek() != stop) ++pos_;
        if (done()) throw ParseError(std::string("unterminated ") + what, start);
        return std::string(s_.substr(start, pos_ - start));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

GroupAtom parse_atom(Scanner& sc) {
    sc.skip_ws();
    std::size_t start = sc.pos();
    GroupAtom atom;
    if (sc.try_consume('Z')) {
        atom.kind = GroupAtom::Kind::Cyclic;
        atom.n = sc.number("cyclic order");
        if (atom.n < 1) throw ParseError("cyclic order must be at least 1", start);
        return atom;
    }
    if (sc.try_consume('Q')) {
        atom.kind = GroupAtom::Kind::Quaternion;
        std::size_t num_at = sc.pos();
        atom.n = sc.number("quaternion order");
        if (atom.n < 8 || (atom.n & (atom.n - 1)) != 0)
            throw ParseError("quaternion order must be a power of two at least 8", num_at);
        return atom;
    }
    if (sc.try_consume('D')) {
        atom.kind = GroupAtom::Kind::Dihedral;
        std::size_t num_at = sc.pos();
        atom.n = sc.number("dihedral order");
        if (atom.n < 2 || atom.n % 2 != 0)
            throw ParseError("dihedral order must be even and at least 2", num_at);
        return atom;
    }
    if (sc.try_keyword("Ab")) {
        atom.kind = GroupAtom::Kind::AbelianP;
        sc.skip_ws();
        sc.expect('(', "after Ab");
        std::size_t p_at = sc.pos();
        atom.prime = sc.number("prime");
        if (!is_prime(atom.prime))
            throw ParseError(std::to_string(atom.prime) + " is not prime", p_at);
        sc.skip_ws();
        sc.expect(';', "between prime and exponents");
        while (true) {
            std::size_t t_at = sc.pos();
            u64 t = sc.number("exponent");
            if (t < 1) throw ParseError("exponents must be at least 1", t_at);
            if (!atom.exponents.empty() && atom.exponents.back() > t)
                throw ParseError("exponents must be nondecreasing", t_at);
            atom.exponents.push_back(static_cast<unsigned>(t));
            sc.skip_ws();
            if (!sc.try_consume(',')) break;
        }
        sc.expect(')', "to close Ab(...)");
        return atom;
    }
    if (sc.try_keyword("Table")) {
        atom.kind = GroupAtom::Kind::Table;
        sc.skip_ws();
        sc.expect('(', "after Table");
        atom.path = sc.until(')', "Table path");
        sc.expect(')', "to close Table(...)");
        if (atom.path.empty()) throw ParseError("table atom needs a file path", start);
        return atom;
    }
    throw ParseError("unknown token", start);
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
    Scanner sc(text);
    GroupSpec spec;
    sc.skip_ws();
    if (sc.done()) throw ParseError("empty group spec", 0);
    while (true) {
        spec.factors.push_back(parse_atom(sc));
        sc.skip_ws();
        if (sc.done()) break;
        if (!sc.try_consume('x')) throw ParseError("expected 'x' between atoms", sc.pos());
        sc.skip_ws();
        if (sc.done()) throw ParseError("trailing 'x' without an atom", sc.pos());
    }
    return spec;
}

}  // namespace epg
