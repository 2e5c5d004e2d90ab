#include "necklace/parser.hpp"

#include "necklace/errors.hpp"

namespace necklace {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
};

bool name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string read_name(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    while (cur.pos < cur.s.size() && name_char(cur.s[cur.pos])) ++cur.pos;
    if (cur.pos == start) throw ParseError("expected a name", cur.pos);
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '*') ++cur.pos;  // reversed edge
    return cur.s.substr(start, cur.pos - start);
}

Rational read_rational(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    while (cur.pos < cur.s.size() && cur.s[cur.pos] >= '0' && cur.s[cur.pos] <= '9') ++cur.pos;
    size_t num_end = cur.pos;
    if (num_end == start) throw ParseError("expected a number", cur.pos);
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '/') {
        ++cur.pos;
        size_t den_start = cur.pos;
        while (cur.pos < cur.s.size() && cur.s[cur.pos] >= '0' && cur.s[cur.pos] <= '9') ++cur.pos;
        if (cur.pos == den_start) throw ParseError("expected a denominator", cur.pos);
    }
    return Rational::from_string(cur.s.substr(start, cur.pos - start));
}

struct Atom {
    bool is_cycle = false;
    Path path;  // trivial or composable word
};

Path read_path(Cursor& cur, const QuiverPtr& q) {
    std::vector<int> edges;
    size_t where = cur.pos;
    for (;;) {
        where = cur.pos;
        std::string name = read_name(cur);
        auto e = q->find_edge(name);
        if (!e) {
            if (name.rfind("e_", 0) == 0 && edges.empty()) {
                // trivial path; only valid when it stands alone
                auto v = q->find_vertex(name.substr(2));
                if (!v) throw ParseError("unknown vertex in '" + name + "'", where);
                if (cur.peek() == '.') throw ParseError("trivial path inside a word", cur.pos);
                return Path::trivial(*v);
            }
            throw UnknownEdge(name);
        }
        edges.push_back(*e);
        if (!cur.accept('.')) break;
    }
    return make_path(*q, edges);
}

Atom read_atom(Cursor& cur, const QuiverPtr& q) {
    cur.skip_ws();
    if (cur.s.compare(cur.pos, 4, "cyc(") == 0) {
        cur.pos += 4;
        Path p = read_path(cur, q);
        cur.expect(')');
        if (p.tail != p.head)
            throw NonComposablePath("cycle word is not closed");
        return Atom{true, canonical_rotation(*q, p)};
    }
    return Atom{false, read_path(cur, q)};
}

}  // namespace

ParsedElement parse_element(const std::string& src, const QuiverPtr& q) {
    Cursor cur{src};
    struct Term {
        Rational coeff;
        Atom atom;
    };
    std::vector<Term> terms;
    bool any_cycle = false, any_open_path = false;

    bool first = true;
    while (!cur.done()) {
        Rational sign = 1;
        if (cur.accept('-')) sign = Rational(-1);
        else if (cur.accept('+')) {
            if (first) throw ParseError("leading '+'", cur.pos);
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        first = false;

        Rational coeff = sign;
        cur.skip_ws();
        if (cur.peek() >= '0' && cur.peek() <= '9') {
            coeff = sign * read_rational(cur);
            cur.expect('*');
        }
        Atom atom = read_atom(cur, q);
        if (atom.is_cycle) any_cycle = true;
        else if (!atom.path.is_trivial()) any_open_path = true;
        terms.push_back(Term{coeff, std::move(atom)});
    }
    if (terms.empty()) throw ParseError("empty expression", 0);
    if (any_cycle && any_open_path)
        throw ParseError("cannot mix cycle atoms with bare path atoms", 0);

    if (any_cycle) {
        NecklaceElement out(q);
        for (const auto& t : terms) out.add_cycle(t.atom.path, t.coeff);
        return out;
    }
    PathAlgebraElement out(q);
    for (const auto& t : terms) out.add_term(t.atom.path, t.coeff);
    return out;
}

PathAlgebraElement parse_path_element(const std::string& src, const QuiverPtr& q) {
    ParsedElement e = parse_element(src, q);
    if (auto* p = std::get_if<PathAlgebraElement>(&e)) return *p;
    throw ParseError("expected a path-algebra expression, got cycles", 0);
}

NecklaceElement parse_necklace(const std::string& src, const QuiverPtr& q) {
    ParsedElement e = parse_element(src, q);
    if (auto* n = std::get_if<NecklaceElement>(&e)) return *n;
    // an expression of trivial paths only is also a valid necklace
    const auto& p = std::get<PathAlgebraElement>(e);
    NecklaceElement out(q);
    for (const auto& [path, c] : p.terms()) {
        if (!path.is_trivial())
            throw ParseError("expected cycles (use cyc(...) atoms)", 0);
        out.add_cycle(path, c);
    }
    return out;
}

namespace {

std::string print_terms(const QuiverPtr& q,
                        const std::map<Path, Rational>& terms, bool cycles) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string body = (cycles && !p.is_trivial())
                               ? "cyc(" + path_to_string(*q, p) + ")"
                               : path_to_string(*q, p);
        if (a == Rational(1)) out += body;
        else out += a.to_string() + "*" + body;
    }
    return out;
}

}  // namespace

std::string print_element(const PathAlgebraElement& x) {
    return print_terms(x.quiver(), x.terms(), false);
}

std::string print_element(const NecklaceElement& x) {
    return print_terms(x.quiver(), x.terms(), true);
}

std::string print_element(const ParsedElement& x) {
    if (auto* p = std::get_if<PathAlgebraElement>(&x)) return print_element(*p);
    return print_element(std::get<NecklaceElement>(x));
}

}  // namespace necklace
