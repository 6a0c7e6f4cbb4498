#include "algame/specparse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algame/errors.hpp"

namespace algame {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::int64_t parse_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw parse_error("expected an integer in '" + s + "' at position " + std::to_string(start));
    try {
        return std::stoll(s.substr(start, pos - start));
    } catch (const std::out_of_range&) {
        throw parse_error("integer out of range in '" + s + "'");
    }
}

std::int64_t expect_int(const std::string& s, std::size_t& pos) { return parse_int(s, pos); }

// For parameters that become C ints (group sizes, ring exponents).
int expect_small_int(const std::string& s, std::size_t& pos) {
    std::int64_t v = parse_int(s, pos);
    if (v < 0 || v > 1000000) throw parse_error("parameter out of range in '" + s + "'");
    return static_cast<int>(v);
}

void expect_char(const std::string& s, std::size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw parse_error(std::string("expected '") + c + "' in '" + s + "'");
    ++pos;
}

bool try_char(const std::string& s, std::size_t& pos, char c) {
    if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
    }
    return false;
}

nlohmann::json load_json(const std::string& text) {
    try {
        if (!text.empty() && text[0] == '@') {
            std::ifstream in(text.substr(1));
            if (!in) throw parse_error("cannot open file '" + text.substr(1) + "'");
            return nlohmann::json::parse(in);
        }
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

// Splits on a separator at nesting depth 0 (parentheses, braces, brackets).
std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

FinGenAbGroup parse_abelian_spec(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw parse_error("empty abelian group spec");
    std::vector<std::int64_t> orders;
    for (const std::string& term : split_top_level(s, '+')) {
        if (term.empty()) throw parse_error("empty term in abelian spec '" + text + "'");
        std::size_t pos = 0;
        std::int64_t base;
        std::int64_t power = 1;
        if (term[0] == '(') {
            expect_char(term, pos, '(');
            expect_char(term, pos, 'Z');
            expect_char(term, pos, '/');
            base = expect_int(term, pos);
            expect_char(term, pos, ')');
            expect_char(term, pos, '^');
            power = expect_int(term, pos);
        } else {
            expect_char(term, pos, 'Z');
            if (try_char(term, pos, '/'))
                base = expect_int(term, pos);
            else
                base = 0; // a Z summand
        }
        if (pos != term.size()) throw parse_error("trailing characters in term '" + term + "'");
        if (base < 0) throw parse_error("negative order in '" + term + "'");
        if (base > 1'000'000'000'000) throw parse_error("order too large in '" + term + "'");
        if (power < 1 || power > 64) throw parse_error("bad exponent in '" + term + "'");
        for (std::int64_t i = 0; i < power; ++i) orders.push_back(base);
    }
    return canonicalize(orders);
}

AbElement parse_abelian_element(const FinGenAbGroup& g, const std::string& text) {
    std::string s = strip_spaces(text);
    std::vector<std::int64_t> values;
    for (const std::string& part : split_top_level(s, ',')) {
        std::size_t pos = 0;
        values.push_back(expect_int(part, pos));
        if (pos != part.size()) throw parse_error("bad coordinate '" + part + "'");
    }
    const std::size_t want = g.torsion().size() + static_cast<std::size_t>(g.rank());
    if (values.size() != want)
        throw parse_error("expected " + std::to_string(want) + " coordinates, got " +
                          std::to_string(values.size()));
    AbElement x;
    x.residues.assign(values.begin(), values.begin() + g.torsion().size());
    x.free_coords.assign(values.begin() + g.torsion().size(), values.end());
    return reduce_element(g, x);
}

namespace {

FiniteGroup parse_group_atom(const std::string& atom) {
    std::size_t pos = 0;
    auto rest_int = [&](std::size_t at) {
        std::size_t p = at;
        int v = expect_small_int(atom, p);
        if (p != atom.size()) throw parse_error("trailing characters in group spec '" + atom + "'");
        return v;
    };
    if (atom == "Q8") return dicyclic(2);
    if (atom.rfind("SG16_", 0) == 0) return order16(rest_int(5));
    if (atom.rfind("Dic", 0) == 0) return dicyclic(rest_int(3));
    if (atom.rfind("PQ(", 0) == 0) {
        pos = 3;
        int p = expect_small_int(atom, pos);
        expect_char(atom, pos, ',');
        int q = expect_small_int(atom, pos);
        expect_char(atom, pos, ')');
        if (pos != atom.size()) throw parse_error("trailing characters in '" + atom + "'");
        return nonabelian_pq(p, q);
    }
    if (!atom.empty()) {
        switch (atom[0]) {
        case 'C': return cyclic(rest_int(1));
        case 'D': return dihedral(rest_int(1));
        case 'S': return symmetric(rest_int(1));
        case 'A': return alternating(rest_int(1));
        default: break;
        }
    }
    throw parse_error("unrecognized group spec '" + atom + "'");
}

} // namespace

FiniteGroup parse_group_spec(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw parse_error("empty group spec");
    if (s[0] == '{' || s[0] == '@') {
        nlohmann::json j = load_json(s);
        if (!j.contains("degree") || !j.contains("generators"))
            throw parse_error("permutation JSON needs 'degree' and 'generators'");
        std::vector<std::vector<int>> gens;
        for (const auto& g : j["generators"]) gens.push_back(g.get<std::vector<int>>());
        return from_permutations(j["degree"].get<int>(), gens);
    }
    std::vector<std::string> factors = split_top_level(s, 'x');
    FiniteGroup g = parse_group_atom(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        g = direct_product(g, parse_group_atom(factors[i]));
    return g;
}

namespace {

FiniteCommRing parse_ring_atom(const std::string& atom) {
    std::size_t pos = 0;
    auto args = [&](std::size_t at, int count) {
        std::vector<std::int64_t> out;
        pos = at;
        expect_char(atom, pos, '(');
        for (int i = 0; i < count; ++i) {
            if (i) expect_char(atom, pos, ',');
            out.push_back(expect_small_int(atom, pos));
        }
        expect_char(atom, pos, ')');
        if (pos != atom.size()) throw parse_error("trailing characters in ring spec '" + atom + "'");
        return out;
    };
    if (atom.rfind("Z/", 0) == 0) {
        pos = 2;
        std::int64_t n = expect_int(atom, pos);
        if (pos != atom.size()) throw parse_error("trailing characters in ring spec '" + atom + "'");
        return z_mod(n);
    }
    if (atom.rfind("GF", 0) == 0) {
        auto a = args(2, 1);
        return gf_p(a[0]);
    }
    if (atom.rfind("SqZero", 0) == 0) {
        auto a = args(6, 2);
        return square_zero_extension(a[0], static_cast<int>(a[1]));
    }
    if (atom.rfind("Cusp", 0) == 0) {
        auto a = args(4, 2);
        return cusp_truncation(a[0], static_cast<int>(a[1]));
    }
    if (atom.rfind("DualTrunc", 0) == 0) {
        auto a = args(9, 2);
        return dual_truncated(a[0], static_cast<int>(a[1]));
    }
    if (atom.rfind("Mon", 0) == 0) {
        auto a = args(3, 3);
        return monomial_ring(a[0], static_cast<int>(a[1]), static_cast<int>(a[2]));
    }
    throw parse_error("unrecognized ring spec '" + atom + "'");
}

} // namespace

FiniteCommRing parse_ring_spec(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw parse_error("empty ring spec");
    if (s[0] == '{' || s[0] == '@') {
        nlohmann::json j = load_json(s);
        if (!j.contains("additive_orders") || !j.contains("one") || !j.contains("basis_products"))
            throw parse_error("ring JSON needs 'additive_orders', 'one' and 'basis_products'");
        return FiniteCommRing::from_structure_constants(
            j["additive_orders"].get<std::vector<std::int64_t>>(),
            j["one"].get<std::vector<std::int64_t>>(),
            j["basis_products"].get<std::vector<std::vector<std::vector<std::int64_t>>>>());
    }
    std::vector<std::string> factors = split_top_level(s, 'x');
    FiniteCommRing r = parse_ring_atom(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        r = product(r, parse_ring_atom(factors[i]));
    return r;
}

std::shared_ptr<const NimPile> parse_nim_spec(const std::string& text) {
    std::string s = strip_spaces(text);
    std::size_t pos = 0;
    try_char(s, pos, '*');
    std::int64_t k = expect_int(s, pos);
    if (pos != s.size() || k < 0) throw parse_error("bad nim spec '" + text + "'");
    return std::make_shared<NimPile>(static_cast<std::uint64_t>(k));
}

PositionPtr StructureSpec::position() const {
    switch (kind) {
    case Kind::Abelian: return abelian_position(abelian);
    case Kind::Group:
        if (group->order() > 512)
            throw resource_limit_error("group order " + std::to_string(group->order()) +
                                       " exceeds the quotient-game cap 512");
        return group_game_start(group, GroupGameKind::Quotient);
    case Kind::Ring:
        if (ring->size() > 512)
            throw resource_limit_error("ring size " + std::to_string(ring->size()) +
                                       " exceeds the game cap 512");
        return ring_game_start(ring);
    case Kind::Nim: return nim;
    case Kind::Compound: {
        std::vector<PositionPtr> parts;
        for (const StructureSpec& c : components) parts.push_back(c.position());
        return compound(std::move(parts));
    }
    }
    throw std::logic_error("unreachable");
}

StructureSpec make_abelian_spec(const std::string& text) {
    StructureSpec s;
    s.kind = StructureSpec::Kind::Abelian;
    s.text = text;
    s.abelian = parse_abelian_spec(text);
    return s;
}

StructureSpec make_group_spec(const std::string& text) {
    StructureSpec s;
    s.kind = StructureSpec::Kind::Group;
    s.text = text;
    s.group = std::make_shared<const FiniteGroup>(parse_group_spec(text));
    return s;
}

StructureSpec make_ring_spec(const std::string& text) {
    StructureSpec s;
    s.kind = StructureSpec::Kind::Ring;
    s.text = text;
    s.ring = std::make_shared<const FiniteCommRing>(parse_ring_spec(text));
    return s;
}

StructureSpec make_nim_spec(const std::string& text) {
    StructureSpec s;
    s.kind = StructureSpec::Kind::Nim;
    s.text = text;
    s.nim = parse_nim_spec(text);
    return s;
}

StructureSpec parse_compound_spec(const std::string& text) {
    StructureSpec s;
    s.kind = StructureSpec::Kind::Compound;
    s.text = text;
    for (const std::string& raw : split_top_level(text, '|')) {
        std::string part = raw;
        std::size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw parse_error("compound component needs a kind prefix: '" + raw + "'");
        std::string kind = strip_spaces(part.substr(0, colon));
        std::string payload = part.substr(colon + 1);
        if (kind == "abelian")
            s.components.push_back(make_abelian_spec(payload));
        else if (kind == "group")
            s.components.push_back(make_group_spec(payload));
        else if (kind == "ring")
            s.components.push_back(make_ring_spec(payload));
        else if (kind == "nim")
            s.components.push_back(make_nim_spec(payload));
        else
            throw parse_error("unknown compound component kind '" + kind + "'");
    }
    if (s.components.empty()) throw parse_error("empty compound spec");
    return s;
}

} // namespace algame
