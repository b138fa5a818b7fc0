#include "gaw/group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gaw/errors.hpp"

namespace gaw {

namespace {

Word word_multiply(const Word& g, const Word& h) {
    Word out = g;
    out.reserve(g.size() + h.size());
    for (auto l : h) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::int64_t mod_pos(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

// Splits "a; b; c" on top-level semicolons (parentheses nest).
std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') depth++;
        if (c == ')') depth--;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::string s = strip(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<std::int64_t> out;
    for (const auto& part : split_top_level(s, ',')) {
        try {
            out.push_back(std::stoll(strip(part)));
        } catch (const std::exception&) {
            throw ParseError(std::string("cannot parse ") + what + " from '" + text + "'");
        }
    }
    return out;
}

}  // namespace

GroupSpec GroupSpec::free_group(int rank) {
    if (rank < 1) throw ParseError("free group rank must be >= 1");
    Family f = FreeGroup{rank};
    return GroupSpec(f, default_generators(f), true);
}

GroupSpec GroupSpec::free_abelian(int rank) {
    if (rank < 1) throw ParseError("free abelian rank must be >= 1");
    Family f = FreeAbelian{rank};
    return GroupSpec(f, default_generators(f), true);
}

GroupSpec GroupSpec::cyclic(std::int64_t order) {
    if (order < 2) throw ParseError("cyclic order must be >= 2");
    Family f = CyclicGroup{order};
    return GroupSpec(f, default_generators(f), true);
}

GroupSpec GroupSpec::heisenberg() {
    Family f = HeisenbergGroup{};
    return GroupSpec(f, default_generators(f), true);
}

GroupSpec GroupSpec::direct_product(std::vector<GroupSpec> factors) {
    if (factors.empty()) throw ParseError("direct product needs at least one factor");
    Family f = DirectProduct{std::move(factors)};
    return GroupSpec(f, default_generators(f), true);
}

GroupSpec GroupSpec::with_generators(std::vector<Element> gens) const {
    std::vector<Element> closed;
    for (auto& g : gens) {
        require_conforms(g);
        if (is_identity(g)) throw ParseError("generator set must not contain the identity");
        closed.push_back(g);
    }
    // close under inversion, dedupe, and sort for a canonical set
    std::size_t given = closed.size();
    for (std::size_t i = 0; i < given; ++i) closed.push_back(inverse(closed[i]));
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    return GroupSpec(family_, std::move(closed), false);
}

std::vector<Element> GroupSpec::default_generators(const Family& f) {
    std::vector<Element> gens;
    if (const auto* fg = std::get_if<FreeGroup>(&f)) {
        for (int i = 1; i <= fg->rank; ++i) {
            gens.push_back(Element::word({i}));
            gens.push_back(Element::word({-i}));
        }
    } else if (const auto* fa = std::get_if<FreeAbelian>(&f)) {
        for (int i = 0; i < fa->rank; ++i) {
            IntVec v(fa->rank, 0);
            v[i] = 1;
            gens.push_back(Element::vec(v));
            v[i] = -1;
            gens.push_back(Element::vec(v));
        }
    } else if (const auto* cy = std::get_if<CyclicGroup>(&f)) {
        gens.push_back(Element::residue(1));
        if (cy->order > 2) gens.push_back(Element::residue(cy->order - 1));
    } else if (std::holds_alternative<HeisenbergGroup>(f)) {
        gens.push_back(Element::heis(1, 0, 0));
        gens.push_back(Element::heis(-1, 0, 0));
        gens.push_back(Element::heis(0, 1, 0));
        gens.push_back(Element::heis(0, -1, 0));
    } else {
        const auto& dp = std::get<DirectProduct>(f);
        for (std::size_t i = 0; i < dp.factors.size(); ++i) {
            for (const auto& g : dp.factors[i].generators()) {
                Tuple t;
                for (std::size_t j = 0; j < dp.factors.size(); ++j)
                    t.push_back(j == i ? g : dp.factors[j].identity());
                gens.push_back(Element::tuple(std::move(t)));
            }
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

Element GroupSpec::identity() const {
    if (std::holds_alternative<FreeGroup>(family_)) return Element::word({});
    if (const auto* fa = std::get_if<FreeAbelian>(&family_)) return Element::vec(IntVec(fa->rank, 0));
    if (std::holds_alternative<CyclicGroup>(family_)) return Element::residue(0);
    if (std::holds_alternative<HeisenbergGroup>(family_)) return Element::heis(0, 0, 0);
    const auto& dp = std::get<DirectProduct>(family_);
    Tuple t;
    for (const auto& f : dp.factors) t.push_back(f.identity());
    return Element::tuple(std::move(t));
}

bool GroupSpec::is_identity(const Element& g) const { return g == identity(); }

bool GroupSpec::conforms(const Element& g) const {
    if (const auto* fg = std::get_if<FreeGroup>(&family_)) {
        if (!g.holds<Word>()) return false;
        const auto& w = g.as<Word>();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0 || std::abs(w[i]) > fg->rank) return false;
            if (i + 1 < w.size() && w[i + 1] == -w[i]) return false;  // not reduced
        }
        return true;
    }
    if (const auto* fa = std::get_if<FreeAbelian>(&family_))
        return g.holds<IntVec>() && g.as<IntVec>().size() == static_cast<std::size_t>(fa->rank);
    if (const auto* cy = std::get_if<CyclicGroup>(&family_))
        return g.holds<Residue>() && g.as<Residue>() >= 0 && g.as<Residue>() < cy->order;
    if (std::holds_alternative<HeisenbergGroup>(family_)) return g.holds<HeisTriple>();
    const auto& dp = std::get<DirectProduct>(family_);
    if (!g.holds<Tuple>()) return false;
    const auto& t = g.as<Tuple>();
    if (t.size() != dp.factors.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!dp.factors[i].conforms(t[i])) return false;
    return true;
}

void GroupSpec::require_conforms(const Element& g) const {
    if (!conforms(g))
        throw FamilyMismatchError("element does not conform to group " + family_string());
}

Element GroupSpec::multiply(const Element& g, const Element& h) const {
    require_conforms(g);
    require_conforms(h);
    if (std::holds_alternative<FreeGroup>(family_))
        return Element::word(word_multiply(g.as<Word>(), h.as<Word>()));
    if (std::holds_alternative<FreeAbelian>(family_)) {
        IntVec out = g.as<IntVec>();
        const auto& b = h.as<IntVec>();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
        return Element::vec(std::move(out));
    }
    if (const auto* cy = std::get_if<CyclicGroup>(&family_))
        return Element::residue(mod_pos(g.as<Residue>() + h.as<Residue>(), cy->order));
    if (std::holds_alternative<HeisenbergGroup>(family_)) {
        const auto& a = g.as<HeisTriple>();
        const auto& b = h.as<HeisTriple>();
        return Element::heis(a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]);
    }
    const auto& dp = std::get<DirectProduct>(family_);
    const auto& ta = g.as<Tuple>();
    const auto& tb = h.as<Tuple>();
    Tuple out;
    out.reserve(ta.size());
    for (std::size_t i = 0; i < ta.size(); ++i) out.push_back(dp.factors[i].multiply(ta[i], tb[i]));
    return Element::tuple(std::move(out));
}

Element GroupSpec::inverse(const Element& g) const {
    require_conforms(g);
    if (std::holds_alternative<FreeGroup>(family_)) {
        const auto& w = g.as<Word>();
        Word out(w.rbegin(), w.rend());
        for (auto& l : out) l = -l;
        return Element::word(std::move(out));
    }
    if (std::holds_alternative<FreeAbelian>(family_)) {
        IntVec out = g.as<IntVec>();
        for (auto& x : out) x = -x;
        return Element::vec(std::move(out));
    }
    if (const auto* cy = std::get_if<CyclicGroup>(&family_))
        return Element::residue(mod_pos(-g.as<Residue>(), cy->order));
    if (std::holds_alternative<HeisenbergGroup>(family_)) {
        const auto& a = g.as<HeisTriple>();
        return Element::heis(-a[0], -a[1], -a[2] + a[0] * a[1]);
    }
    const auto& dp = std::get<DirectProduct>(family_);
    Tuple out;
    for (std::size_t i = 0; i < g.as<Tuple>().size(); ++i)
        out.push_back(dp.factors[i].inverse(g.as<Tuple>()[i]));
    return Element::tuple(std::move(out));
}

Element GroupSpec::power(const Element& g, std::int64_t n) const {
    if (n < 0) return power(inverse(g), -n);
    Element acc = identity();
    Element base = g;
    while (n > 0) {
        if (n & 1) acc = multiply(acc, base);
        n >>= 1;
        if (n > 0) base = multiply(base, base);
    }
    return acc;
}

std::optional<std::int64_t> GroupSpec::closed_form_length(const Element& g) const {
    if (!default_generators_) return std::nullopt;
    if (std::holds_alternative<FreeGroup>(family_))
        return static_cast<std::int64_t>(g.as<Word>().size());
    if (std::holds_alternative<FreeAbelian>(family_)) {
        std::int64_t s = 0;
        for (auto x : g.as<IntVec>()) s += std::abs(x);
        return s;
    }
    if (const auto* cy = std::get_if<CyclicGroup>(&family_)) {
        std::int64_t r = g.as<Residue>();
        return std::min(r, cy->order - r);
    }
    if (std::holds_alternative<HeisenbergGroup>(family_)) return std::nullopt;
    const auto& dp = std::get<DirectProduct>(family_);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dp.factors.size(); ++i) {
        auto l = dp.factors[i].closed_form_length(g.as<Tuple>()[i]);
        if (!l) return std::nullopt;
        s += *l;
    }
    return s;
}

std::vector<Element> GroupSpec::positive_generators() const {
    std::vector<Element> out;
    if (const auto* fg = std::get_if<FreeGroup>(&family_)) {
        for (int i = 1; i <= fg->rank; ++i) out.push_back(Element::word({i}));
    } else if (const auto* fa = std::get_if<FreeAbelian>(&family_)) {
        for (int i = 0; i < fa->rank; ++i) {
            IntVec v(fa->rank, 0);
            v[i] = 1;
            out.push_back(Element::vec(v));
        }
    } else if (std::holds_alternative<CyclicGroup>(family_)) {
        out.push_back(Element::residue(1));
    } else if (std::holds_alternative<HeisenbergGroup>(family_)) {
        out.push_back(Element::heis(1, 0, 0));
        out.push_back(Element::heis(0, 1, 0));
    } else {
        const auto& dp = std::get<DirectProduct>(family_);
        for (std::size_t i = 0; i < dp.factors.size(); ++i) {
            for (const auto& g : dp.factors[i].positive_generators()) {
                Tuple t;
                for (std::size_t j = 0; j < dp.factors.size(); ++j)
                    t.push_back(j == i ? g : dp.factors[j].identity());
                out.push_back(Element::tuple(std::move(t)));
            }
        }
    }
    return out;
}

std::string GroupSpec::family_string() const {
    if (const auto* fg = std::get_if<FreeGroup>(&family_)) return "free(" + std::to_string(fg->rank) + ")";
    if (const auto* fa = std::get_if<FreeAbelian>(&family_)) return "abelian(" + std::to_string(fa->rank) + ")";
    if (const auto* cy = std::get_if<CyclicGroup>(&family_)) return "cyclic(" + std::to_string(cy->order) + ")";
    if (std::holds_alternative<HeisenbergGroup>(family_)) return "heisenberg";
    const auto& dp = std::get<DirectProduct>(family_);
    std::string s = "prod(";
    for (std::size_t i = 0; i < dp.factors.size(); ++i) {
        if (i) s += ",";
        s += dp.factors[i].family_string();
    }
    return s + ")";
}

std::string GroupSpec::canonical_string() const {
    std::string s = family_string() + "|gens:";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) s += ",";
        s += element_to_string(generators_[i]);
    }
    return s;
}

std::string GroupSpec::element_to_string(const Element& g) const {
    if (const auto* fg = std::get_if<FreeGroup>(&family_)) {
        const auto& w = g.as<Word>();
        if (w.empty()) return "1";
        if (fg->rank > 26) {  // letters run out; emit signed letter indices
            std::string s = "[";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) s += " ";
                s += std::to_string(w[i]);
            }
            return s + "]";
        }
        std::string s;
        for (auto l : w) {
            char c = static_cast<char>('a' + std::abs(l) - 1);
            s.push_back(l > 0 ? c : static_cast<char>(std::toupper(c)));
        }
        return s;
    }
    if (const auto* fa = std::get_if<FreeAbelian>(&family_)) {
        const auto& v = g.as<IntVec>();
        if (fa->rank == 1) return std::to_string(v[0]);
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    }
    if (std::holds_alternative<CyclicGroup>(family_)) return std::to_string(g.as<Residue>());
    if (std::holds_alternative<HeisenbergGroup>(family_)) {
        const auto& a = g.as<HeisTriple>();
        return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
    }
    const auto& dp = std::get<DirectProduct>(family_);
    const auto& t = g.as<Tuple>();
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += "; ";
        s += dp.factors[i].element_to_string(t[i]);
    }
    return s + ")";
}

Element GroupSpec::parse_element(const std::string& text) const {
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty element text");
    if (const auto* fg = std::get_if<FreeGroup>(&family_)) {
        if (s == "1") return Element::word({});
        if (s.front() == '[') {  // signed letter indices, any rank
            if (s.back() != ']') throw ParseError("unterminated word '" + s + "'");
            Word w;
            std::istringstream ls(s.substr(1, s.size() - 2));
            std::int64_t l = 0;
            while (ls >> l) {
                if (l == 0 || std::abs(l) > fg->rank)
                    throw ParseError("letter out of rank in '" + s + "'");
                auto letter = static_cast<std::int32_t>(l);
                if (!w.empty() && w.back() == -letter)
                    w.pop_back();
                else
                    w.push_back(letter);
            }
            return Element::word(std::move(w));
        }
        if (fg->rank > 26) throw ParseError("letter form supports free rank <= 26; use [i j ...]");
        Word w;
        std::size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == ' ' || c == '*') {
                ++i;
                continue;
            }
            std::int32_t letter;
            if (c >= 'a' && c <= 'z')
                letter = c - 'a' + 1;
            else if (c >= 'A' && c <= 'Z')
                letter = -(c - 'A' + 1);
            else
                throw ParseError("bad letter '" + std::string(1, c) + "' in word '" + s + "'");
            if (std::abs(letter) > fg->rank) throw ParseError("letter out of rank in '" + s + "'");
            ++i;
            std::int64_t exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t j = i;
                if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                exp = std::stoll(s.substr(i, j - i));
                i = j;
            }
            std::int32_t l = exp >= 0 ? letter : -letter;
            for (std::int64_t r = 0; r < std::abs(exp); ++r) {
                if (!w.empty() && w.back() == -l)
                    w.pop_back();
                else
                    w.push_back(l);
            }
        }
        return Element::word(std::move(w));
    }
    if (const auto* fa = std::get_if<FreeAbelian>(&family_)) {
        auto xs = parse_int_list(s, "integer vector");
        if (xs.size() != static_cast<std::size_t>(fa->rank))
            throw ParseError("expected " + std::to_string(fa->rank) + " coordinates in '" + s + "'");
        return Element::vec(IntVec(xs.begin(), xs.end()));
    }
    if (const auto* cy = std::get_if<CyclicGroup>(&family_)) {
        try {
            return Element::residue(mod_pos(std::stoll(s), cy->order));
        } catch (const std::exception&) {
            throw ParseError("cannot parse residue from '" + s + "'");
        }
    }
    if (std::holds_alternative<HeisenbergGroup>(family_)) {
        auto xs = parse_int_list(s, "Heisenberg triple");
        if (xs.size() != 3) throw ParseError("expected 3 coordinates in '" + s + "'");
        return Element::heis(xs[0], xs[1], xs[2]);
    }
    const auto& dp = std::get<DirectProduct>(family_);
    if (s.front() != '(' || s.back() != ')') throw ParseError("product element must be parenthesized: '" + s + "'");
    auto parts = split_top_level(s.substr(1, s.size() - 2), ';');
    if (parts.size() != dp.factors.size())
        throw ParseError("expected " + std::to_string(dp.factors.size()) + " factors in '" + s + "'");
    Tuple t;
    for (std::size_t i = 0; i < parts.size(); ++i) t.push_back(dp.factors[i].parse_element(parts[i]));
    return Element::tuple(std::move(t));
}

bool GroupSpec::operator==(const GroupSpec& o) const {
    return canonical_string() == o.canonical_string();
}

}  // namespace gaw
