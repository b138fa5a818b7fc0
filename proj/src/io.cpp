#include "gaw/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ball_builder.hpp"
#include "gaw/errors.hpp"

namespace gaw {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
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

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GroupSpec parse_group_impl(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty group spec");
    if (s == "heis" || s == "heisenberg") return GroupSpec::heisenberg();
    if (s == "z") return GroupSpec::free_abelian(1);
    auto numeric_suffix = [&](char head) -> std::optional<std::int64_t> {
        if (s.size() < 2 || s[0] != head) return std::nullopt;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        return std::stoll(s.substr(1));
    };
    if (auto d = numeric_suffix('z')) return GroupSpec::free_abelian(static_cast<int>(*d));
    if (auto k = numeric_suffix('f')) return GroupSpec::free_group(static_cast<int>(*k));
    if (auto m = numeric_suffix('c')) return GroupSpec::cyclic(*m);
    auto open = s.find('(');
    if (open != std::string::npos && s.back() == ')') {
        std::string head = strip(s.substr(0, open));
        std::string body = s.substr(open + 1, s.size() - open - 2);
        if (head == "prod") {
            std::vector<GroupSpec> factors;
            for (const auto& part : split_top(body, ','))
                factors.push_back(parse_group_impl(strip(part)));
            return GroupSpec::direct_product(std::move(factors));
        }
        if (head == "free") return GroupSpec::free_group(std::stoi(body));
        if (head == "abelian") return GroupSpec::free_abelian(std::stoi(body));
        if (head == "cyclic") return GroupSpec::cyclic(std::stoll(body));
    }
    throw ParseError("cannot parse group spec '" + text + "'");
}

}  // namespace

GroupSpec parse_group(const std::string& text) { return parse_group_impl(text); }

GroupSpec parse_group(const std::string& text, const std::string& generator_list) {
    GroupSpec base = parse_group_impl(text);
    std::string gens = strip(generator_list);
    if (gens.empty()) return base;
    std::vector<Element> elems;
    for (const auto& part : split_top(gens, ';')) elems.push_back(base.parse_element(strip(part)));
    return base.with_generators(std::move(elems));
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

AlgebraElement read_element_file(std::shared_ptr<const GroupSpec> spec,
                                 const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open element file " + path.string());
    AlgebraElement a(std::move(spec));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        double re = 0.0, im = 0.0;
        if (!(ls >> re >> im))
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected two coefficients");
        std::string rest;
        std::getline(ls, rest);
        rest = strip(rest);
        if (rest.empty())
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": missing normal form");
        a.add_term(a.spec().parse_element(rest), Coeff(re, im));
    }
    return a;
}

void write_element_file(const AlgebraElement& a, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write element file " + path.string());
    out << "# group: " << a.spec().canonical_string() << "\n";
    for (const auto& [g, z] : a.coefficients())
        out << fmt_double(z.real()) << " " << fmt_double(z.imag()) << " "
            << a.spec().element_to_string(g) << "\n";
}

LengthTable BallBuilder::from_rows(const GroupSpec& spec, int radius,
                                   std::vector<std::pair<Element, int>> rows) {
    LengthTable table(spec);
    table.radius_ = radius;
    table.sigma_.assign(static_cast<std::size_t>(radius) + 1, 0);
    int prev_len = -1;
    for (auto& [e, len] : rows) {
        if (len < prev_len || len < 0 || len > radius)
            throw CacheError("cache rows out of shell order");
        if (len == prev_len && !(table.elements_.back() < e))
            throw CacheError("cache rows not sorted within shell");
        table.sigma_[static_cast<std::size_t>(len)]++;
        table.elements_.push_back(std::move(e));
        table.lengths_.push_back(len);
        prev_len = len;
    }
    table.shell_begin_.assign(static_cast<std::size_t>(radius) + 2, 0);
    for (int n = 0; n <= radius; ++n)
        table.shell_begin_[n + 1] = table.shell_begin_[n] + table.sigma_[n];
    table.finalize();
    return table;
}

void write_ball_cache(const LengthTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write cache file " + path.string());
    const std::string spec_line = table.spec().canonical_string();
    out << "gaw-ball v1\n";
    out << "spec " << spec_line << "\n";
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(fnv1a64(spec_line)));
    out << "hash " << hex << "\n";
    out << "radius " << table.radius() << "\n";
    out << "count " << table.size() << "\n";
    for (std::size_t i = 0; i < table.size(); ++i)
        out << table.spec().element_to_string(table.element(i)) << "\t" << table.length_at(i) << "\n";
}

LengthTable read_ball_cache(const GroupSpec& spec, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cannot open cache file " + path.string());
    std::string line;
    auto next_line = [&]() {
        if (!std::getline(in, line)) throw CacheError("truncated cache file " + path.string());
        return strip(line);
    };
    if (next_line() != "gaw-ball v1") throw CacheError("bad cache magic in " + path.string());
    std::string spec_line = next_line();
    if (spec_line.rfind("spec ", 0) != 0) throw CacheError("missing spec line");
    spec_line = spec_line.substr(5);
    if (spec_line != spec.canonical_string())
        throw CacheError("cache holds a different group: " + spec_line);
    std::string hash_line = next_line();
    if (hash_line.rfind("hash ", 0) != 0) throw CacheError("missing hash line");
    char expect[32];
    std::snprintf(expect, sizeof(expect), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(spec_line)));
    if (hash_line.substr(5) != expect) throw CacheError("spec hash mismatch in " + path.string());
    std::string radius_line = next_line();
    if (radius_line.rfind("radius ", 0) != 0) throw CacheError("missing radius line");
    int radius = std::stoi(radius_line.substr(7));
    std::string count_line = next_line();
    if (count_line.rfind("count ", 0) != 0) throw CacheError("missing count line");
    std::size_t count = std::stoull(count_line.substr(6));

    std::vector<std::pair<Element, int>> rows;
    rows.reserve(count);
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty()) continue;
        auto tab = t.find_last_of('\t');
        if (tab == std::string::npos) throw CacheError("malformed cache row '" + t + "'");
        Element e = spec.parse_element(strip(t.substr(0, tab)));
        int len = std::stoi(t.substr(tab + 1));
        rows.emplace_back(std::move(e), len);
    }
    if (rows.size() != count) throw CacheError("cache row count mismatch");
    try {
        return BallBuilder::from_rows(spec, radius, std::move(rows));
    } catch (const CacheError&) {
        throw;
    } catch (const Error& e) {
        throw CacheError(std::string("cache reconstruction failed: ") + e.what());
    }
}

void write_sigma_beta_csv(const LengthTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write CSV file " + path.string());
    out << "n,sigma,beta\n";
    for (int n = 0; n <= table.radius(); ++n)
        out << n << "," << table.sigma()[static_cast<std::size_t>(n)] << ","
            << table.beta()[static_cast<std::size_t>(n)] << "\n";
}

void write_series_csv(const std::vector<double>& values, const std::string& column,
                      const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write CSV file " + path.string());
    out << "n," << column << "\n";
    for (std::size_t n = 0; n < values.size(); ++n) out << n << "," << fmt_double(values[n]) << "\n";
}

}  // namespace gaw
