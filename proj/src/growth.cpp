#include "gaw/growth.hpp"

#include <atomic>
#include <cmath>
#include <variant>

#include "gaw/errors.hpp"
#include "gaw/logvalue.hpp"

namespace gaw {

namespace {
std::atomic<long> g_subfact_clamps{0};
}

struct PolynomialNode {
    std::vector<double> coeffs;  // ascending, coeffs[0] >= 1, back() > 0
};
struct SubExpNode {
    double theta;
};
struct FactorialNode {};
struct SubFactorialNode {
    double theta;
};
struct PowerNode {
    std::shared_ptr<const GrowthFunction::Node> base;
    double d;
};
struct ProductNode {
    std::shared_ptr<const GrowthFunction::Node> a, b;
};
struct ScaledSumNode {
    double x, y;
    std::shared_ptr<const GrowthFunction::Node> a, b;
};
struct SampledNode {
    std::vector<double> log_values;
    std::string label;
};

struct GrowthFunction::Node {
    std::variant<PolynomialNode, SubExpNode, FactorialNode, SubFactorialNode, PowerNode, ProductNode,
                 ScaledSumNode, SampledNode>
        v;
};

namespace {

using Node = GrowthFunction::Node;
using NodePtr = std::shared_ptr<const Node>;

double node_log_at(const Node& node, std::int64_t n);

double subfactorial_log(double theta, std::int64_t n) {
    if (n == 0) return 0.0;
    double raw = std::lgamma(std::pow(static_cast<double>(n), theta) + 1.0);
    double prev = n == 1 ? 0.0 : std::lgamma(std::pow(static_cast<double>(n - 1), theta) + 1.0);
    if (raw < prev) {
        g_subfact_clamps.fetch_add(1, std::memory_order_relaxed);
        return prev;
    }
    return raw;
}

double node_log_at(const Node& node, std::int64_t n) {
    if (n < 0) throw ParseError("growth function argument must be >= 0");
    if (const auto* p = std::get_if<PolynomialNode>(&node.v)) {
        double x = static_cast<double>(n);
        double acc = 0.0;
        for (auto it = p->coeffs.rbegin(); it != p->coeffs.rend(); ++it) acc = acc * x + *it;
        return std::log(acc);
    }
    if (const auto* s = std::get_if<SubExpNode>(&node.v))
        return std::pow(static_cast<double>(n), s->theta);
    if (std::holds_alternative<FactorialNode>(node.v)) return std::lgamma(static_cast<double>(n) + 1.0);
    if (const auto* sf = std::get_if<SubFactorialNode>(&node.v)) return subfactorial_log(sf->theta, n);
    if (const auto* pw = std::get_if<PowerNode>(&node.v)) return pw->d * node_log_at(*pw->base, n);
    if (const auto* pr = std::get_if<ProductNode>(&node.v))
        return node_log_at(*pr->a, n) + node_log_at(*pr->b, n);
    if (const auto* su = std::get_if<ScaledSumNode>(&node.v))
        return log_add(std::log(su->x) + node_log_at(*su->a, n), std::log(su->y) + node_log_at(*su->b, n));
    const auto& sm = std::get<SampledNode>(node.v);
    if (static_cast<std::size_t>(n) >= sm.log_values.size())
        throw OutOfBallError("sampled growth function '" + sm.label + "' evaluated beyond n = " +
                             std::to_string(sm.log_values.size() - 1));
    return sm.log_values[static_cast<std::size_t>(n)];
}

std::optional<std::int64_t> node_max_arg(const Node& node) {
    if (const auto* pw = std::get_if<PowerNode>(&node.v)) return node_max_arg(*pw->base);
    if (const auto* pr = std::get_if<ProductNode>(&node.v)) {
        auto a = node_max_arg(*pr->a), b = node_max_arg(*pr->b);
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    if (const auto* su = std::get_if<ScaledSumNode>(&node.v)) {
        auto a = node_max_arg(*su->a), b = node_max_arg(*su->b);
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    if (const auto* sm = std::get_if<SampledNode>(&node.v))
        return static_cast<std::int64_t>(sm->log_values.size()) - 1;
    return std::nullopt;
}

std::optional<GrowthFunction::SymbolicClass> node_class(const Node& node) {
    using C = GrowthFunction::SymbolicClass;
    if (std::holds_alternative<PolynomialNode>(node.v)) return C{0.0, 0};
    if (const auto* s = std::get_if<SubExpNode>(&node.v)) return C{s->theta, 1};
    if (std::holds_alternative<FactorialNode>(node.v)) return C{1.0, 2};
    if (const auto* sf = std::get_if<SubFactorialNode>(&node.v)) return C{sf->theta, 2};
    if (const auto* pw = std::get_if<PowerNode>(&node.v)) return node_class(*pw->base);
    const Node* a = nullptr;
    const Node* b = nullptr;
    if (const auto* pr = std::get_if<ProductNode>(&node.v)) {
        a = pr->a.get();
        b = pr->b.get();
    } else if (const auto* su = std::get_if<ScaledSumNode>(&node.v)) {
        a = su->a.get();
        b = su->b.get();
    } else {
        return std::nullopt;  // sampled
    }
    auto ca = node_class(*a), cb = node_class(*b);
    if (!ca || !cb) return std::nullopt;
    return std::max(*ca, *cb);  // products and sums follow the faster factor
}

std::string node_to_string(const Node& node) {
    if (const auto* p = std::get_if<PolynomialNode>(&node.v)) {
        std::string s = "poly(";
        for (std::size_t i = 0; i < p->coeffs.size(); ++i) {
            if (i) s += ",";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", p->coeffs[i]);
            s += buf;
        }
        return s + ")";
    }
    char buf[64];
    if (const auto* s = std::get_if<SubExpNode>(&node.v)) {
        std::snprintf(buf, sizeof(buf), "subexp(%g)", s->theta);
        return buf;
    }
    if (std::holds_alternative<FactorialNode>(node.v)) return "factorial";
    if (const auto* sf = std::get_if<SubFactorialNode>(&node.v)) {
        std::snprintf(buf, sizeof(buf), "subfact(%g)", sf->theta);
        return buf;
    }
    if (const auto* pw = std::get_if<PowerNode>(&node.v)) {
        std::snprintf(buf, sizeof(buf), ",%g)", pw->d);
        return "pow(" + node_to_string(*pw->base) + buf;
    }
    if (const auto* pr = std::get_if<ProductNode>(&node.v))
        return "prod(" + node_to_string(*pr->a) + "," + node_to_string(*pr->b) + ")";
    if (const auto* su = std::get_if<ScaledSumNode>(&node.v)) {
        char xb[32], yb[32];
        std::snprintf(xb, sizeof(xb), "%g", su->x);
        std::snprintf(yb, sizeof(yb), "%g", su->y);
        return std::string("sum(") + xb + "," + node_to_string(*su->a) + "," + yb + "," +
               node_to_string(*su->b) + ")";
    }
    return "sampled:" + std::get<SampledNode>(node.v).label;
}

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

GrowthFunction GrowthFunction::polynomial(std::vector<double> coeffs) {
    if (coeffs.size() < 2) throw ParseError("polynomial growth needs degree >= 1");
    for (double c : coeffs)
        if (c < 0 || !std::isfinite(c)) throw ParseError("polynomial coefficients must be >= 0");
    if (coeffs.back() <= 0) throw ParseError("polynomial leading coefficient must be > 0");
    if (coeffs[0] < 1) coeffs[0] = 1.0;  // keep sigma >= 1 everywhere
    return GrowthFunction(make_node(Node{PolynomialNode{std::move(coeffs)}}));
}

GrowthFunction GrowthFunction::sub_exponential(double theta) {
    if (!(theta > 0 && theta <= 1)) throw ParseError("subexp theta must lie in (0, 1]");
    return GrowthFunction(make_node(Node{SubExpNode{theta}}));
}

GrowthFunction GrowthFunction::factorial() { return GrowthFunction(make_node(Node{FactorialNode{}})); }

GrowthFunction GrowthFunction::sub_factorial(double theta) {
    if (!(theta > 0 && theta <= 1)) throw ParseError("subfact theta must lie in (0, 1]");
    return GrowthFunction(make_node(Node{SubFactorialNode{theta}}));
}

GrowthFunction GrowthFunction::power(GrowthFunction base, double d) {
    if (!(d > 0)) throw ParseError("pow exponent must be > 0");
    return GrowthFunction(make_node(Node{PowerNode{base.node_, d}}));
}

GrowthFunction GrowthFunction::product(GrowthFunction a, GrowthFunction b) {
    return GrowthFunction(make_node(Node{ProductNode{a.node_, b.node_}}));
}

GrowthFunction GrowthFunction::scaled_sum(double x, GrowthFunction a, double y, GrowthFunction b) {
    if (x < 1 || y < 1) throw ParseError("sum weights must be >= 1");
    return GrowthFunction(make_node(Node{ScaledSumNode{x, y, a.node_, b.node_}}));
}

GrowthFunction GrowthFunction::sampled(std::vector<double> log_values, std::string label) {
    if (log_values.empty()) throw ParseError("sampled growth function needs at least one value");
    return GrowthFunction(make_node(Node{SampledNode{std::move(log_values), std::move(label)}}));
}

double GrowthFunction::log_at(std::int64_t n) const { return node_log_at(*node_, n); }

std::optional<std::int64_t> GrowthFunction::max_arg() const { return node_max_arg(*node_); }

std::optional<GrowthFunction::SymbolicClass> GrowthFunction::symbolic_class() const {
    return node_class(*node_);
}

std::string GrowthFunction::to_string() const { return node_to_string(*node_); }

long GrowthFunction::subfactorial_clamp_count() { return g_subfact_clamps.load(); }

CompareResult symbolic_compare(const GrowthFunction& a, const GrowthFunction& b) {
    auto ca = a.symbolic_class();
    auto cb = b.symbolic_class();
    if (!ca || !cb) return CompareResult::Unknown;
    if (*ca == *cb) return CompareResult::Equivalent;
    return *ca < *cb ? CompareResult::Precedes : CompareResult::Succeeds;
}

SubmultVerdict check_submultiplicative(const GrowthFunction& sigma, std::int64_t N, double log_tol) {
    for (std::int64_t n = 0; n <= N; ++n) {
        double ln = sigma.log_at(n);
        for (std::int64_t m = 0; n + m <= N; ++m) {
            double lhs = sigma.log_at(n + m);
            double rhs = ln + sigma.log_at(m);
            double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            if (lhs > rhs + log_tol * scale) return {false, std::make_pair(n, m)};
        }
    }
    return {true, std::nullopt};
}

double fit_almost_submultiplicative(const GrowthFunction& sigma, double eps, std::int64_t N) {
    if (!(eps > 0)) throw ParseError("eps must be > 0");
    double best = 0.0;  // log c, clamped below at log 1 = 0
    for (std::int64_t n = 0; n <= N; ++n) {
        double ln = sigma.log_at(n);
        for (std::int64_t m = n; n + m <= N; ++m) {
            double gap = sigma.log_at(n + m) - (1.0 + eps) * (ln + sigma.log_at(m));
            if (gap > best) best = gap;
        }
    }
    return std::exp(best);
}

namespace {

std::int64_t effective_range(const GrowthFunction& sigma, const GrowthFunction& sigma_prime,
                             std::int64_t c, std::int64_t N) {
    if (auto m = sigma.max_arg()) N = std::min(N, *m);
    if (auto m = sigma_prime.max_arg()) N = std::min(N, *m / c);
    return N;
}

}  // namespace

bool check_precedes(const GrowthFunction& sigma, const GrowthFunction& sigma_prime, std::int64_t c,
                    std::int64_t k, std::int64_t N, double log_tol) {
    if (c < 1 || k < 1) throw ParseError("witness constants must be >= 1");
    std::int64_t range = effective_range(sigma, sigma_prime, c, N);
    double logc = std::log(static_cast<double>(c));
    for (std::int64_t n = 0; n <= range; ++n) {
        double lhs = sigma.log_at(n);
        double rhs = logc + static_cast<double>(k) * sigma_prime.log_at(c * n);
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (lhs > rhs + log_tol * scale) return false;
    }
    return true;
}

std::optional<GrowthWitness> search_witness(const GrowthFunction& sigma,
                                            const GrowthFunction& sigma_prime, std::int64_t c_max,
                                            std::int64_t k_max, std::int64_t N) {
    for (std::int64_t c = 1; c <= c_max; ++c) {
        for (std::int64_t k = 1; k <= k_max; ++k) {
            if (check_precedes(sigma, sigma_prime, c, k, N))
                return GrowthWitness{c, k, effective_range(sigma, sigma_prime, c, N)};
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') depth++;
        if (ch == ')') depth--;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw ParseError("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("cannot parse number from '" + s + "'");
    }
}

}  // namespace

GrowthFunction parse_growth(const std::string& text) {
    std::string s = trim(text);
    if (s == "factorial") return GrowthFunction::factorial();
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw ParseError("cannot parse growth function from '" + text + "'");
    std::string head = trim(s.substr(0, open));
    auto args = split_args(s.substr(open + 1, s.size() - open - 2));
    if (head == "poly") {
        std::vector<double> coeffs;
        for (const auto& a : args) coeffs.push_back(parse_number(trim(a)));
        return GrowthFunction::polynomial(std::move(coeffs));
    }
    if (head == "subexp") {
        if (args.size() != 1) throw ParseError("subexp takes one argument");
        return GrowthFunction::sub_exponential(parse_number(trim(args[0])));
    }
    if (head == "subfact") {
        if (args.size() != 1) throw ParseError("subfact takes one argument");
        return GrowthFunction::sub_factorial(parse_number(trim(args[0])));
    }
    if (head == "pow") {
        if (args.size() != 2) throw ParseError("pow takes (growth, exponent)");
        return GrowthFunction::power(parse_growth(trim(args[0])), parse_number(trim(args[1])));
    }
    if (head == "prod") {
        if (args.size() != 2) throw ParseError("prod takes two growth functions");
        return GrowthFunction::product(parse_growth(trim(args[0])), parse_growth(trim(args[1])));
    }
    if (head == "sum") {
        if (args.size() != 4) throw ParseError("sum takes (x, growth, y, growth)");
        return GrowthFunction::scaled_sum(parse_number(trim(args[0])), parse_growth(trim(args[1])),
                                          parse_number(trim(args[2])), parse_growth(trim(args[3])));
    }
    throw ParseError("unknown growth function '" + head + "'");
}

}  // namespace gaw
