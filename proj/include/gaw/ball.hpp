#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "gaw/element.hpp"
#include "gaw/group.hpp"

namespace gaw {

struct BallOptions {
    std::size_t max_elements = 5'000'000;
    bool parallel = true;
};

// A Cayley ball of radius N: every element of word length <= N together with
// its exact length, plus the per-shell counts sigma and their running sums
// beta. Elements are stored shell-major and sorted within each shell, so two
// enumerations of the same (spec, N) produce identical tables.
class LengthTable {
public:
    const GroupSpec& spec() const { return spec_; }
    int radius() const { return radius_; }
    std::size_t size() const { return elements_.size(); }

    const Element& element(std::size_t i) const { return elements_[i]; }
    int length_at(std::size_t i) const { return lengths_[i]; }
    std::size_t inverse_index(std::size_t i) const { return inverse_index_[i]; }

    bool contains(const Element& g) const { return index_.find(g) != index_.end(); }
    std::size_t index_of(const Element& g) const;  // throws OutOfBallError

    // Exact word length of a tabulated element; OutOfBallError otherwise.
    int word_length(const Element& g) const;

    // d(g, h) = L(g^{-1} h); OutOfBallError when the quotient leaves the ball.
    int word_metric(const Element& g, const Element& h) const;

    // Table lookup with a closed-form fallback for default generator sets;
    // serves lengths beyond the radius where a formula exists.
    std::int64_t length_extended(const Element& g) const;

    std::span<const std::uint64_t> sigma() const { return sigma_; }
    std::span<const std::uint64_t> beta() const { return beta_; }

    // Index range [first, last) of the shell {g | L(g) = n}.
    std::pair<std::size_t, std::size_t> shell(int n) const;

    bool same_table(const LengthTable& o) const {
        return spec_ == o.spec_ && radius_ == o.radius_ && elements_ == o.elements_ &&
               lengths_ == o.lengths_ && sigma_ == o.sigma_ && beta_ == o.beta_;
    }

private:
    friend LengthTable enumerate_ball(const GroupSpec&, int, const BallOptions&);
    friend class BallBuilder;

    explicit LengthTable(GroupSpec spec) : spec_(std::move(spec)) {}
    void finalize();

    GroupSpec spec_;
    int radius_ = 0;
    std::vector<Element> elements_;   // shell-major, sorted within shells
    std::vector<int> lengths_;        // parallel to elements_
    std::vector<std::size_t> inverse_index_;
    std::vector<std::size_t> shell_begin_;  // size radius+2
    std::vector<std::uint64_t> sigma_;
    std::vector<std::uint64_t> beta_;
    std::unordered_map<Element, std::size_t, ElementHash> index_;
};

// Breadth-first search from the identity over right multiplication by the
// generators. Frontier expansion may run on several threads; the resulting
// table does not depend on the thread count.
LengthTable enumerate_ball(const GroupSpec& spec, int radius, const BallOptions& opts = {});

// Single-threaded reference used by the tests and the benchmark.
LengthTable enumerate_ball_serial(const GroupSpec& spec, int radius, std::size_t max_elements = 5'000'000);

}  // namespace gaw
