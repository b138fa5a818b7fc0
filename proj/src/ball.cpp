#include "gaw/ball.hpp"

#include <algorithm>

#include "ball_builder.hpp"
#include "gaw/errors.hpp"

namespace gaw {

std::size_t LengthTable::index_of(const Element& g) const {
    auto it = index_.find(g);
    if (it == index_.end())
        throw OutOfBallError("element " + spec_.element_to_string(g) + " outside ball of radius " +
                             std::to_string(radius_));
    return it->second;
}

int LengthTable::word_length(const Element& g) const { return lengths_[index_of(g)]; }

int LengthTable::word_metric(const Element& g, const Element& h) const {
    return word_length(spec_.multiply(spec_.inverse(g), h));
}

std::int64_t LengthTable::length_extended(const Element& g) const {
    if (auto l = spec_.closed_form_length(g)) return *l;
    return word_length(g);
}

std::pair<std::size_t, std::size_t> LengthTable::shell(int n) const {
    if (n < 0 || n > radius_) throw OutOfBallError("shell " + std::to_string(n) + " beyond radius");
    return {shell_begin_[n], shell_begin_[n + 1]};
}

void LengthTable::finalize() {
    index_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    inverse_index_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i)
        inverse_index_[i] = index_.at(spec_.inverse(elements_[i]));
    beta_.resize(sigma_.size());
    std::uint64_t acc = 0;
    for (std::size_t n = 0; n < sigma_.size(); ++n) {
        acc += sigma_[n];
        beta_[n] = acc;
    }
}

LengthTable BallBuilder::build(const GroupSpec& spec, int radius, std::size_t max_elements,
                               bool parallel) {
    if (radius < 0) throw ParseError("ball radius must be >= 0");
    LengthTable table(spec);
    table.radius_ = radius;
    table.sigma_.assign(static_cast<std::size_t>(radius) + 1, 0);

    const auto& gens = spec.generators();
    std::unordered_map<Element, std::size_t, ElementHash> seen;
    table.elements_.push_back(spec.identity());
    table.lengths_.push_back(0);
    seen.emplace(spec.identity(), 0);
    table.sigma_[0] = 1;

    std::size_t frontier_begin = 0, frontier_end = 1;
    for (int level = 1; level <= radius && frontier_begin < frontier_end; ++level) {
        const std::size_t frontier_size = frontier_end - frontier_begin;
        constexpr std::size_t kChunk = 512;
        const std::size_t nchunks = (frontier_size + kChunk - 1) / kChunk;
        std::vector<std::vector<Element>> local(nchunks);

        // expansion reads `seen` only; new elements are inserted after the merge
#pragma omp parallel for schedule(dynamic) if (parallel && nchunks > 1)
        for (std::size_t c = 0; c < nchunks; ++c) {
            auto& out = local[c];
            const std::size_t lo = frontier_begin + c * kChunk;
            const std::size_t hi = std::min(frontier_begin + (c + 1) * kChunk, frontier_end);
            for (std::size_t i = lo; i < hi; ++i) {
                for (const auto& s : gens) {
                    Element p = spec.multiply(table.elements_[i], s);
                    if (seen.find(p) == seen.end()) out.push_back(std::move(p));
                }
            }
        }

        std::vector<Element> candidates;
        for (auto& l : local) {
            candidates.insert(candidates.end(), std::make_move_iterator(l.begin()),
                              std::make_move_iterator(l.end()));
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        if (table.elements_.size() + candidates.size() > max_elements)
            throw ResourceLimitError("ball of " + spec.family_string() + " exceeds cap of " +
                                     std::to_string(max_elements) + " elements at radius " +
                                     std::to_string(level));

        frontier_begin = table.elements_.size();
        for (auto& e : candidates) {
            seen.emplace(e, table.elements_.size());
            table.elements_.push_back(std::move(e));
            table.lengths_.push_back(level);
        }
        frontier_end = table.elements_.size();
        table.sigma_[level] = frontier_end - frontier_begin;
    }

    // finite groups saturate early; remaining shells stay empty
    table.shell_begin_.assign(static_cast<std::size_t>(radius) + 2, 0);
    for (int n = 0; n <= radius; ++n)
        table.shell_begin_[n + 1] = table.shell_begin_[n] + table.sigma_[n];

    table.finalize();
    return table;
}

LengthTable enumerate_ball(const GroupSpec& spec, int radius, const BallOptions& opts) {
    return BallBuilder::build(spec, radius, opts.max_elements, opts.parallel);
}

LengthTable enumerate_ball_serial(const GroupSpec& spec, int radius, std::size_t max_elements) {
    return BallBuilder::build(spec, radius, max_elements, false);
}

}  // namespace gaw
