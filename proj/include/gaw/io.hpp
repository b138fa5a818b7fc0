#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gaw/algebra.hpp"
#include "gaw/ball.hpp"
#include "gaw/group.hpp"

namespace gaw {

// Short group names: z, z3, f2, c5, heis, prod(z2,f2), ... An optional
// semicolon-separated generator list (normal forms) replaces the defaults.
GroupSpec parse_group(const std::string& text);
GroupSpec parse_group(const std::string& text, const std::string& generator_list);

std::uint64_t fnv1a64(const std::string& s);

// Element files: '#' comment lines, then one term per line as
// "coefficient_re coefficient_im normal-form".
AlgebraElement read_element_file(std::shared_ptr<const GroupSpec> spec,
                                 const std::filesystem::path& path);
void write_element_file(const AlgebraElement& a, const std::filesystem::path& path);

// Versioned ball cache keyed by the spec hash; rows are "normal-form\tlength"
// in table order. Readers reject files whose header does not match the
// requested spec and radius.
void write_ball_cache(const LengthTable& table, const std::filesystem::path& path);
LengthTable read_ball_cache(const GroupSpec& spec, const std::filesystem::path& path);

void write_sigma_beta_csv(const LengthTable& table, const std::filesystem::path& path);
void write_series_csv(const std::vector<double>& values, const std::string& column,
                      const std::filesystem::path& path);

}  // namespace gaw
