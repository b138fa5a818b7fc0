#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaw/algebra.hpp"
#include "gaw/ball.hpp"
#include "gaw/growth.hpp"
#include "gaw/norms.hpp"

namespace gaw {

// Finite-evidence verdicts. "Summable" is undecidable from finitely many
// terms; the operational criterion is a delta-margin ratio test over the
// last quarter of the tabulated range.
enum class Verdict { SummableEvidence, DivergentEvidence, Inconclusive };

std::string verdict_string(Verdict v);

struct SeriesDiagnostics {
    std::vector<double> log_terms;
    std::vector<double> log_partial_sums;
    std::vector<double> ratios;  // t_{n+1} / t_n, linear scale
    Verdict verdict = Verdict::Inconclusive;
};

SeriesDiagnostics diagnose_series(std::span<const double> log_terms, double delta = 0.05);

// Surface and volume growth of a group as log-count arrays for n = 0..N.
// Obtainable from an enumerated ball (exact counts) or, for catalog groups
// with their default generator sets, from closed-form count formulas that
// reach far beyond any enumerable radius.
struct GrowthSeries {
    std::string group;
    std::vector<double> log_sigma;  // -inf marks an empty shell
    std::vector<double> log_beta;
    int radius() const { return static_cast<int>(log_sigma.size()) - 1; }
};

GrowthSeries growth_series_from_table(const LengthTable& table);
std::optional<GrowthSeries> closed_form_growth_series(const GroupSpec& spec, int N);
// Closed form when available, ball enumeration otherwise.
GrowthSeries growth_series(const GroupSpec& spec, int N, std::size_t max_elements = 5'000'000);

// Known growth class of a catalog group with its default generator set,
// composed over direct products. Standard facts, hard-coded.
struct GroupGrowthClass {
    enum Kind { Bounded, Polynomial, Exponential } kind = Bounded;
    int degree = 0;  // meaningful for Polynomial
};
GroupGrowthClass group_growth_class(const GroupSpec& spec);

// Class-rule verdict for "the weighted algebra over (G, sigma) is nuclear",
// i.e. whether the volume growth of G precedes sigma. Empty when sigma has
// no symbolic class.
std::optional<bool> symbolic_nuclear(const GroupSpec& spec, const GrowthFunction& sigma);

// sum_{n <= N} sigma_G(n) / sigma(n)^rho, streamed in log space.
std::vector<double> gp_log_partial_sums(const GrowthSeries& series, const GrowthFunction& sigma,
                                        double rho, int N);
std::vector<double> gp_log_partial_sums(const LengthTable& table, const GrowthFunction& sigma,
                                        double rho, int N);

struct GPReport {
    std::string group;
    std::string sigma;
    int N = 0;
    std::vector<double> rho_grid;
    std::vector<SeriesDiagnostics> per_rho;
    Verdict verdict = Verdict::Inconclusive;  // summable iff some rho passes
    std::optional<bool> symbolic;
    bool consistent = true;  // empirical never contradicts symbolic
};

GPReport gp_verdict(const GroupSpec& spec, const GrowthSeries& series, const GrowthFunction& sigma,
                    std::span<const double> rho_grid, int N, double delta = 0.05);
GPReport gp_verdict(const LengthTable& table, const GrowthFunction& sigma,
                    std::span<const double> rho_grid, int N, double delta = 0.05);

// Tabulated surface / volume growth wrapped for the comparison machinery.
GrowthFunction sampled_sigma(const GrowthSeries& series);
GrowthFunction sampled_beta(const GrowthSeries& series);
GrowthFunction sampled_sigma(const LengthTable& table);
GrowthFunction sampled_beta(const LengthTable& table);

struct SurfaceVolumeReport {
    std::optional<GrowthWitness> sigma_witness;  // sigma_G before sigma
    std::optional<GrowthWitness> beta_witness;   // beta_G before sigma
    bool construction_bound_holds = false;  // beta_G(n) <= c (1+n) sigma(cn)^k from the sigma witness
    bool agree = false;                     // both found or both missing on this range
};

SurfaceVolumeReport surface_vs_volume(const GrowthSeries& series, const GrowthFunction& sigma,
                                      std::int64_t c_max = 8, std::int64_t k_max = 8);
SurfaceVolumeReport surface_vs_volume(const LengthTable& table, const GrowthFunction& sigma,
                                      std::int64_t c_max = 8, std::int64_t k_max = 8);

struct SandwichResult {
    bool found = false;
    double R_prime = 0.0;
    double log_c = 0.0;  // truncated weight sum plus geometric tail bound
    std::size_t checked_samples = 0;
};

// Searches R' > R on a grid such that ||a||_{1,sigma,R} <= c ||a||_{inf,sigma,R'}
// holds for all samples with the series-derived candidate constant.
SandwichResult norm_sandwich(const LengthTable& table, const GrowthFunction& sigma, double R,
                             std::span<const AlgebraElement> samples,
                             std::span<const double> rprime_offsets, double delta = 0.05,
                             double tol = 1e-9);

// sum_{L(g) = n} e_g; the coefficient count equals sigma_G(n).
AlgebraElement complete_growth_shell(const LengthTable& table, int n);

struct CompleteGrowthReport {
    double z = 0.0;
    double R = 0.0;
    int N = 0;
    SeriesDiagnostics series;  // terms |z|^n sigma_G(n) / sigma(n)^R
    double tail_sum = 0.0;     // T_N in linear scale (may overflow to inf)
};

CompleteGrowthReport complete_growth_tail(const GrowthSeries& series, const GrowthFunction& sigma,
                                          double R, double z, int N, double delta = 0.05);
CompleteGrowthReport complete_growth_tail(const LengthTable& table, const GrowthFunction& sigma,
                                          double R, double z, int N, double delta = 0.05);

// Smallest grid R whose tail series earns summable evidence.
std::optional<double> minimal_R(const GrowthSeries& series, const GrowthFunction& sigma, double z,
                                std::span<const double> R_grid, int N, double delta = 0.05);
std::optional<double> minimal_R(const LengthTable& table, const GrowthFunction& sigma, double z,
                                std::span<const double> R_grid, int N, double delta = 0.05);

}  // namespace gaw
