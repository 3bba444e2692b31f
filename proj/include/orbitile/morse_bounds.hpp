#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbitile/geodesics.hpp"

namespace orbitile {

enum class Verdict { EllipticConsistent, Violation };

std::string to_string(Verdict v);

// Fitted-growth-degree gates, with slack for integer staircase effects.
inline constexpr double kLinearDegreeThreshold = 1.2;
inline constexpr double kQuadraticDegreeThreshold = 2.2;

// Per-index cell counts of a census. Each record contributes one cell of its
// index; the counts are upper proxies for loop-space Betti numbers, never
// exact Betti numbers.
std::map<int, std::size_t> index_histogram(const std::vector<GeodesicRecord>& records);

struct BettiBoundReport {
    enum class BoundKind { Linear, Quadratic };

    int case_id = 0;
    IndexParams params;
    BoundKind bound_kind = BoundKind::Linear;
    long c = 0;  // tile count (linear bound only)
    std::map<int, std::size_t> histogram;
    std::vector<std::size_t> cumulative;  // n = 0..n_max
    std::vector<long> bound_values;       // 2*c*lambda*(n+1) or 4*(2(n-m)+1)^2
    std::vector<char> satisfied;          // per n
    double fitted_degree = 0;             // NaN when the series is too short
    Verdict verdict = Verdict::Violation;

    bool all_satisfied() const;
    int first_violation() const;  // witnessing n, or -1
};

// Cumulative histogram against the spherical bound 2*c*lambda*(n+1) for
// n = 0..n_max.
BettiBoundReport check_linear_bound(const std::map<int, std::size_t>& hist, long c,
                                    IndexParams params, int n_max);

// Cumulative histogram against the planar bound 4*(2(n-m)+1)^2.
BettiBoundReport check_quadratic_bound(const std::map<int, std::size_t>& hist, IndexParams params,
                                       int n_max);

// Least-squares slope of log(cumulative) against log(n+1) over the upper half
// of the series (small-n transients suppressed). Requires length >= 5 with a
// positive fit window; throws UndefinedFitError otherwise.
double fit_growth_degree(const std::vector<double>& cumulative);
double fit_growth_degree(const std::vector<std::size_t>& cumulative);

// Worst case over several generic configurations: pointwise max cumulative,
// re-checked against the common bounds. Reports must share kind, params, c
// and length.
BettiBoundReport aggregate_worst_case(const std::vector<BettiBoundReport>& reports);

}  // namespace orbitile
