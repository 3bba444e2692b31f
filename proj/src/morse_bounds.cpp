#include "orbitile/morse_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orbitile/errors.hpp"

namespace orbitile {

std::string to_string(Verdict v) {
    return v == Verdict::EllipticConsistent ? "elliptic-consistent" : "violation";
}

std::map<int, std::size_t> index_histogram(const std::vector<GeodesicRecord>& records) {
    std::map<int, std::size_t> hist;
    for (const GeodesicRecord& r : records) ++hist[r.index];
    return hist;
}

bool BettiBoundReport::all_satisfied() const {
    return std::all_of(satisfied.begin(), satisfied.end(), [](char s) { return s != 0; });
}

int BettiBoundReport::first_violation() const {
    for (std::size_t n = 0; n < satisfied.size(); ++n)
        if (!satisfied[n]) return static_cast<int>(n);
    return -1;
}

double fit_growth_degree(const std::vector<double>& cumulative) {
    if (cumulative.size() < 5)
        throw UndefinedFitError("growth fit needs a series of length at least 5");
    const std::size_t start = cumulative.size() / 2;  // upper half of the series
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t i = start; i < cumulative.size(); ++i) {
        if (!(cumulative[i] > 0))
            throw UndefinedFitError("growth fit window contains nonpositive entries");
        const double x = std::log(static_cast<double>(i + 1));
        const double y = std::log(cumulative[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-15) throw UndefinedFitError("degenerate abscissa in growth fit");
    return (n * sxy - sx * sy) / denom;
}

double fit_growth_degree(const std::vector<std::size_t>& cumulative) {
    std::vector<double> v(cumulative.begin(), cumulative.end());
    return fit_growth_degree(v);
}

namespace {

BettiBoundReport make_report(const std::map<int, std::size_t>& hist, IndexParams params, int n_max,
                             BettiBoundReport::BoundKind kind, long c) {
    if (n_max < 0) throw std::domain_error("n_max must be nonnegative");

    BettiBoundReport rep;
    rep.params = params;
    rep.bound_kind = kind;
    rep.c = c;
    rep.histogram = hist;

    std::size_t running = 0;
    auto it = hist.begin();
    for (int n = 0; n <= n_max; ++n) {
        while (it != hist.end() && it->first <= n) {
            running += it->second;
            ++it;
        }
        rep.cumulative.push_back(running);
        long bound;
        if (kind == BettiBoundReport::BoundKind::Linear) {
            bound = 2L * c * params.lambda() * (n + 1);
        } else {
            const long w = 2L * (n - params.m) + 1;
            bound = 4L * w * w;
        }
        rep.bound_values.push_back(bound);
        rep.satisfied.push_back(running <= static_cast<std::size_t>(bound) ? 1 : 0);
    }

    try {
        rep.fitted_degree = fit_growth_degree(rep.cumulative);
    } catch (const UndefinedFitError&) {
        rep.fitted_degree = std::numeric_limits<double>::quiet_NaN();
    }

    const double threshold = kind == BettiBoundReport::BoundKind::Linear
                                 ? kLinearDegreeThreshold
                                 : kQuadraticDegreeThreshold;
    rep.verdict = rep.all_satisfied() && !(rep.fitted_degree > threshold)
                      ? Verdict::EllipticConsistent
                      : Verdict::Violation;
    return rep;
}

}  // namespace

BettiBoundReport check_linear_bound(const std::map<int, std::size_t>& hist, long c,
                                    IndexParams params, int n_max) {
    if (c <= 0) throw std::domain_error("tile count must be positive");
    return make_report(hist, params, n_max, BettiBoundReport::BoundKind::Linear, c);
}

BettiBoundReport check_quadratic_bound(const std::map<int, std::size_t>& hist, IndexParams params,
                                       int n_max) {
    return make_report(hist, params, n_max, BettiBoundReport::BoundKind::Quadratic, 0);
}

BettiBoundReport aggregate_worst_case(const std::vector<BettiBoundReport>& reports) {
    if (reports.empty()) throw std::domain_error("nothing to aggregate");
    const BettiBoundReport& first = reports.front();
    for (const BettiBoundReport& r : reports) {
        if (r.bound_kind != first.bound_kind || r.c != first.c ||
            r.params.m != first.params.m || r.cumulative.size() != first.cumulative.size())
            throw std::domain_error("aggregate_worst_case: mismatched reports");
    }

    std::map<int, std::size_t> worst_hist;
    std::vector<std::size_t> worst(first.cumulative.size(), 0);
    for (const BettiBoundReport& r : reports)
        for (std::size_t n = 0; n < worst.size(); ++n)
            worst[n] = std::max(worst[n], r.cumulative[n]);
    // Rebuild a histogram whose cumulative sums are the worst-case envelope.
    std::size_t prev = 0;
    for (std::size_t n = 0; n < worst.size(); ++n) {
        worst[n] = std::max(worst[n], prev);  // keep the envelope monotone
        if (worst[n] > prev) worst_hist[static_cast<int>(n)] = worst[n] - prev;
        prev = worst[n];
    }

    BettiBoundReport rep = make_report(worst_hist, first.params,
                                       static_cast<int>(worst.size()) - 1, first.bound_kind,
                                       first.c);
    rep.case_id = first.case_id;
    return rep;
}

}  // namespace orbitile
