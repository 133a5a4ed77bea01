#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bhopm::math {

inline constexpr double half_log_two_pi = 0.9189385332046727417803297;  // 0.5*log(2*pi)
inline constexpr double inv_sqrt2 = 0.7071067811865475244008444;

double norm_pdf(double z);
double norm_logpdf(double z);

/// Standard normal CDF, accurate in the left tail (erfc based).
double norm_cdf(double z);

/// log Phi(z), finite for all finite z (asymptotic series below z = -20).
double norm_logcdf(double z);

/// log(1 - e^x) for x <= 0.
double log1mexp(double x);

double logaddexp(double a, double b);
double logsumexp(std::span<const double> xs);

/// log(Phi(b) - Phi(a)) for a < b, stable when both arguments sit in the same tail.
double norm_logcdf_diff(double a, double b);

/// Cells whose mass underflows report this floor instead of -inf so the
/// density and its gradient stay finite.
inline constexpr double cell_log_floor = -700.0;

/// log P(grade | m, s, cuts) for an ordered probit with full cut vector
/// `cuts` (K-1 strictly increasing values, fixed endpoints included).
/// Grade is 1-based. Floored at cell_log_floor.
double cell_logprob(int grade, double m, double s, std::span<const double> cuts);

/// Dense row-major matrix; just enough for draws and log-likelihood tables.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

double mean(std::span<const double> xs);

/// Unbiased sample variance; 0 for fewer than two elements.
double sample_variance(std::span<const double> xs);

}  // namespace bhopm::math
