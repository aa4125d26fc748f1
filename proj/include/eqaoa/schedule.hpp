#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eqaoa {

enum class ScheduleVariant {
    full,    // n log(m) / sqrt(2) iterations
    reduced, // n log(2m / n) / sqrt(2) iterations
};

enum class GammaForm {
    literal, // (floor(2 sqrt(2) p / n) + 1) pi
    odd,     // (2 t + 1) pi with t ramping linearly up to t_max
    custom,  // explicit per-iteration values
};

enum class LogBase { two, natural };

std::string to_string(ScheduleVariant v);
std::string to_string(GammaForm g);
std::string to_string(LogBase b);
// Throw DomainError on unknown names. Log base accepts "2" and "e".
ScheduleVariant parse_variant(std::string_view s);
GammaForm parse_gamma_form(std::string_view s);
LogBase parse_log_base(std::string_view s);

double log_in(LogBase base, double x);

/// ceil(n log(m) / sqrt 2) (full) or ceil(n log(2m/n) / sqrt 2) (reduced).
/// Throws DomainError for n < 1, m < 2 or a non-positive result.
int iteration_count(int n, int m, ScheduleVariant variant,
                    LogBase base = LogBase::two);

/// 1/n: rescales the spectrum of sum_j Z_j to [-1, 1].
double beta_default(int n);

/**
 * Fixed parameter schedule: one gamma_s per iteration p = 1..p_max and a
 * constant mixer angle beta.
 */
struct Schedule {
    ScheduleVariant variant = ScheduleVariant::full;
    GammaForm gamma_form = GammaForm::literal;
    int p_max = 1;
    double beta = 1.0;
    LogBase log_base = LogBase::two;
    int n = 1;
    int m = 2;
    // Per-iteration gamma_s for GammaForm::custom.
    std::vector<double> gammas;

    double gamma_at(int p) const;
};

/// Schedule with p_max = iteration_count(...) and beta = 1/n.
Schedule make_schedule(int n, int m, ScheduleVariant variant, GammaForm form,
                       LogBase base = LogBase::two);

/// Custom schedule with p_max = gammas.size().
Schedule custom_schedule(std::vector<double> gammas, double beta);

/// gamma_s for iteration p of a formula schedule; DomainError when p is
/// outside [1, p_max].
double gamma_schedule(int p, int n, int m, const Schedule &schedule);

} // namespace eqaoa
