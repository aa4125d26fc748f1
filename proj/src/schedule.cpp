#include "eqaoa/schedule.hpp"

#include "eqaoa/errors.hpp"

#include <cmath>
#include <numbers>

namespace eqaoa {

std::string to_string(ScheduleVariant v) {
    return v == ScheduleVariant::full ? "full" : "reduced";
}

std::string to_string(GammaForm g) {
    switch (g) {
    case GammaForm::literal:
        return "literal";
    case GammaForm::odd:
        return "odd";
    case GammaForm::custom:
        return "custom";
    }
    return "unknown";
}

std::string to_string(LogBase b) { return b == LogBase::two ? "2" : "e"; }

ScheduleVariant parse_variant(std::string_view s) {
    if (s == "full") {
        return ScheduleVariant::full;
    }
    if (s == "reduced") {
        return ScheduleVariant::reduced;
    }
    throw DomainError("unknown schedule variant '" + std::string(s) + "'");
}

GammaForm parse_gamma_form(std::string_view s) {
    if (s == "literal") {
        return GammaForm::literal;
    }
    if (s == "odd") {
        return GammaForm::odd;
    }
    throw DomainError("unknown gamma form '" + std::string(s) + "'");
}

LogBase parse_log_base(std::string_view s) {
    if (s == "2") {
        return LogBase::two;
    }
    if (s == "e") {
        return LogBase::natural;
    }
    throw DomainError("unknown log base '" + std::string(s) + "'");
}

double log_in(LogBase base, double x) {
    return base == LogBase::two ? std::log2(x) : std::log(x);
}

int iteration_count(int n, int m, ScheduleVariant variant, LogBase base) {
    if (n < 1) {
        throw DomainError("iteration count needs n >= 1");
    }
    if (m < 2) {
        throw DomainError("iteration count needs m >= 2");
    }
    const double arg = variant == ScheduleVariant::full
                           ? static_cast<double>(m)
                           : 2.0 * m / static_cast<double>(n);
    const double count = std::ceil(n * log_in(base, arg) / std::numbers::sqrt2);
    if (!(count >= 1.0)) {
        throw DomainError("schedule for n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + " has no iterations");
    }
    return static_cast<int>(count);
}

double beta_default(int n) {
    if (n < 1) {
        throw DomainError("beta_default needs n >= 1");
    }
    return 1.0 / n;
}

double gamma_schedule(int p, int n, int m, const Schedule &schedule) {
    if (p < 1 || p > schedule.p_max) {
        throw DomainError("iteration " + std::to_string(p) + " outside [1, " +
                          std::to_string(schedule.p_max) + "]");
    }
    constexpr double pi = std::numbers::pi;
    switch (schedule.gamma_form) {
    case GammaForm::literal:
        return (std::floor(2.0 * std::numbers::sqrt2 * p / n) + 1.0) * pi;
    case GammaForm::odd: {
        double t = 0.0;
        if (schedule.variant == ScheduleVariant::full) {
            t = std::floor(std::numbers::sqrt2 * p / n);
        } else {
            const double t_max = std::ceil(
                log_in(schedule.log_base, 2.0 * static_cast<double>(m) * n));
            t = std::floor(t_max * p / schedule.p_max);
        }
        return (2.0 * t + 1.0) * pi;
    }
    case GammaForm::custom:
        return schedule.gammas.at(static_cast<std::size_t>(p - 1));
    }
    throw DomainError("unknown gamma form");
}

double Schedule::gamma_at(int p) const { return gamma_schedule(p, n, m, *this); }

Schedule make_schedule(int n, int m, ScheduleVariant variant, GammaForm form,
                       LogBase base) {
    if (form == GammaForm::custom) {
        throw DomainError("custom schedules are built with custom_schedule");
    }
    Schedule s;
    s.variant = variant;
    s.gamma_form = form;
    s.p_max = iteration_count(n, m, variant, base);
    s.beta = beta_default(n);
    s.log_base = base;
    s.n = n;
    s.m = m;
    return s;
}

Schedule custom_schedule(std::vector<double> gammas, double beta) {
    if (gammas.empty()) {
        throw DomainError("custom schedule needs at least one iteration");
    }
    Schedule s;
    s.gamma_form = GammaForm::custom;
    s.p_max = static_cast<int>(gammas.size());
    s.beta = beta;
    s.gammas = std::move(gammas);
    return s;
}

} // namespace eqaoa
