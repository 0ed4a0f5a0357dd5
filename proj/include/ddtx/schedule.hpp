#ifndef DDTX_SCHEDULE_HPP
#define DDTX_SCHEDULE_HPP

#include <cmath>
#include <string>
#include <vector>

#include "ddtx/errors.hpp"

namespace ddtx {

enum class ScheduleKind { Linear, Sqrt };

inline std::string schedule_kind_name(ScheduleKind k) {
    return k == ScheduleKind::Linear ? "linear" : "sqrt";
}

inline ScheduleKind schedule_kind_from(const std::string& s) {
    if (s == "linear") return ScheduleKind::Linear;
    if (s == "sqrt") return ScheduleKind::Sqrt;
    throw UsageError("unknown schedule kind: " + s);
}

/// Variance schedule and the derived per-step coefficients.  Arrays are
/// indexed by t in [1, T]; t = 0 is clean data and is not stored.
struct NoiseSchedule {
    ScheduleKind kind = ScheduleKind::Sqrt;
    int T = 0;
    double beta_min = 0.0;
    double beta_max = 0.0;
    std::vector<double> beta;       // beta[t-1]  in (0, 1)
    std::vector<double> alpha;      // 1 - beta_t
    std::vector<double> alpha_bar;  // prod_{s<=t} alpha_s, strictly decreasing
    std::vector<double> sigma;      // sqrt(beta_t)

    double beta_at(int t) const { return beta[static_cast<size_t>(t - 1)]; }
    double alpha_at(int t) const { return alpha[static_cast<size_t>(t - 1)]; }
    double alpha_bar_at(int t) const { return alpha_bar[static_cast<size_t>(t - 1)]; }
    double sigma_at(int t) const { return sigma[static_cast<size_t>(t - 1)]; }

    void check_t(int t) const {
        if (t < 1 || t > T) throw UsageError("time step out of range");
    }
};

/// linear: beta interpolates [beta_min, beta_max].
/// sqrt:   alpha_bar_t follows 1 - sqrt(t/T + s0), betas derived from the
///         cumulative-product recurrence and clipped to (1e-8, 0.999); the
///         stored alpha_bar is recomputed from the clipped betas so the
///         recurrence holds exactly.
inline NoiseSchedule make_schedule(ScheduleKind kind, int T, double beta_min, double beta_max) {
    if (T < 2) throw UsageError("invalid schedule bounds");
    if (!(beta_min > 0.0 && beta_min < beta_max && beta_max < 1.0))
        throw UsageError("invalid schedule bounds");

    NoiseSchedule s;
    s.kind = kind;
    s.T = T;
    s.beta_min = beta_min;
    s.beta_max = beta_max;
    s.beta.resize(static_cast<size_t>(T));

    if (kind == ScheduleKind::Linear) {
        for (int t = 1; t <= T; ++t)
            s.beta[static_cast<size_t>(t - 1)] =
                beta_min + static_cast<double>(t - 1) / (T - 1) * (beta_max - beta_min);
    } else {
        const double s0 = 1e-4;
        double prev_ab = 1.0;  // t = 0
        for (int t = 1; t <= T; ++t) {
            const double ab = 1.0 - std::sqrt(static_cast<double>(t) / T + s0);
            double b = 1.0 - ab / prev_ab;
            b = std::min(std::max(b, 1e-8), 0.999);
            s.beta[static_cast<size_t>(t - 1)] = b;
            prev_ab *= 1.0 - b;
        }
    }

    s.alpha.resize(static_cast<size_t>(T));
    s.alpha_bar.resize(static_cast<size_t>(T));
    s.sigma.resize(static_cast<size_t>(T));
    double prod = 1.0;
    for (int t = 1; t <= T; ++t) {
        const double b = s.beta[static_cast<size_t>(t - 1)];
        s.alpha[static_cast<size_t>(t - 1)] = 1.0 - b;
        prod *= 1.0 - b;
        s.alpha_bar[static_cast<size_t>(t - 1)] = prod;
        s.sigma[static_cast<size_t>(t - 1)] = std::sqrt(b);
    }
    return s;
}

}  // namespace ddtx

#endif  // DDTX_SCHEDULE_HPP
