#pragma once

#include <cstdint>
#include <stdexcept>

#include "hyperbandit/matrix.hpp"
#include "hyperbandit/rng.hpp"

namespace hyperbandit {

inline constexpr int kDaysPerWeek = 7;
inline constexpr int kSessionsPerDay = 5;
inline constexpr int kNumPeriods = kDaysPerWeek * kSessionsPerDay;  // 35
inline constexpr int kPeriodEmbeddingDim = 30;

/// One of the 35 weekly time slots: index = day * 5 + session, Monday = 0.
struct TimePeriod {
    int index = 0;

    static TimePeriod from_index(int index) {
        if (index < 0 || index >= kNumPeriods)
            throw std::invalid_argument("TimePeriod: index out of range [0,34]");
        return TimePeriod{index};
    }
    int day() const { return index / kSessionsPerDay; }
    int session() const { return index % kSessionsPerDay; }
};

/// Daily session for a minute-of-day:
///   0 = [8:00,11:30)  1 = [11:30,14:00)  2 = [14:00,17:30)  3 = [17:30,22:00)
///   4 = the remainder (22:00-24:00 and 0:00-8:00)
inline int session_of_minutes(int minutes_of_day) {
    if (minutes_of_day < 0 || minutes_of_day > 1439)
        throw std::invalid_argument("session_of_minutes: minutes out of range [0,1439]");
    if (minutes_of_day < 8 * 60) return 4;
    if (minutes_of_day < 11 * 60 + 30) return 0;
    if (minutes_of_day < 14 * 60) return 1;
    if (minutes_of_day < 17 * 60 + 30) return 2;
    if (minutes_of_day < 22 * 60) return 3;
    return 4;
}

/// Weekly period for (day, minute). Monday = day 0.
inline TimePeriod period_of(int day_index, int minutes_of_day) {
    if (day_index < 0 || day_index >= kDaysPerWeek)
        throw std::invalid_argument("period_of: day index out of range [0,6]");
    return TimePeriod{day_index * kSessionsPerDay + session_of_minutes(minutes_of_day)};
}

/// Unit-norm 30-dim embedding of a period, a deterministic function of
/// (period, seed). Distinct periods get distinct directions.
inline Vector embed_period(TimePeriod p, uint64_t seed) {
    if (p.index < 0 || p.index >= kNumPeriods)
        throw std::invalid_argument("embed_period: invalid period");
    RngEngine eng = seeded_engine(seed, static_cast<uint64_t>(p.index));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(kPeriodEmbeddingDim);
    for (double& x : v) x = gauss(eng);
    const double n = norm2(v);
    for (double& x : v) x /= n;
    return v;
}

/// Embedding table for all 35 periods, one row per period.
inline Matrix all_period_embeddings(uint64_t seed) {
    Matrix table(kNumPeriods, kPeriodEmbeddingDim);
    for (int p = 0; p < kNumPeriods; ++p) {
        Vector v = embed_period(TimePeriod{p}, seed);
        for (int j = 0; j < kPeriodEmbeddingDim; ++j) table(p, j) = v[j];
    }
    return table;
}

}  // namespace hyperbandit
