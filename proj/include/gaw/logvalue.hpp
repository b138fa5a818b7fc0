#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <span>

namespace gaw {

// Nonnegative quantity stored as {zero | log-magnitude}. Weights like
// (n!)^R leave the double range long before n hits the ball radius, so
// all norm/seminorm accumulation can run on logs.
class LogValue {
public:
    constexpr LogValue() : log_(-std::numeric_limits<double>::infinity()) {}

    static constexpr LogValue zero() { return LogValue(); }
    static constexpr LogValue one() { return from_log(0.0); }

    static constexpr LogValue from_log(double l) {
        LogValue v;
        v.log_ = l;
        return v;
    }

    // v must be >= 0; v == 0 maps to the zero tag.
    static LogValue from_value(double v) { return from_log(std::log(v)); }

    bool is_zero() const { return std::isinf(log_) && log_ < 0; }
    double log() const { return log_; }
    double value() const { return std::exp(log_); }  // may overflow to +inf

    LogValue operator*(LogValue o) const {
        if (is_zero() || o.is_zero()) return zero();
        return from_log(log_ + o.log_);
    }
    LogValue operator/(LogValue o) const {
        if (is_zero()) return zero();
        return from_log(log_ - o.log_);
    }
    LogValue pow(double e) const {
        if (is_zero()) return zero();
        return from_log(log_ * e);
    }
    // Stable log-sum-exp; zero is the additive unit.
    LogValue operator+(LogValue o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        double hi = log_ > o.log_ ? log_ : o.log_;
        double lo = log_ > o.log_ ? o.log_ : log_;
        return from_log(hi + std::log1p(std::exp(lo - hi)));
    }
    LogValue& operator+=(LogValue o) { return *this = *this + o; }
    LogValue& operator*=(LogValue o) { return *this = *this * o; }

    auto operator<=>(const LogValue& o) const { return log_ <=> o.log_; }
    bool operator==(const LogValue& o) const { return log_ == o.log_; }

private:
    double log_;
};

// Streaming log(exp(a) + exp(b)) on raw logs, -inf acting as zero.
inline double log_add(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

inline double log_sum_exp(std::span<const double> logs) {
    double acc = -std::numeric_limits<double>::infinity();
    for (double l : logs) acc = log_add(acc, l);
    return acc;
}

// Equality claim at relative tolerance on log magnitudes.
inline bool log_close(LogValue a, LogValue b, double tol) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.is_zero() || b.is_zero()) return false;
    double la = a.log(), lb = b.log();
    double scale = std::max({1.0, std::abs(la), std::abs(lb)});
    return std::abs(la - lb) <= tol * scale;
}

// a <= b with relative slack on the large side.
inline bool log_leq(LogValue a, LogValue b, double tol) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    double la = a.log(), lb = b.log();
    double scale = std::max({1.0, std::abs(la), std::abs(lb)});
    return la <= lb + tol * scale;
}

}  // namespace gaw
