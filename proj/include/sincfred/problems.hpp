#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "sincfred/transform.hpp"

namespace sincfred {

/// Value used in place of pi for the d parameters of the benchmark set.
inline constexpr double kPiM = 3.14;

using Kernel = std::function<double(double t, double s)>;
using ScalarFunction = std::function<double(double t)>;

/// u(t) - int_a^b k(t,s) u(s) ds = g(t),  a <= t <= b.
struct Problem {
    std::string name;
    Interval interval;
    Kernel kernel;
    ScalarFunction rhs;
    double alpha_se;
    double d_se;
    double alpha_de;
    double d_de;
    std::optional<ScalarFunction> exact;

    double alpha(TransformKind kind) const { return kind == TransformKind::SE ? alpha_se : alpha_de; }
    double d(TransformKind kind) const { return kind == TransformKind::SE ? d_se : d_de; }
};

/// Counts kernel evaluations. Atomic so one counter can be shared by
/// concurrent solves.
class KernelCounter {
public:
    void increment() { count_.fetch_add(1, std::memory_order_relaxed); }
    void add(std::uint64_t n) { count_.fetch_add(n, std::memory_order_relaxed); }
    std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> count_{0};
};

/// k(t,s) = ts on [0,1], u(t) = r / ((t - 1/2)^2 + r^2), r = 1/2.
Problem example1();
/// k(t,s) = (ts)^{3/4} on [0, pi/2], u(t) = sqrt(t).
Problem example2();
/// k(t,s) = t^{sqrt3 - 1} sum_{l=1}^{100} s^{a_l} (1-s)^{1-b_l} on [0,1],
/// u(t) = sqrt(t).
Problem example3();
/// Example on [-1, 1] with u(t) = 2t / (1 + t^20).
Problem example4();

/// example1()..example4() by number; throws std::out_of_range otherwise.
Problem example_by_id(int id);

namespace detail {
/// a_l = (3/pi)^l
double example3_a(int l);
/// b_l = (2 sqrt2 / 3)^l
double example3_b(int l);
/// s-dependent factor of the example 3 kernel:
/// sum_l s^{a_l} (1-s)^{1-b_l}.
double example3_s_factor(double s);
/// sum_l B(a_l + 3/2, 2 - b_l)
double example3_rhs_constant();
}  // namespace detail

}  // namespace sincfred
