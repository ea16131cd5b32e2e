#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>

#include "hyperpoly/exec.hpp"

namespace hyperpoly::detail {

inline constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();

/// Smallest case index in [0, count) for which `ok(i)` is false.
template <class Pred>
std::optional<std::size_t> first_failure_serial(std::size_t count, Pred&& ok) {
    for (std::size_t i = 0; i < count; ++i)
        if (!ok(i)) return i;
    return std::nullopt;
}

/// Same contract as first_failure_serial; every case is evaluated, and the
/// minimum failing index is kept so the reported witness does not depend on
/// scheduling.
template <class Pred>
std::optional<std::size_t> first_failure_parallel(std::size_t count, Pred&& ok) {
    std::size_t first = kNoFailure;
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
    for (long long i = 0; i < n; ++i) {
        try {
            if (!ok(static_cast<std::size_t>(i)) && static_cast<std::size_t>(i) < first)
                first = static_cast<std::size_t>(i);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    if (first == kNoFailure) return std::nullopt;
    return first;
}

template <class Pred>
std::optional<std::size_t> first_failure(std::size_t count, Exec exec, Pred&& ok) {
    if (exec == Exec::serial) return first_failure_serial(count, ok);
    return first_failure_parallel(count, ok);
}

/// Number of cases in [0, count) for which `ok(i)` is false.
template <class Pred>
std::size_t count_failures(std::size_t count, Exec exec, Pred&& ok) {
    std::size_t failures = 0;
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < count; ++i)
            if (!ok(i)) ++failures;
        return failures;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures)
    for (long long i = 0; i < n; ++i) {
        try {
            if (!ok(static_cast<std::size_t>(i))) ++failures;
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return failures;
}

}  // namespace hyperpoly::detail
