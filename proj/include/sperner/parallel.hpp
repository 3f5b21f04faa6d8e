#pragma once

#include <exception>
#include <mutex>

namespace sperner {

/// Number of worker threads used by the OpenMP kernels (1 without OpenMP).
int thread_count();

/// Sets the worker count for subsequent kernels; values < 1 restore the default.
void set_thread_count(int threads);

/// Collects the first exception thrown inside an OpenMP loop.
class ExceptionSlot {
public:
    template <class Fn>
    void run(Fn&& fn) {
        try {
            fn();
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

} // namespace sperner
