#include "bigstack.hpp"

#include <pthread.h>

#include <stdexcept>

namespace tridecomp::detail {

namespace {

constexpr std::size_t kStackBytes = std::size_t{1} << 30;

thread_local bool on_big_stack = false;

struct Job {
    const std::function<void()>* fn;
    std::exception_ptr error;
};

void* trampoline(void* arg) {
    auto* job = static_cast<Job*>(arg);
    on_big_stack = true;
    try {
        (*job->fn)();
    } catch (...) {
        job->error = std::current_exception();
    }
    return nullptr;
}

}  // namespace

void run_on_big_stack(const std::function<void()>& fn) {
    if (on_big_stack) {
        fn();
        return;
    }
    Job job{&fn, nullptr};
    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, kStackBytes);
    pthread_t thread;
    const int rc = pthread_create(&thread, &attr, trampoline, &job);
    pthread_attr_destroy(&attr);
    if (rc != 0) {
        fn();
        return;
    }
    pthread_join(thread, nullptr);
    if (job.error) {
        std::rethrow_exception(job.error);
    }
}

}  // namespace tridecomp::detail
