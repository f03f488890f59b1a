#pragma once

#include <exception>
#include <functional>

namespace tridecomp::detail {

/// Runs `fn` on a thread with a large stack, rethrowing its exception.
void run_on_big_stack(const std::function<void()>& fn);

}  // namespace tridecomp::detail
