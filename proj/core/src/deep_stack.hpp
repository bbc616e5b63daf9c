#pragma once

#include <cstddef>
#include <functional>

namespace wmesc::detail {

/// Runs `fn` to completion on a fresh thread whose stack holds at least
/// `bytes`, rethrowing anything it throws in the calling thread.
void run_with_stack(std::size_t bytes, const std::function<void()>& fn);

}  // namespace wmesc::detail
