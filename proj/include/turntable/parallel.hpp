#pragma once

#include <cstddef>
#include <functional>

namespace turntable {

/// Runs body(i) for i in [0, n). Work items must write disjoint state so the
/// result is identical under any partition; scheduling order is unspecified.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace turntable
