#pragma once

#include <functional>
#include <string_view>

namespace hyperfourier {

/// Worker thread count for data-parallel passes. Reads HYPERFOURIER_THREADS
/// once (0 or unset = OpenMP default). Always 1 without OpenMP.
int worker_threads();

/// Overrides the thread cap for the rest of the process (0 = auto).
void set_worker_threads(int n);

using WarningSink = std::function<void(std::string_view)>;

/// Warnings (e.g. falling back to a direct transform) go here; default is stderr.
void set_warning_sink(WarningSink sink);
void warn(std::string_view message);

}  // namespace hyperfourier
