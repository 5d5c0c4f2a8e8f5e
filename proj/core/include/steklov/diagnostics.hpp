#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace steklov {

using WarningHandler = std::function<void(std::string_view)>;

// Installs a process-wide sink for numerical warnings (tail mass, dropped
// modes). Returns the previous handler. Passing an empty handler silences
// warnings.
WarningHandler setWarningHandler(WarningHandler handler);

void warn(std::string_view message);

// Relative l2 mass threshold above which truncations emit a warning.
inline constexpr double kTailMassWarning = 1e-10;

}  // namespace steklov
