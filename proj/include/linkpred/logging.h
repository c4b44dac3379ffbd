#pragma once

#include <functional>
#include <string_view>

namespace linkpred {

using WarningSink = std::function<void(std::string_view)>;

// Warnings go to stderr unless a sink is installed. Returns the previous sink.
WarningSink SetWarningSink(WarningSink sink);
void Warn(std::string_view message);

}  // namespace linkpred
