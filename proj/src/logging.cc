#include "linkpred/logging.h"

#include <iostream>
#include <mutex>
#include <utility>

namespace linkpred {
namespace {

std::mutex& SinkMutex() {
  static std::mutex mutex;
  return mutex;
}

WarningSink& Sink() {
  static WarningSink sink;
  return sink;
}

}  // namespace

WarningSink SetWarningSink(WarningSink sink) {
  std::lock_guard lock(SinkMutex());
  return std::exchange(Sink(), std::move(sink));
}

void Warn(std::string_view message) {
  std::lock_guard lock(SinkMutex());
  if (Sink()) {
    Sink()(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

}  // namespace linkpred
