#include "lqqg/log.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace lqqg::log {
namespace {

Level level_from_env() {
  const char* env = std::getenv("LQQG_LOG");
  if (env == nullptr) return Level::kWarn;
  if (std::strcmp(env, "error") == 0) return Level::kError;
  if (std::strcmp(env, "warn") == 0) return Level::kWarn;
  if (std::strcmp(env, "info") == 0) return Level::kInfo;
  if (std::strcmp(env, "debug") == 0) return Level::kDebug;
  return Level::kWarn;
}

std::atomic<Level>& level_storage() {
  static std::atomic<Level> storage{level_from_env()};
  return storage;
}

const char* tag(Level level) {
  switch (level) {
    case Level::kError: return "error";
    case Level::kWarn: return "warn";
    case Level::kInfo: return "info";
    case Level::kDebug: return "debug";
  }
  return "?";
}

}  // namespace

Level level() { return level_storage().load(std::memory_order_relaxed); }

void set_level(Level level) {
  level_storage().store(level, std::memory_order_relaxed);
}

void write(Level level, const std::string& message) {
  std::fprintf(stderr, "[lqqg %s] %s\n", tag(level), message.c_str());
}

}  // namespace lqqg::log
