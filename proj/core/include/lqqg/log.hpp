#pragma once

#include <sstream>
#include <string>

namespace lqqg::log {

enum class Level { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

/// Current verbosity. Initialized from the LQQG_LOG environment variable
/// (error|warn|info|debug); defaults to warn.
Level level();
void set_level(Level level);

void write(Level level, const std::string& message);

}  // namespace lqqg::log

#define LQQG_LOG(lvl, expr)                                \
  do {                                                     \
    if (static_cast<int>(lvl) <=                           \
        static_cast<int>(::lqqg::log::level())) {          \
      std::ostringstream lqqg_log_oss;                     \
      lqqg_log_oss << expr;                                \
      ::lqqg::log::write(lvl, lqqg_log_oss.str());         \
    }                                                      \
  } while (0)

#define LQQG_ERROR(expr) LQQG_LOG(::lqqg::log::Level::kError, expr)
#define LQQG_WARN(expr) LQQG_LOG(::lqqg::log::Level::kWarn, expr)
#define LQQG_INFO(expr) LQQG_LOG(::lqqg::log::Level::kInfo, expr)
#define LQQG_DEBUG(expr) LQQG_LOG(::lqqg::log::Level::kDebug, expr)
