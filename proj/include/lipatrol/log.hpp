#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace lipatrol {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

// Level comes from LI_PATROL_LOG in {error, info, debug}; default info.
inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("LI_PATROL_LOG");
    if (env == nullptr) return LogLevel::kInfo;
    if (std::strcmp(env, "error") == 0) return LogLevel::kError;
    if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
    return LogLevel::kInfo;
  }();
  return level;
}

inline bool log_enabled(LogLevel level) {
  return static_cast<int>(level) <= static_cast<int>(log_level());
}

}  // namespace lipatrol

#define LIP_LOG(level, ...)                                     \
  do {                                                          \
    if (::lipatrol::log_enabled(level)) {                       \
      std::fprintf(stderr, __VA_ARGS__);                        \
      std::fputc('\n', stderr);                                 \
    }                                                           \
  } while (0)

#define LIP_ERROR(...) LIP_LOG(::lipatrol::LogLevel::kError, __VA_ARGS__)
#define LIP_INFO(...) LIP_LOG(::lipatrol::LogLevel::kInfo, __VA_ARGS__)
#define LIP_DEBUG(...) LIP_LOG(::lipatrol::LogLevel::kDebug, __VA_ARGS__)
