#pragma once

#include <atomic>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace sage::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3, Silent = 4 };

inline std::atomic<Level>& threshold() {
  static std::atomic<Level> level{Level::Info};
  return level;
}

inline void set_level(Level level) { threshold().store(level); }

// Warnings emitted since process start; tests assert on this instead of
// capturing stderr.
inline std::atomic<long>& warn_count() {
  static std::atomic<long> n{0};
  return n;
}

namespace detail {
inline std::mutex& mu() {
  static std::mutex m;
  return m;
}

inline void emit(Level level, const char* tag, const std::string& msg) {
  if (level < threshold().load()) return;
  std::lock_guard<std::mutex> lock(mu());
  std::cerr << "[sage " << tag << "] " << msg << '\n';
}
}  // namespace detail

inline void debug(const std::string& msg) { detail::emit(Level::Debug, "debug", msg); }
inline void info(const std::string& msg) { detail::emit(Level::Info, "info", msg); }
inline void warn(const std::string& msg) {
  warn_count().fetch_add(1);
  detail::emit(Level::Warn, "warn", msg);
}
inline void error(const std::string& msg) { detail::emit(Level::Error, "error", msg); }

}  // namespace sage::log
