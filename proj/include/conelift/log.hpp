#pragma once

namespace conelift {

// CONELIFT_LOG = error | info | debug
enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level();

inline bool log_info() { return log_level() >= LogLevel::Info; }
inline bool log_debug() { return log_level() >= LogLevel::Debug; }

}  // namespace conelift
