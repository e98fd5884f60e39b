#include "conelift/log.hpp"

#include <cstdlib>
#include <cstring>

namespace conelift {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* v = std::getenv("CONELIFT_LOG");
        if (!v) return LogLevel::Error;
        if (std::strcmp(v, "debug") == 0) return LogLevel::Debug;
        if (std::strcmp(v, "info") == 0) return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

}  // namespace conelift
