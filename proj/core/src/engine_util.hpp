#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

#include "chunkph/boundary_matrix.hpp"

namespace chunkph::detail {

inline void require_valid(const boundary_matrix& m, const char* who) {
    auto violations = validate(m);
    if (!violations.empty())
        throw std::invalid_argument(std::string(who) + ": invalid matrix: " + violations.front());
}

class stopwatch {
public:
    stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace chunkph::detail
