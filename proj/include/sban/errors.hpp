#pragma once

#include <stdexcept>
#include <string>

namespace sban {

// Bad input data: malformed JSON, out-of-range indices, schedules that do not
// partition the automata set, embeddings of the wrong shape, and so on.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested computation would exceed a configured size cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A coloring handed to the simulator synthesis gives two confusable
// configurations with different images the same color.
struct invalid_coloring_error : domain_error {
    explicit invalid_coloring_error(const std::string& msg) : domain_error(msg) {}
};

} // namespace sban
