#pragma once

#include <optional>
#include <string>

#include "divmod/presmod.hpp"

namespace divmod {

// One computation request: a ring, exactly one module payload (embedded
// generator columns or an abstract presentation), and options.
struct JobSpec {
    RingPtr ring;
    std::optional<EmbeddedModule> embedded;
    std::optional<PresentedModule> presented;
    std::vector<std::size_t> reduction;  // optional candidate column subset
    std::string command;                 // optional; must match the invocation
    std::uint64_t seed = 0;
    std::size_t rmax = 5;
};

// Parses a job from JSON text; a non-empty order override replaces the
// declared monomial order.  Errors are ParseError naming `source_name`.
JobSpec parse_jobspec(const std::string& json_text, const std::string& source_name,
                      const std::string& order_override = "");

// Reads and parses the file at `path`.
JobSpec load_jobspec(const std::string& path, const std::string& order_override = "");

}  // namespace divmod
