#include "rigidity/config.hpp"

#include <stdexcept>

namespace rigidity {

std::string mode_name(Mode mode) { return mode == Mode::modular ? "modular" : "rational"; }

Mode mode_from_string(const std::string& name) {
    if (name == "modular") return Mode::modular;
    if (name == "rational") return Mode::rational;
    throw std::invalid_argument("unknown mode: " + name);
}

void validate_config(const TestConfig& cfg, int vertex_count) {
    if (cfg.dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (cfg.rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    if (cfg.mode == Mode::rational && vertex_count > 12 && !cfg.force)
        throw std::invalid_argument(
            "rational mode refuses v > 12 (exact elimination gets slow); pass force to override");
}

}  // namespace rigidity
