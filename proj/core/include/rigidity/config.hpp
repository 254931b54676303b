#ifndef RIGIDITY_CONFIG_HPP
#define RIGIDITY_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace rigidity {

enum class Mode { modular, rational };
enum class ReportFormat { text, json };

std::string mode_name(Mode mode);
Mode mode_from_string(const std::string& name);

struct TestConfig {
    int dim = 2;
    int rounds = 40;                       // false-no bound (1/2)^rounds
    std::uint64_t seed = 0;
    Mode mode = Mode::modular;
    std::optional<std::uint64_t> n_override;  // replaces the 4t / 4ve sample bound
    bool force = false;                    // lets rational mode run past v = 12
    ReportFormat format = ReportFormat::text;
};

// Throws std::invalid_argument on d < 1, rounds < 1, or rational mode with
// v > 12 unless forced.
void validate_config(const TestConfig& cfg, int vertex_count);

}  // namespace rigidity

#endif
