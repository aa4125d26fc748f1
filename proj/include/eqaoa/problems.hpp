#pragma once

#include "eqaoa/hamiltonian.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace eqaoa {

enum class GeneratorMode { planted, random_unsat };

std::string to_string(GeneratorMode mode);
GeneratorMode parse_generator_mode(std::string_view s);

struct GeneratorSpec {
    int n = 0;
    int m = 0;
    GeneratorMode mode = GeneratorMode::planted;
    std::uint64_t seed = 0;
};

struct PlantedInstance {
    SatInstance instance;
    BasisIndex planted = 0;
};

// Default rejection budget of generate_random_unsat.
inline constexpr int kUnsatAttempts = 1000;

/**
 * Planted-solution 3-SAT.
 *
 * Draw order from Rng(seed): the planted assignment (below(2^n)); then per
 * clause three distinct variables (below(n), redrawn on repeats) followed
 * by below(7) indexing the seven sign patterns the planted assignment
 * satisfies, in increasing pattern order. A sign pattern packs literal k's
 * polarity at bit k (1 = positive).
 */
PlantedInstance generate_planted_sat(const GeneratorSpec &spec);

/**
 * Random 3-SAT conditioned on being unsatisfiable. Clauses use the same
 * variable draw followed by below(8) for the sign pattern; whole instances
 * are redrawn from the continuing stream until the exhaustive maximum is
 * below m. Throws GenerationError after `max_attempts` rejections.
 */
SatInstance generate_random_unsat(const GeneratorSpec &spec,
                                  int max_attempts = kUnsatAttempts);

struct Graph {
    int n = 0;
    // Unordered edges stored as (min, max).
    std::set<std::pair<int, int>> edges;

    // Throws DomainError on self-loops or endpoints outside [0, n).
    void add_edge(int u, int v);
};

enum class MisVariant {
    standard, // C(z) = |z|
    plus,     // C(z) = |z| - #edges with both endpoints selected
};

DiagonalObjective mis_diagonal(const Graph &g, MisVariant variant);

/// DIMACS CNF reader. Variable v maps to qubit v - 1; every clause must
/// have exactly three distinct literals. Errors carry the line number.
SatInstance parse_dimacs(std::string_view text);

std::string emit_dimacs(const SatInstance &instance);

/// JSON sidecar stored next to a generated CNF file.
struct InstanceMetadata {
    int n = 0;
    int m = 0;
    GeneratorMode mode = GeneratorMode::planted;
    std::uint64_t seed = 0;
    std::optional<BasisIndex> planted;
};

void to_json(nlohmann::json &j, const InstanceMetadata &meta);
void from_json(const nlohmann::json &j, InstanceMetadata &meta);

} // namespace eqaoa
