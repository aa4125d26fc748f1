#include "eqaoa/problems.hpp"

#include "eqaoa/errors.hpp"
#include "eqaoa/rng.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace eqaoa {

namespace {

void check_spec(const GeneratorSpec &spec) {
    if (spec.n < 3 || spec.n > kMaxQubits) {
        throw DomainError("3-SAT generation needs 3 <= n <= " +
                          std::to_string(kMaxQubits) + ", got " +
                          std::to_string(spec.n));
    }
    if (spec.m < 1) {
        throw DomainError("3-SAT generation needs m >= 1");
    }
}

std::array<int, 3> draw_triple(Rng &rng, int n) {
    std::array<int, 3> vars{};
    for (int k = 0; k < 3; ++k) {
        while (true) {
            const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (std::find(vars.begin(), vars.begin() + k, v) == vars.begin() + k) {
                vars[k] = v;
                break;
            }
        }
    }
    return vars;
}

Clause3 make_clause(const std::array<int, 3> &vars, unsigned signs) {
    Clause3 c;
    c.vars = vars;
    for (int k = 0; k < 3; ++k) {
        c.positive[k] = (signs >> k) & 1U;
    }
    return c;
}

} // namespace

std::string to_string(GeneratorMode mode) {
    return mode == GeneratorMode::planted ? "planted" : "random-unsat";
}

GeneratorMode parse_generator_mode(std::string_view s) {
    if (s == "planted") {
        return GeneratorMode::planted;
    }
    if (s == "random-unsat") {
        return GeneratorMode::random_unsat;
    }
    throw DomainError("unknown generator mode '" + std::string(s) + "'");
}

PlantedInstance generate_planted_sat(const GeneratorSpec &spec) {
    check_spec(spec);
    Rng rng(spec.seed);
    PlantedInstance out;
    out.instance.n = spec.n;
    out.planted = rng.below(dimension(spec.n));
    out.instance.clauses.reserve(static_cast<std::size_t>(spec.m));
    for (int c = 0; c < spec.m; ++c) {
        const auto vars = draw_triple(rng, spec.n);
        unsigned bits = 0;
        for (int k = 0; k < 3; ++k) {
            bits |= static_cast<unsigned>((out.planted >> vars[k]) & 1U) << k;
        }
        // every literal false <=> positive exactly where the planted bit is 0
        const unsigned forbidden = ~bits & 7U;
        unsigned signs = static_cast<unsigned>(rng.below(7));
        if (signs >= forbidden) {
            ++signs;
        }
        out.instance.clauses.push_back(make_clause(vars, signs));
    }
    return out;
}

SatInstance generate_random_unsat(const GeneratorSpec &spec, int max_attempts) {
    check_spec(spec);
    Rng rng(spec.seed);
    SatInstance instance;
    instance.n = spec.n;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        instance.clauses.clear();
        for (int c = 0; c < spec.m; ++c) {
            const auto vars = draw_triple(rng, spec.n);
            instance.clauses.push_back(
                make_clause(vars, static_cast<unsigned>(rng.below(8))));
        }
        const auto diag = build_sat_diagonal(instance);
        const double best =
            *std::max_element(diag.values.begin(), diag.values.end());
        if (best < static_cast<double>(spec.m)) {
            return instance;
        }
    }
    throw GenerationError("no unsatisfiable instance with n=" +
                          std::to_string(spec.n) + ", m=" +
                          std::to_string(spec.m) + " after " +
                          std::to_string(max_attempts) + " attempts");
}

void Graph::add_edge(int u, int v) {
    if (u == v) {
        throw DomainError("self-loop on vertex " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw DomainError("edge endpoint outside [0, " + std::to_string(n) +
                          ")");
    }
    edges.emplace(std::min(u, v), std::max(u, v));
}

DiagonalObjective mis_diagonal(const Graph &g, MisVariant variant) {
    if (g.n < 1 || g.n > kMaxQubits) {
        throw SizeError("graph vertex count " + std::to_string(g.n) +
                        " out of range");
    }
    DiagonalObjective out{g.n, std::vector<double>(dimension(g.n))};
    for (std::size_t z = 0; z < out.values.size(); ++z) {
        int value = popcount(z);
        if (variant == MisVariant::plus) {
            for (const auto &[u, v] : g.edges) {
                if (((z >> u) & 1U) && ((z >> v) & 1U)) {
                    --value;
                }
            }
        }
        out.values[z] = value;
    }
    return out;
}

SatInstance parse_dimacs(std::string_view text) {
    SatInstance instance;
    bool have_header = false;
    std::size_t declared = 0;
    std::vector<int> pending;
    std::size_t line_no = 0;

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first[0] == 'c') {
            continue;
        }
        if (first == "%") {
            break;
        }
        if (first == "p") {
            std::string format;
            long long vars = -1;
            long long clauses = -1;
            std::string extra;
            if (have_header || !(tokens >> format >> vars >> clauses) ||
                format != "cnf" || (tokens >> extra) || vars < 3 ||
                vars > kMaxQubits || clauses < 1) {
                throw ParseError(line_no, "malformed header '" + line + "'");
            }
            have_header = true;
            instance.n = static_cast<int>(vars);
            declared = static_cast<std::size_t>(clauses);
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "clause before 'p cnf' header");
        }
        tokens.clear();
        tokens.str(line);
        std::string tok;
        while (tokens >> tok) {
            int lit = 0;
            const auto [ptr, ec] =
                std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw ParseError(line_no, "bad literal '" + tok + "'");
            }
            if (lit != 0) {
                if (std::abs(lit) > instance.n) {
                    throw ParseError(line_no, "variable " +
                                                  std::to_string(std::abs(lit)) +
                                                  " out of range");
                }
                pending.push_back(lit);
                continue;
            }
            if (pending.size() != 3) {
                throw ParseError(line_no, "clause has " +
                                              std::to_string(pending.size()) +
                                              " literals, expected 3");
            }
            Clause3 c;
            for (int k = 0; k < 3; ++k) {
                c.vars[k] = std::abs(pending[k]) - 1;
                c.positive[k] = pending[k] > 0;
            }
            if (c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] ||
                c.vars[1] == c.vars[2]) {
                throw ParseError(line_no, "clause repeats a variable");
            }
            instance.clauses.push_back(c);
            pending.clear();
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'p cnf' header");
    }
    if (!pending.empty()) {
        throw ParseError(line_no, "unterminated clause at end of input");
    }
    if (instance.clauses.size() != declared) {
        throw ParseError(line_no, "header declares " + std::to_string(declared) +
                                      " clauses, found " +
                                      std::to_string(instance.clauses.size()));
    }
    return instance;
}

std::string emit_dimacs(const SatInstance &instance) {
    std::string out = "p cnf " + std::to_string(instance.n) + " " +
                      std::to_string(instance.m()) + "\n";
    for (const Clause3 &c : instance.clauses) {
        for (int k = 0; k < 3; ++k) {
            const int v = c.vars[k] + 1;
            out += std::to_string(c.positive[k] ? v : -v);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

void to_json(nlohmann::json &j, const InstanceMetadata &meta) {
    j = nlohmann::json{{"n", meta.n},
                       {"m", meta.m},
                       {"mode", to_string(meta.mode)},
                       {"seed", meta.seed}};
    if (meta.planted) {
        j["planted"] = *meta.planted;
    } else {
        j["planted"] = nullptr;
    }
}

void from_json(const nlohmann::json &j, InstanceMetadata &meta) {
    meta.n = j.at("n").get<int>();
    meta.m = j.at("m").get<int>();
    meta.mode = parse_generator_mode(j.at("mode").get<std::string>());
    meta.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("planted") && !j.at("planted").is_null()) {
        meta.planted = j.at("planted").get<BasisIndex>();
    } else {
        meta.planted.reset();
    }
}

} // namespace eqaoa
