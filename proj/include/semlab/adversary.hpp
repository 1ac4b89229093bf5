#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semlab/context.hpp"
#include "semlab/languages.hpp"
#include "semlab/oracle.hpp"

namespace semlab {

// Emulator outputs are opaque byte strings; the adversary never decodes them.
using Representation = std::string;

// A black-box (mu, delta) pair. mu may only learn about the language through
// the oracle it is handed.
struct EmulatorUnderTest {
  std::string name;
  std::function<Representation(std::string_view, AssertionOracle&)> emulate;
  std::function<bool(const Representation&, const Representation&,
                     const Context&)>
      decide;
};

// emulate_eq + delta_eq with the default candidate bound.
EmulatorUnderTest naive_emulator();
// mu runs binary_search_emulator with bound N; delta evaluates the printed
// expressions at the context's n using the recovered threshold.
EmulatorUnderTest binary_search_adapter(std::uint64_t bound);
// mu makes no queries; delta always answers `answer`.
EmulatorUnderTest constant_emulator(bool answer = false);
// mu issues a seeded pseudo-random sequence of well-shaped LEQ queries and
// keeps the answers; delta is a seeded hash of both representations and n.
EmulatorUnderTest random_emulator(std::uint64_t seed);

enum class RefutedLanguage { kInfinite, kForged };

struct AdversaryReport {
  std::string emulator;
  std::string lhs;
  std::string rhs;
  QueryTranscript transcript_inf;
  Natural max_numeral = 0;
  Natural m_prime = 0;
  bool replay_identical = false;
  bool representations_identical = false;
  Natural disagreement_context = 0;
  bool delta_output = false;
  bool truth_infinite = false;  // ground-truth equality in L_inf at n = m'
  bool truth_forged = false;    // ground-truth equality in L_m' at n = m'
  RefutedLanguage refuted = RefutedLanguage::kInfinite;

  // Exactly one language's ground truth disagrees with delta.
  bool refutes_exactly_one() const {
    return (delta_output != truth_infinite) != (delta_output != truth_forged);
  }
};

// Largest decimal numeral occurring anywhere in the transcript's expressions
// or contexts; 0 when there is none.
Natural extract_max_numeral(const QueryTranscript& t);

// Runs mu on lhs and rhs against L_inf, forges m' = max numeral + 1, replays
// the transcript against L_m', and evaluates delta at k_{m'}. Throws
// ReplayMismatchError if any replayed answer differs, and lets
// BudgetExhaustedError through.
AdversaryReport run_adversary(const EmulatorUnderTest& emu,
                              std::string_view lhs = kLeqCall,
                              std::string_view rhs = kTrueLiteral,
                              std::optional<std::uint64_t> query_budget =
                                  std::nullopt);

struct ComplexityRow {
  std::uint64_t bound = 0;  // N
  std::uint64_t m = 0;
  std::uint64_t binary = 0;
  std::uint64_t linear = 0;
  bool binary_exact = false;
  bool linear_exact = false;
};

struct ComplexityTable {
  std::vector<ComplexityRow> rows;

  // Header N,m,binary,linear with one line per row, LF terminated.
  std::string to_csv() const;
};

// For each N: m = 1, m = N, and samples_per_bound - 2 further values drawn
// uniformly from [1, N] with a seeded generator (deduplicated, ascending).
// Extra m values <= N listed in extra_ms are added to every bound.
ComplexityTable query_complexity_experiment(
    const std::vector<std::uint64_t>& bounds, std::size_t samples_per_bound = 8,
    std::uint64_t seed = 0, const std::vector<std::uint64_t>& extra_ms = {});

// Portable 64-bit generator step (splitmix64); used for seeded sampling so
// results do not depend on the standard library's distributions.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace semlab
