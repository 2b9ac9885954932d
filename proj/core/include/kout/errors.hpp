#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kout {

/** An edge with both endpoints equal was supplied or parsed. */
struct SelfLoop : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** A vertex id lies outside [0, n). */
struct VertexOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** A constructor or generator precondition does not hold. */
struct BadParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** A randomized generator exhausted its retry budget. */
struct GenerationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Malformed text input (edge-list file, CSV, config). */
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** An exhaustive routine was asked to run past its size cap. */
struct TooLargeForBruteForce : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** An edge was expected to be part of the graph but is not. */
struct EdgeNotInGraph : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** No supported field degree can index the requested edge universe. */
struct FieldTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** An edge endpoint falls outside a naming scheme's vertex universe. */
struct EdgeOutOfUniverse : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** A referee was handed fewer messages than vertices. */
struct MissingMessage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** Messages and scheme disagree on universe size or sketch width. */
struct SchemeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** A simulated machine exceeded its per-round word budget. */
struct BudgetExceeded : std::runtime_error {
  std::uint32_t round;
  std::uint32_t machine;
  std::uint64_t words;
  BudgetExceeded(std::uint32_t round_, std::uint32_t machine_, std::uint64_t words_,
                 std::uint64_t budget_)
      : std::runtime_error("machine " + std::to_string(machine_) + " used " +
                           std::to_string(words_) + " words in round " +
                           std::to_string(round_) + " (budget " +
                           std::to_string(budget_) + ")"),
        round(round_), machine(machine_), words(words_) {}
};

/** A plot or analysis referenced a CSV column that does not exist. */
struct UnknownColumn : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace kout
