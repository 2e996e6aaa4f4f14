#pragma once
#include <cstdint>
#include <optional>

#include "irs/weighting.hpp"

namespace irs {

struct SearchBudget {
  long long max_nodes = 200'000'000;  // backtracking nodes before giving up
};

enum class SearchOutcome { found, none, exhausted };

struct AssignmentResult {
  SearchOutcome outcome = SearchOutcome::none;
  EdgeWeighting witness;  // only meaningful when outcome == found
  long long nodes = 0;
};

// Complete backtracking search for an irregular weighting with weights
// in [1, k]. "none" is only returned after exhausting the whole space.
AssignmentResult find_assignment(const Graph& g, long long k, const SearchBudget& budget = {});

struct StrengthResult {
  enum class Kind { value, infinite, exhausted } kind = Kind::value;
  long long k = 0;             // the strength when kind == value
  EdgeWeighting witness;       // a witness at k when kind == value
};

// Exact strength by trying k = lower bound upward. Detects infinite
// strength (isolated edge, or two isolated vertices) up front.
StrengthResult exact_strength(const Graph& g, const SearchBudget& budget = {});

}  // namespace irs
