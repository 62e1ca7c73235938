#pragma once

#include <cstdint>
#include <vector>

#include "nspec/polyparse.hpp"

namespace nspec {

/// Deterministic three-variable supports: axial points x^a, y^b, z^c with
/// a, b, c in [2, 9] plus 0-4 extra points with coordinates <= 9, rejection
/// sampled until simplicial and convenient.
std::vector<Support> generate_corpus(std::uint64_t seed, int count);

/// Non-isolated instances derived from the corpus: each support with the
/// axial points of a nonempty set of axes dropped, kept when it satisfies the
/// surface Hodge-spectrum hypotheses (simplicial, some axis missed, every
/// coordinate plane met). Duplicates are removed.
std::vector<Support> non_isolated_corpus(std::uint64_t seed, int count);

}  // namespace nspec
