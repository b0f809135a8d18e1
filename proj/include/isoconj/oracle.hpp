#pragma once

// Brute-force reference implementations used to validate the engine.

#include <optional>
#include <vector>

#include "isoconj/forms.hpp"

namespace isoconj {

/// Searches {X : X T = S X} over `level`, sparsest coordinate vectors first
/// (then lexicographic), for an invertible X with X^T G X = G.
/// Throws TooLarge unless dim <= 4, |level| <= 25 and the space has at most
/// 2^24 elements; LevelMismatch if the inputs do not live below `level`.
std::optional<Matrix> brute_force_conjugate(const Matrix& s, const Matrix& t, const BilinearSpace& v, Level level);

/// Every isometry of V, by column-wise backtracking on the Gram equations.
/// Throws TooLarge unless dim <= 3 and |F| <= 7, or dim = 4 and |F| = 3.
std::vector<Matrix> enumerate_isometries(const BilinearSpace& v);

}  // namespace isoconj
