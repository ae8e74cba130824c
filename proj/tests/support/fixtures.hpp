#pragma once

// Frozen regression constants. Each was produced by an exhaustive run of the
// tool and then cross-checked against a brute-force oracle where one exists.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace fixtures {

inline constexpr std::uint64_t kSeed = 20240517;

/// Lexicographically least GF(2)^{8x4} matrix on which extraction with
/// eps = 1/4, k = 1, t = 1 stops at a rigid submatrix (d_M(1) = 2).
inline constexpr std::string_view kExtractFixture =
    "gfmat 1 p=2 m=8 n=4\n"
    "0 0 0 1\n"
    "0 0 1 0\n"
    "0 0 1 1\n"
    "0 1 0 0\n"
    "0 1 0 1\n"
    "1 0 0 0\n"
    "1 0 1 0\n"
    "1 1 0 0\n";
inline constexpr std::size_t kExtractFixtureInner = 2;

/// 4x2 block with global threshold 2 at r = 2.
inline constexpr std::string_view kStackBlock =
    "gfmat 1 p=2 m=4 n=2\n"
    "1 0\n"
    "0 1\n"
    "1 1\n"
    "1 1\n";

/// counting_lower_search(p=2, n=3, m=4, s=3).
inline constexpr std::size_t kCountingLowerT = 2;
inline constexpr std::string_view kCountingLowerHardest = "001/010/011/100";

/// Row thresholds of the [7,4] Hamming generator at r = 1, 2, 3, and global.
inline constexpr std::size_t kHammingRow[] = {3, 1, 1};
inline constexpr std::size_t kHammingGlobal[] = {13, 7, 5};

}  // namespace fixtures
