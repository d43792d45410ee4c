#ifndef DIGSPEC_RANDOM_HPP
#define DIGSPEC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "digspec/digraph.hpp"
#include "digspec/linalg.hpp"

namespace digspec {

using Rng = std::mt19937_64;

/// DIGSPEC_SEED if set and numeric, else 42.
std::uint64_t seed_from_env();

/// Each of the n(n-1) possible arcs independently with probability p.
Digraph random_digraph(Rng& rng, int n, double p);

/// Vertices split at random into two nonempty sides; each cross pair gets no
/// arc, one arc either way, or a digon.
Digraph random_bipartite_digraph(Rng& rng, int n, double p);

/// Entries uniform in [-1, 1].
Matrix<double> random_matrix(Rng& rng, int rows, int cols);

}  // namespace digspec

#endif  // DIGSPEC_RANDOM_HPP
