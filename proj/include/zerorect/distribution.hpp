#pragma once

#include <vector>

#include "zerorect/bitset.hpp"
#include "zerorect/family.hpp"
#include "zerorect/rat.hpp"
#include "zerorect/rng.hpp"

namespace zr {

// Finite-support probability distribution on 2^[n]. Weights are exact
// rationals and must sum to 1.
struct Distribution {
    int n = 0;
    std::vector<BitSet> atoms;
    std::vector<Rat> weights;

    Distribution() = default;
    Distribution(int universe, std::vector<BitSet> a, std::vector<Rat> w);

    int support_size() const { return int(atoms.size()); }

    // mu(2^U) = P[A subseteq U].
    Rat mass_below(const BitSet& U) const;

    int sample_index(Rng& rng) const; // by cumulative weights
    const BitSet& sample(Rng& rng) const { return atoms[sample_index(rng)]; }

    static Distribution uniform_on(const SetFamily& F);
    static Distribution point_mass(int n, const BitSet& a);

  private:
    std::vector<double> cum_; // cumulative weights for sampling
};

} // namespace zr
