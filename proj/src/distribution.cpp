#include "zerorect/distribution.hpp"

#include "zerorect/error.hpp"

namespace zr {

Distribution::Distribution(int universe, std::vector<BitSet> a, std::vector<Rat> w)
    : n(universe), atoms(std::move(a)), weights(std::move(w)) {
    if (atoms.empty() || atoms.size() != weights.size())
        throw Error(Err::InvalidParams, "distribution needs matching nonempty atoms/weights");
    Rat total(0);
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].universe() != n)
            throw Error(Err::UniverseMismatch, "distribution atom universe mismatch");
        if (weights[i] < 0) throw Error(Err::InvalidProbability, "negative weight");
        total += weights[i];
    }
    if (total != 1) throw Error(Err::InvalidProbability, "weights sum to " + format_rat(total));
    cum_.resize(weights.size());
    double acc = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        acc += to_double(weights[i]);
        cum_[i] = acc;
    }
    cum_.back() = 1.0;
}

Rat Distribution::mass_below(const BitSet& U) const {
    Rat s(0);
    for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i].is_subset_of(U)) s += weights[i];
    return s;
}

int Distribution::sample_index(Rng& rng) const {
    double u = rng.uniform01();
    // binary search over the cumulative weights
    size_t lo = 0, hi = cum_.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (cum_[mid] > u)
            hi = mid;
        else
            lo = mid + 1;
    }
    return int(lo);
}

Distribution Distribution::uniform_on(const SetFamily& F) {
    if (F.size() == 0) throw Error(Err::EmptyFamily, "uniform distribution on empty family");
    std::vector<Rat> w(F.sets.size(), Rat(1, F.size()));
    return Distribution(F.n, F.sets, std::move(w));
}

Distribution Distribution::point_mass(int n, const BitSet& a) {
    return Distribution(n, {a}, {Rat(1)});
}

} // namespace zr
