#include "ybx/sampler.hpp"

#include "ybx/errors.hpp"

#include <algorithm>

namespace ybx {

namespace {
constexpr int kNumBound = 9;
constexpr int kDenBound = 4;
constexpr int kValueRetryCap = 10000;

[[noreturn]] void exhausted(const char* what) {
    throw ExhaustedRejections(std::string("sampler: retry cap hit while drawing ") + what);
}
} // namespace

Rat sample_rat(SplitMix64& rng) {
    long num = rng.next_in(-kNumBound, kNumBound);
    long den = rng.next_in(1, kDenBound);
    return rat(num, den);
}

Rat sample_rat_nonzero(SplitMix64& rng) {
    for (int k = 0; k < kValueRetryCap; ++k) {
        Rat r = sample_rat(rng);
        if (r != 0) return r;
    }
    exhausted("nonzero rational");
}

Vec sample_vec(SplitMix64& rng, int dim) {
    Vec v(dim);
    for (auto& x : v) x = sample_rat(rng);
    return v;
}

Vec sample_vec_nonzero_coords(SplitMix64& rng, int dim) {
    Vec v(dim);
    for (auto& x : v) x = sample_rat_nonzero(rng);
    return v;
}

VectorCovector sample_vector_covector(SplitMix64& rng, int dim) {
    for (int k = 0; k < kValueRetryCap; ++k) {
        VectorCovector p{sample_vec(rng, dim), sample_vec(rng, dim)};
        if (!is_zero_vec(p.xi) && !is_zero_vec(p.eta) && dot(p.xi, p.eta) != 0) return p;
    }
    exhausted("vector-covector pair");
}

ProjectorPair sample_projector_pair(SplitMix64& rng, int dim, int rank) {
    if (rank < 1 || rank >= dim) throw Error("sample_projector_pair: need 0 < rank < dim");
    for (int k = 0; k < kValueRetryCap; ++k) {
        QMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.at(i, j) = sample_rat(rng);
        if (m.det() == 0) continue;
        std::vector<Vec> lcols, kcols;
        for (int j = 0; j < rank; ++j) lcols.push_back(m.column(j));
        for (int j = rank; j < dim; ++j) kcols.push_back(m.column(j));
        return ProjectorPair{Subspace::span(kcols, dim), Subspace::span(lcols, dim)};
    }
    exhausted("projector pair");
}

ProjectorPair sample_selfadjoint_pair(SplitMix64& rng, int dim, int rank) {
    for (int k = 0; k < kValueRetryCap; ++k) {
        ProjectorPair p = sample_projector_pair(rng, dim, rank);
        Subspace perp = orthogonal_complement(p.image);
        if (!complementary(perp, p.image)) continue;
        return ProjectorPair{perp, p.image};
    }
    exhausted("self-adjoint projector pair");
}

std::vector<Rat> sample_params_plain(SplitMix64& rng, int n) {
    std::vector<Rat> ps(n);
    for (auto& p : ps) p = sample_rat(rng);
    return ps;
}

std::vector<Rat> sample_params_nonzero_distinct_abs(SplitMix64& rng, int n) {
    for (int k = 0; k < kValueRetryCap; ++k) {
        std::vector<Rat> ps(n);
        for (auto& p : ps) p = sample_rat_nonzero(rng);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (ps[i] == ps[j] || ps[i] == -ps[j]) ok = false;
        if (ok) return ps;
    }
    exhausted("distinct parameters");
}

std::vector<Rat> sample_params_avoiding(SplitMix64& rng, int n, const std::vector<Rat>& forbidden) {
    for (int k = 0; k < kValueRetryCap; ++k) {
        std::vector<Rat> ps(n);
        for (auto& p : ps) p = sample_rat(rng);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (std::find(forbidden.begin(), forbidden.end(), ps[i]) != forbidden.end()) ok = false;
            for (int j = i + 1; j < n && ok; ++j)
                if (ps[i] == ps[j]) ok = false;
        }
        if (ok) return ps;
    }
    exhausted("constrained parameters");
}

LabeledTuple sample_tuple(const TupleSampler& s, SplitMix64& rng, int n) {
    LabeledTuple t;
    if (s.param_arity == 1) t.params = s.params ? s.params(rng, n) : sample_params_plain(rng, n);
    t.values.reserve(n);
    for (int k = 0; k < n; ++k) t.values.push_back(s.value(rng));
    return t;
}

std::vector<LabeledTuple> sample(const TupleSampler& s, std::uint64_t seed, int n, long count) {
    if (count < 1) throw Error("sample: count must be >= 1");
    SplitMix64 rng(seed);
    std::vector<LabeledTuple> out;
    out.reserve(count);
    for (long k = 0; k < count; ++k) out.push_back(sample_tuple(s, rng, n));
    return out;
}

} // namespace ybx
