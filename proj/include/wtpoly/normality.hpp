// Graded affine semigroup saturation: hole detection up to a degree bound,
// and the normality certificate for torus orbit closures built from weight
// sets.

#ifndef WTPOLY_NORMALITY_HPP
#define WTPOLY_NORMALITY_HPP

#include "wtpoly/exact.hpp"
#include "wtpoly/polytope.hpp"
#include "wtpoly/weights.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace wtpoly {

/// Generators of a graded semigroup: every generator has the same positive
/// value s under the grading functional (coordinate sum by default).
class GradedGenerators {
public:
    GradedGenerators(PointSet gens, Vec grading_functional)
        : gens_(std::move(gens)), functional_(std::move(grading_functional)) {
        validate();
    }

    /// Coordinate-sum grading.
    explicit GradedGenerators(PointSet gens) : gens_(std::move(gens)) {
        functional_.assign(gens_.dim(), 1);
        validate();
    }

    [[nodiscard]] const PointSet& gens() const { return gens_; }
    [[nodiscard]] std::size_t dim() const { return gens_.dim(); }
    [[nodiscard]] std::int64_t grading() const { return grading_; }
    [[nodiscard]] const Vec& grading_functional() const { return functional_; }

    [[nodiscard]] std::int64_t eval(const Vec& p) const {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < p.size(); ++j) s += functional_[j] * p[j];
        return s;
    }

private:
    void validate() {
        if (gens_.empty()) throw std::invalid_argument("GradedGenerators: empty generator set");
        if (functional_.size() != gens_.dim())
            throw DimensionError("GradedGenerators: grading functional dimension mismatch");
        grading_ = eval(gens_[0]);
        for (const Vec& p : gens_.points())
            if (eval(p) != grading_)
                throw GradingError("GradedGenerators: generators have mixed gradings");
        if (grading_ <= 0 && gens_.size() > 1)
            throw GradingError("GradedGenerators: nonpositive grading with multiple generators");
    }

    PointSet gens_;
    Vec functional_;
    std::int64_t grading_ = 0;
};

/// All sums of exactly d generators (with repetition); d = 0 gives {0}.
inline PointSet degree_slice(const GradedGenerators& gg, std::size_t d) {
    return dilate(gg.gens(), d);
}

struct Hole {
    std::size_t degree;
    Vec point;
};

struct HoleReport {
    std::size_t checked_up_to = 0;
    std::vector<Hole> holes;
    bool normal_up_to_degree = true;
};

/// Search the graded semigroup for holes up to degree D: points of the
/// generator lattice inside d * conv(gens) that are not sums of d
/// generators.  Lattice membership at degree d is tested against d*g0 plus
/// the difference lattice of the generators; hull membership at degree d is
/// the scaled test z/d against conv(gens).
inline HoleReport holes_up_to(const GradedGenerators& gg, std::size_t max_degree) {
    if (max_degree < 1) throw std::invalid_argument("holes_up_to: need D >= 1");
    HoleReport rep;
    rep.checked_up_to = max_degree;

    const PointSet& gens = gg.gens();
    const std::size_t dim = gg.dim();
    const Vec& g0 = gens[0];

    std::vector<std::vector<std::int64_t>> diffs;
    for (const Vec& p : gens.points()) {
        if (p == g0) continue;
        Vec d = vecops::sub(p, g0);
        diffs.emplace_back(d.begin(), d.end());
    }
    IntegerLattice diff_lattice = IntegerLattice::from_generators(dim, diffs);

    auto [lo1, hi1] = gens.bounding_box();
    HullMembershipTester hull(gens);
    PointSet slice(dim);

    for (std::size_t d = 1; d <= max_degree; ++d) {
        slice = (d == 1) ? gens : minkowski_sum(slice, gens);
        Vec shift = vecops::scale(g0, static_cast<std::int64_t>(d));
        Vec lo = vecops::scale(lo1, static_cast<std::int64_t>(d));
        Vec hi = vecops::scale(hi1, static_cast<std::int64_t>(d));
        enumerate_affine_lattice_box(diff_lattice, shift, lo, hi, [&](const Vec& z) {
            if (slice.contains(z)) return;
            std::vector<Rational> q(dim);
            for (std::size_t j = 0; j < dim; ++j)
                q[j] = Rational(z[j]) / Rational(static_cast<std::int64_t>(d));
            if (hull.contains(q)) rep.holes.push_back({d, z});
        });
    }
    rep.normal_up_to_degree = rep.holes.empty();
    return rep;
}

/// Normality certificate for the orbit closure attached to (g, lambda):
/// holes of the weight-set semigroup up to the degree bound.  A correct run
/// on an invertible matrix reports no holes at any degree.
inline HoleReport orbit_closure_normality(const Mat& g, const DominantWeight& l,
                                          std::size_t max_degree) {
    WeightSet w = weight_set(g, l);
    if (w.points.size() == 1) {
        // Single generator: every degree slice is its multiple.
        HoleReport rep;
        rep.checked_up_to = max_degree;
        return rep;
    }
    return holes_up_to(GradedGenerators(w.points, Vec(w.n, 1)), max_degree);
}

}  // namespace wtpoly

#endif  // WTPOLY_NORMALITY_HPP
