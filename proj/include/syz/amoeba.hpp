#ifndef SYZ_AMOEBA_HPP
#define SYZ_AMOEBA_HPP

#include "syz/spine.hpp"

#include <algorithm>
#include <array>

namespace syz {

/// Laurent family Σ s^λ(m) x^m with unit coefficients, specialized at one s.
struct LaurentInstance {
    HeightFunction lambda;
    double s = 0;
};

struct Window {
    double x0, y0, x1, y1;
    bool contains(double u, double v) const { return u >= x0 && u <= x1 && v >= y0 && v <= y1; }
};

struct AmoebaSample {
    std::vector<std::array<double, 2>> points;   // Log_s images, sorted
    double s = 0;
    Window window{};
    long degenerate_slices = 0;
    long total_roots = 0;
};

/// Samples the amoeba on an (|x|, arg x) grid, solving each slice in y and
/// keeping roots whose relative residual is below 1e-9.
AmoebaSample sample_amoeba(const LaurentInstance& inst, const Window& window, int n_r, int n_phi);

/// Union of the x-sliced and y-sliced samples; tentacles parallel to either
/// axis are then tracked along their whole length.
AmoebaSample sample_amoeba_two_sided(const LaurentInstance& inst, const Window& window, int n_r,
                                     int n_phi);

/// Corner locus rendered as segments clipped to the window.
std::vector<std::array<double, 4>> spine_window_segments(const Spine& spine, const Window& window);

struct DistanceReport {
    double sup_dist = 0;          // samples to the corner locus
    double spine_cover_dist = 0;  // windowed corner locus to the samples
};

/// Two-sided windowed distances; throws EmptySample when there is nothing to
/// measure against.
DistanceReport distance_to_spine(const AmoebaSample& sample, const Spine& spine);

struct ConvergenceRow {
    double s;
    double sup_dist;
    double spine_cover_dist;
};

std::vector<ConvergenceRow> convergence_experiment(const HeightFunction& lambda,
                                                   const std::vector<double>& s_list,
                                                   const Window& window, int n_r, int n_phi);

/// Both distance columns decrease along the ladder within the slack factor.
bool weakly_decreasing(const std::vector<ConvergenceRow>& rows, double slack);

/// max of the two one-sided distances
inline double hausdorff(const ConvergenceRow& r) { return std::max(r.sup_dist, r.spine_cover_dist); }

/// Number of sample points lying in some unbounded top cell Q_v(eps):
/// monomial domination keeps the amoeba out of these for large s.
long samples_in_unbounded_cells(const AmoebaSample& sample, const Spine& spine, const Rat& eps);

} // namespace syz

#endif
