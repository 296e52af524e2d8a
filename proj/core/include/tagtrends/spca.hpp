#pragma once

#include "tagtrends/scores.hpp"

#include <array>
#include <string>
#include <vector>

namespace tagtrends {

// One row per (tag, year) with all four scores defined.
// Column order: general, high-priority, recent, high-priority recent.
using ScoreRow = std::array<double, 4>;
using ScoreMatrix = std::vector<ScoreRow>;

inline constexpr std::array<const char*, 4> kScoreColumnNames = {
    "general", "high_priority", "recent", "high_priority_recent"};

ScoreMatrix build_score_matrix(const std::vector<TrendSeries>& all_series);

using Matrix4 = std::array<std::array<double, 4>, 4>;

// Pearson correlations; throws PipelineError naming any constant column.
Matrix4 correlation_matrix(const ScoreMatrix& m);

struct SparseLoadings {
    // components[c][j]: unit-norm loading of feature j in component c.
    std::vector<std::array<double, 4>> components;
    std::vector<int> sparsity; // nonzero count per component
    double penalty = 0.0;
};

// Sparse PCA of the uncentered second-moment matrix: per-component power
// iteration alternating a singular-vector step with a soft-threshold step,
// then projection deflation. The penalty is relative: loadings below
// penalty * max|raw loading| are zeroed, so it is scale-free across the
// deflation sequence. penalty = 0 reduces to ordinary uncentered PCA.
SparseLoadings sparse_pca(const ScoreMatrix& m, int n_components, double penalty);

// Smallest penalty on a logarithmic ladder for which every component keeps
// support <= 2 (and >= 1).
SparseLoadings sparse_pca_ladder(const ScoreMatrix& m, int n_components = 3);

// The two loadings of the component supported on exactly
// {recent, high-priority recent}, sign-normalized so the first is positive.
// Throws PipelineError when no component has that support.
std::pair<double, double> derive_combined_coefficients(const SparseLoadings& loadings);

} // namespace tagtrends
