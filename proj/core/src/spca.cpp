#include "tagtrends/spca.hpp"

#include "tagtrends/common.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace tagtrends {

ScoreMatrix build_score_matrix(const std::vector<TrendSeries>& all_series) {
    ScoreMatrix m;
    for (const auto& s : all_series) {
        for (std::size_t i = 0; i < s.f_r.size(); ++i) {
            const std::size_t yi = s.recent_offset + i;
            m.push_back({s.f[yi], s.f_hp[yi], s.f_r[i], s.f_hp_r[i]});
        }
    }
    return m;
}

Matrix4 correlation_matrix(const ScoreMatrix& m) {
    if (m.size() < 2)
        throw InputError("correlation_matrix: need at least 2 rows");
    const double n = static_cast<double>(m.size());
    std::array<double, 4> mean{}, var{};
    for (const auto& row : m)
        for (int j = 0; j < 4; ++j)
            mean[j] += row[j];
    for (auto& v : mean)
        v /= n;
    std::array<std::array<double, 4>, 4> cov{};
    for (const auto& row : m)
        for (int j = 0; j < 4; ++j)
            for (int k = j; k < 4; ++k)
                cov[j][k] += (row[j] - mean[j]) * (row[k] - mean[k]);
    for (int j = 0; j < 4; ++j)
        var[j] = cov[j][j];
    for (int j = 0; j < 4; ++j)
        if (var[j] == 0.0)
            throw PipelineError(std::string("correlation undefined: column '") +
                                kScoreColumnNames[j] + "' is constant");
    Matrix4 out{};
    for (int j = 0; j < 4; ++j)
        for (int k = j; k < 4; ++k) {
            const double r = cov[j][k] / std::sqrt(var[j] * var[k]);
            out[j][k] = r;
            out[k][j] = r;
        }
    return out;
}

namespace {

Eigen::Matrix4d second_moment(const ScoreMatrix& m) {
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    for (const auto& row : m) {
        Eigen::Vector4d v(row[0], row[1], row[2], row[3]);
        s += v * v.transpose();
    }
    return s / static_cast<double>(m.size());
}

constexpr int kMaxIters = 500;
constexpr double kTol = 1e-6;
constexpr double kZero = 1e-9;

// One sparse component of M: power iteration alternating the singular-vector
// step a = Mb/|Mb| with a soft-threshold step on the raw loadings Ma. The
// threshold is a fraction of the largest raw loading, which keeps the penalty
// meaningful on the shrunken deflated matrices.
Eigen::Vector4d sparse_component(const Eigen::Matrix4d& m, double penalty) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(m);
    Eigen::Vector4d b = eig.eigenvectors().col(3);
    double delta = 0.0;
    for (int it = 0; it < kMaxIters; ++it) {
        Eigen::Vector4d a = m * b;
        const double na = a.norm();
        if (na == 0.0)
            return Eigen::Vector4d::Zero();
        a /= na;
        Eigen::Vector4d raw = m * a;
        const double thr = penalty * raw.cwiseAbs().maxCoeff();
        Eigen::Vector4d next;
        for (int j = 0; j < 4; ++j) {
            const double mag = std::abs(raw[j]) - thr;
            next[j] = mag > 0.0 ? (raw[j] > 0.0 ? mag : -mag) : 0.0;
        }
        const double nb = next.norm();
        if (nb == 0.0)
            return Eigen::Vector4d::Zero();
        next /= nb;
        delta = (next - b).cwiseAbs().maxCoeff();
        b = next;
        if (delta < kTol) {
            int imax;
            b.cwiseAbs().maxCoeff(&imax);
            if (b[imax] < 0.0)
                b = -b;
            return b;
        }
    }
    throw PipelineError("sparse_pca: no convergence after " +
                        std::to_string(kMaxIters) +
                        " iterations (residual " + std::to_string(delta) + ")");
}

} // namespace

SparseLoadings sparse_pca(const ScoreMatrix& m, int n_components, double penalty) {
    if (static_cast<int>(m.size()) < 4)
        throw InputError("sparse_pca: need at least as many rows as features");
    if (penalty < 0.0)
        throw InputError("sparse_pca: penalty must be >= 0");

    Eigen::Matrix4d mc = second_moment(m);
    SparseLoadings out;
    out.penalty = penalty;
    for (int c = 0; c < n_components; ++c) {
        Eigen::Vector4d b = sparse_component(mc, penalty);
        std::array<double, 4> comp{};
        int nnz = 0;
        for (int j = 0; j < 4; ++j) {
            comp[j] = std::abs(b[j]) > kZero ? b[j] : 0.0;
            if (comp[j] != 0.0)
                ++nnz;
        }
        out.components.push_back(comp);
        out.sparsity.push_back(nnz);
        // projection deflation
        Eigen::Matrix4d proj = Eigen::Matrix4d::Identity() - b * b.transpose();
        mc = proj * mc * proj;
    }
    return out;
}

SparseLoadings sparse_pca_ladder(const ScoreMatrix& m, int n_components) {
    auto supports_ok = [](const SparseLoadings& l) {
        for (int s : l.sparsity)
            if (s < 1 || s > 2)
                return false;
        return true;
    };
    // fine linear ladder; the first feasible rung keeps the threshold minimal,
    // so surviving loadings are shrunk as little as possible
    std::vector<double> ladder;
    for (int i = 0; i <= 90; ++i)
        ladder.push_back(0.01 * i);
    for (double penalty : ladder) {
        SparseLoadings l;
        try {
            l = sparse_pca(m, n_components, penalty);
        } catch (const PipelineError&) {
            continue; // oscillation at this penalty; try the next rung
        }
        if (supports_ok(l))
            return l;
    }
    throw PipelineError("sparse_pca_ladder: no penalty produced supports of size <= 2");
}

std::pair<double, double> derive_combined_coefficients(const SparseLoadings& loadings) {
    for (const auto& comp : loadings.components) {
        if (comp[0] == 0.0 && comp[1] == 0.0 && comp[2] != 0.0 && comp[3] != 0.0) {
            double a = comp[2], b = comp[3];
            if (a < 0.0) {
                a = -a;
                b = -b;
            }
            return {a, b};
        }
    }
    throw PipelineError(
        "no component is supported on exactly {recent, high-priority recent}; "
        "adjust the sparsity penalty");
}

} // namespace tagtrends
