#ifndef GGMIDENT_CI_ORACLE_HPP
#define GGMIDENT_CI_ORACLE_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "ggmident/index_set.hpp"
#include "ggmident/sym_matrix.hpp"

namespace ggmident {

/// Sufficient statistic for the empirical oracle: the scatter matrix
/// S = sum_i x_i x_i^T together with the sample count.
struct ScatterData {
    SymMatrix s_mat;
    long n = 0;
};

/// Outcome of one conditional-independence query.
struct CiDecision {
    bool independent = false;
    double statistic = 0.0;      // conditional covariance or its estimate
    double threshold_used = 0.0;

    bool operator==(const CiDecision&) const = default;
};

/// Decision interface for "is X_u independent of X_v given X_S?".
/// Queries are symmetric in (u, v) and deterministic; implementations are
/// read-only after construction and safe for concurrent use.
class CiOracle {
public:
    virtual ~CiOracle() = default;

    /// Validates the endpoints, normalizes (u, v) so decisions are
    /// symmetric, and counts the call.
    CiDecision query(int u, int v, const IndexSet& s) const;

    virtual int dim() const = 0;
    virtual int max_conditioning_size() const = 0;

    std::uint64_t query_count() const { return query_count_.load(); }

protected:
    virtual CiDecision do_query(int u, int v, const IndexSet& s) const = 0;

private:
    mutable std::atomic<std::uint64_t> query_count_{0};
};

/// Sample conditional covariance (scatter-matrix form):
///   (S_uv - S_uS S_S^{-1} S_Sv) / (n - |S|),
/// reducing to S_uv / n when S is empty. Throws InsufficientSamples when
/// |S| >= n and SingularConditioningSet when S_S cannot be inverted.
double sample_cond_cov(const ScatterData& d, int u, int v, const IndexSet& s);

/// Data-only threshold heuristic when no dependence margin is available:
///   C * sqrt(((s + 2) log p + log(1/delta)) / n).
double default_alpha(int p, long n, int s, double delta, double c);

/// Oracle backed by a true covariance matrix: independence iff
/// |Sigma(u,v|S)| < epsilon_zero.
class ExactOracle final : public CiOracle {
public:
    ExactOracle(SymMatrix sigma, double epsilon_zero);

    int dim() const override { return sigma_.dim(); }
    int max_conditioning_size() const override { return dim() - 2; }
    double epsilon_zero() const { return epsilon_zero_; }
    const SymMatrix& sigma() const { return sigma_; }

protected:
    CiDecision do_query(int u, int v, const IndexSet& s) const override;

private:
    SymMatrix sigma_;
    double epsilon_zero_;
};

/// Oracle backed by a scatter matrix: independence iff the sample
/// conditional covariance is below alpha in magnitude.
class EmpiricalOracle final : public CiOracle {
public:
    EmpiricalOracle(ScatterData data, double alpha);

    int dim() const override { return data_.s_mat.dim(); }
    int max_conditioning_size() const override;
    double alpha() const { return alpha_; }

protected:
    CiDecision do_query(int u, int v, const IndexSet& s) const override;

private:
    ScatterData data_;
    double alpha_;
};

/// Memoizing wrapper: behaviorally identical to the inner oracle, with
/// repeated queries answered from a map keyed on (min(u,v), max(u,v), S).
/// Insertion is mutex-guarded, so concurrent queries stay safe.
class CachedOracle final : public CiOracle {
public:
    explicit CachedOracle(std::shared_ptr<const CiOracle> inner);

    int dim() const override { return inner_->dim(); }
    int max_conditioning_size() const override { return inner_->max_conditioning_size(); }

    std::uint64_t cache_hits() const { return hits_.load(); }
    const CiOracle& inner() const { return *inner_; }

protected:
    CiDecision do_query(int u, int v, const IndexSet& s) const override;

private:
    struct Key {
        int u, v;
        std::vector<int> s;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    std::shared_ptr<const CiOracle> inner_;
    mutable std::unordered_map<Key, CiDecision, KeyHash> memo_;
    mutable std::mutex mutex_;
    mutable std::atomic<std::uint64_t> hits_{0};
};

std::shared_ptr<CiOracle> make_exact_oracle(SymMatrix sigma, double epsilon_zero);
std::shared_ptr<CiOracle> make_empirical_oracle(ScatterData data, double alpha);
std::shared_ptr<CiOracle> cached(std::shared_ptr<const CiOracle> inner);

}  // namespace ggmident

#endif  // GGMIDENT_CI_ORACLE_HPP
