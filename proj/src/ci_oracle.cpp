#include "ggmident/ci_oracle.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Cholesky>

#include "ggmident/errors.hpp"
#include "ggmident/linalg.hpp"

namespace ggmident {

CiDecision CiOracle::query(int u, int v, const IndexSet& s) const {
    const int p = dim();
    if (u < 1 || u > p || v < 1 || v > p)
        throw InvalidIndex("query pair (" + std::to_string(u) + "," + std::to_string(v) +
                           ") outside 1.." + std::to_string(p));
    if (u == v) throw InvalidConditioningSet("query requires distinct nodes");
    if (s.contains(u) || s.contains(v))
        throw InvalidConditioningSet("conditioning set contains a query endpoint");
    query_count_.fetch_add(1, std::memory_order_relaxed);
    if (u > v) std::swap(u, v);
    return do_query(u, v, s);
}

double sample_cond_cov(const ScatterData& d, int u, int v, const IndexSet& s) {
    const int p = d.s_mat.dim();
    if (u < 1 || u > p || v < 1 || v > p)
        throw InvalidIndex("node pair (" + std::to_string(u) + "," + std::to_string(v) +
                           ") outside 1.." + std::to_string(p));
    if (u == v) throw InvalidConditioningSet("sample conditional covariance requires distinct nodes");
    if (s.contains(u) || s.contains(v))
        throw InvalidConditioningSet("conditioning set contains an endpoint");
    if (s.size() >= d.n)
        throw InsufficientSamples("conditioning on " + std::to_string(s.size()) + " nodes with only " +
                                  std::to_string(d.n) + " samples");
    const double dof = static_cast<double>(d.n - s.size());
    if (s.empty()) return d.s_mat(u, v) / dof;

    const Eigen::MatrixXd block = submatrix(d.s_mat, s, s);
    Eigen::LLT<Eigen::MatrixXd> llt(block);
    if (llt.info() != Eigen::Success || llt.rcond() < kSingularRcond)
        throw SingularConditioningSet("scatter submatrix is numerically singular");
    const Eigen::VectorXd s_su = submatrix(d.s_mat, s, IndexSet{u});
    const Eigen::VectorXd s_sv = submatrix(d.s_mat, s, IndexSet{v});
    return (d.s_mat(u, v) - s_su.dot(llt.solve(s_sv))) / dof;
}

double default_alpha(int p, long n, int s, double delta, double c) {
    if (n <= 0 || p < 2 || s < 0 || delta <= 0.0 || delta >= 1.0 || c <= 0.0)
        throw InvalidSpec("default_alpha requires n > 0, p >= 2, s >= 0, 0 < delta < 1, C > 0");
    const double numer = (static_cast<double>(s) + 2.0) * std::log(static_cast<double>(p)) +
                         std::log(1.0 / delta);
    return c * std::sqrt(numer / static_cast<double>(n));
}

ExactOracle::ExactOracle(SymMatrix sigma, double epsilon_zero)
    : sigma_(std::move(sigma)), epsilon_zero_(epsilon_zero) {
    if (epsilon_zero <= 0.0) throw InvalidSpec("epsilon_zero must be positive");
}

CiDecision ExactOracle::do_query(int u, int v, const IndexSet& s) const {
    const double value = cond_cov(sigma_, u, v, s);
    return {std::abs(value) < epsilon_zero_, value, epsilon_zero_};
}

EmpiricalOracle::EmpiricalOracle(ScatterData data, double alpha)
    : data_(std::move(data)), alpha_(alpha) {
    if (alpha <= 0.0) throw InvalidSpec("alpha must be positive");
    if (data_.n < 1) throw InvalidSpec("sample count must be at least 1");
}

int EmpiricalOracle::max_conditioning_size() const {
    return static_cast<int>(std::min<long>(dim() - 2, data_.n - 1));
}

CiDecision EmpiricalOracle::do_query(int u, int v, const IndexSet& s) const {
    const double value = sample_cond_cov(data_, u, v, s);
    return {std::abs(value) < alpha_, value, alpha_};
}

CachedOracle::CachedOracle(std::shared_ptr<const CiOracle> inner) : inner_(std::move(inner)) {
    if (!inner_) throw InvalidSpec("cached oracle needs an inner oracle");
}

std::size_t CachedOracle::KeyHash::operator()(const Key& k) const {
    std::size_t h = std::hash<int>()(k.u) * 31u + std::hash<int>()(k.v);
    for (int x : k.s) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
}

CiDecision CachedOracle::do_query(int u, int v, const IndexSet& s) const {
    Key key{u, v, s.members()};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            hits_.fetch_add(1, std::memory_order_relaxed);
            return it->second;
        }
    }
    const CiDecision decision = inner_->query(u, v, s);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(std::move(key), decision).first->second;
}

std::shared_ptr<CiOracle> make_exact_oracle(SymMatrix sigma, double epsilon_zero) {
    return std::make_shared<ExactOracle>(std::move(sigma), epsilon_zero);
}

std::shared_ptr<CiOracle> make_empirical_oracle(ScatterData data, double alpha) {
    return std::make_shared<EmpiricalOracle>(std::move(data), alpha);
}

std::shared_ptr<CiOracle> cached(std::shared_ptr<const CiOracle> inner) {
    return std::make_shared<CachedOracle>(std::move(inner));
}

}  // namespace ggmident
