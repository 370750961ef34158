#include "inducib/simplex.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "inducib/class_poly.hpp"
#include "inducib/landscape.hpp"
#include "inducib/parallel.hpp"

namespace inducib {

namespace {

template <typename T>
constexpr bool kIsExact = std::is_same_v<T, ExactRat>;

template <typename T>
T power(const T& x, int e) {
  T out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

template <typename T>
T factorial_as(int n) {
  T out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

template <typename T>
void check_support(const BasicLimitPoint<T>& p) {
  if (p.support_size() > kMaxSupport)
    throw std::invalid_argument("support size " + std::to_string(p.support_size()) + " exceeds " +
                                std::to_string(kMaxSupport));
}

// Class polynomial over the support weights: coefficient of y^u is
// S_{F_u}(x) / prod_c u_c!.
template <typename T>
std::vector<T> weight_polynomial(const ClassIndexer& ix, const std::vector<T>& weights) {
  std::vector<T> poly(ix.state_count(), T(0));
  poly[0] = 1;
  std::vector<T> factor(ix.class_count());
  for (const T& w : weights) {
    for (std::size_t c = 0; c < ix.class_count(); ++c) factor[c] = power(w, ix.class_size(c));
    multiply_part(ix, poly, factor);
  }
  return poly;
}

template <typename T>
T ordered_coefficient(const ClassIndexer& ix, const std::vector<T>& poly, std::size_t state) {
  T out = poly[state];
  for (std::size_t c = 0; c < ix.class_count(); ++c) out *= factorial_as<T>(ix.digit(state, c));
  return out;
}

template <typename T>
void check_pair(const BasicLimitPoint<T>& p, int i, int j) {
  const int s = p.support_size();
  if (i < 0 || j < 0 || i >= s || j >= s || i == j)
    throw std::invalid_argument("move indices (" + std::to_string(i) + "," + std::to_string(j) +
                                ") are not two distinct support indices of a point with support " +
                                std::to_string(s));
}

}  // namespace

template <typename T>
BasicLimitPoint<T> BasicLimitPoint<T>::from_weights(std::vector<T> weights, T x0) {
  for (const T& w : weights)
    if (w < 0) throw std::invalid_argument("negative weight");
  if (x0 < 0) throw std::invalid_argument("negative residual");
  std::erase_if(weights, [](const T& w) { return w == 0; });
  if (weights.size() > static_cast<std::size_t>(kMaxSupport))
    throw std::invalid_argument("support size exceeds " + std::to_string(kMaxSupport));
  std::sort(weights.begin(), weights.end(), [](const T& a, const T& b) { return a > b; });
  T total = x0;
  for (const T& w : weights) total += w;
  if constexpr (kIsExact<T>) {
    if (total != 1) throw std::invalid_argument("weights and residual must sum to exactly 1");
  } else {
    if (total <= 0) throw std::invalid_argument("point has no mass");
    for (T& w : weights) w /= total;
    x0 /= total;
  }
  BasicLimitPoint out;
  out.weights_ = std::move(weights);
  out.x0_ = std::move(x0);
  return out;
}

template <typename T>
BasicLimitPoint<T> BasicLimitPoint<T>::from_weights(std::vector<T> weights) {
  T sum = 0;
  for (const T& w : weights) sum += w;
  T x0 = 1 - sum;
  if constexpr (kIsExact<T>) {
    if (x0 < 0) throw std::invalid_argument("weights sum to more than 1");
  } else {
    if (x0 < T("-1e-30")) throw std::invalid_argument("weights sum to more than 1");
    if (x0 < 0) x0 = 0;
  }
  return from_weights(std::move(weights), std::move(x0));
}

template <typename T>
BasicLimitPoint<T> BasicLimitPoint<T>::balanced(int k) {
  if (k < 1 || k > kMaxSupport) throw std::invalid_argument("balanced point needs 1 <= k <= 64");
  BasicLimitPoint out;
  out.weights_.assign(static_cast<std::size_t>(k), T(1) / T(k));
  out.x0_ = 0;
  return out;
}

template <typename T>
T BasicLimitPoint<T>::distance_to_balanced(int k) const {
  T d = abs(x0_);
  const T target = T(1) / T(k);
  const std::size_t len = std::max(weights_.size(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < len; ++i) {
    const T w = i < weights_.size() ? weights_[i] : T(0);
    const T t = i < static_cast<std::size_t>(k) ? target : T(0);
    const T gap = abs(w - t);
    if (gap > d) d = gap;
  }
  return d;
}

template <typename T>
bool BasicLimitPoint<T>::is_balanced(const T& tol) const {
  if (weights_.empty()) return true;
  return weights_.front() - weights_.back() <= tol;
}

template <typename T>
std::string BasicLimitPoint<T>::to_string(int digits) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) os << ", ";
    if constexpr (kIsExact<T>)
      os << inducib::to_string(weights_[i]);
    else
      os << to_decimal(weights_[i], digits);
  }
  os << ')';
  if (x0_ != 0) {
    if constexpr (kIsExact<T>)
      os << " x0=" << inducib::to_string(x0_);
    else
      os << " x0=" << to_decimal(x0_, digits);
  }
  return os.str();
}

template <typename T>
T s_poly(std::span<const int> degrees, const BasicLimitPoint<T>& p) {
  check_support(p);
  if (degrees.empty()) return T(1);
  const PatternSpec shape(std::vector<int>(degrees.begin(), degrees.end()));
  if (shape.r() > p.support_size()) return T(0);
  const ClassIndexer ix(shape);
  const auto poly = weight_polynomial(ix, p.weights());
  return ordered_coefficient(ix, poly, ix.full_state());
}

template <typename T>
T p_f(const PatternSpec& f, const BasicLimitPoint<T>& p) {
  check_support(p);
  if (f.empty()) return T(1);
  const ClassIndexer ix(f);
  const auto poly = weight_polynomial(ix, p.weights());
  const int sc = f.singleton_count();
  const std::size_t last = ix.class_count() - 1;
  T sum = ordered_coefficient(ix, poly, ix.full_state());
  if (sc > 0 && p.x0() != 0) {
    T x0_pow = 1;
    for (int i = 1; i <= sc; ++i) {
      x0_pow *= p.x0();
      const std::size_t state = ix.full_state() - static_cast<std::size_t>(i) * ix.stride(last);
      sum += T(binomial(sc, i)) * x0_pow * ordered_coefficient(ix, poly, state);
    }
  }
  const ExactRat k = kappa(f);
  if constexpr (kIsExact<T>)
    return k * sum;
  else
    return to_bigfloat(k) * sum;
}

template <typename T>
BasicLimitPoint<T> merge_move(const BasicLimitPoint<T>& p, int i, int j) {
  check_pair(p, i, j);
  std::vector<T> w = p.weights();
  w[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(j)];
  w[static_cast<std::size_t>(j)] = 0;
  return BasicLimitPoint<T>::from_weights(std::move(w), p.x0());
}

template <typename T>
BasicLimitPoint<T> balance_move(const BasicLimitPoint<T>& p, int i, int j) {
  check_pair(p, i, j);
  std::vector<T> w = p.weights();
  const T half = (w[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(j)]) / 2;
  w[static_cast<std::size_t>(i)] = half;
  w[static_cast<std::size_t>(j)] = half;
  return BasicLimitPoint<T>::from_weights(std::move(w), p.x0());
}

template <typename T>
BasicLimitPoint<T> absorb_residual(const BasicLimitPoint<T>& p) {
  std::vector<T> w = p.weights();
  if (w.empty())
    w.push_back(p.x0());
  else
    w.front() += p.x0();
  return BasicLimitPoint<T>::from_weights(std::move(w), T(0));
}

template <typename T>
BasicLimitPoint<T> residual_to_part(const BasicLimitPoint<T>& p) {
  std::vector<T> w = p.weights();
  w.push_back(p.x0());
  return BasicLimitPoint<T>::from_weights(std::move(w), T(0));
}

template <typename T>
BasicLimitPoint<T> balance_all(const BasicLimitPoint<T>& p) {
  if (p.support_size() == 0) return p;
  T sum = 0;
  for (const T& w : p.weights()) sum += w;
  std::vector<T> w(p.weights().size(), sum / T(p.support_size()));
  return BasicLimitPoint<T>::from_weights(std::move(w), p.x0());
}

#define INDUCIB_INSTANTIATE(T)                                                        \
  template class BasicLimitPoint<T>;                                                  \
  template T s_poly<T>(std::span<const int>, const BasicLimitPoint<T>&);              \
  template T p_f<T>(const PatternSpec&, const BasicLimitPoint<T>&);                   \
  template BasicLimitPoint<T> merge_move<T>(const BasicLimitPoint<T>&, int, int);     \
  template BasicLimitPoint<T> balance_move<T>(const BasicLimitPoint<T>&, int, int);   \
  template BasicLimitPoint<T> absorb_residual<T>(const BasicLimitPoint<T>&);          \
  template BasicLimitPoint<T> residual_to_part<T>(const BasicLimitPoint<T>&);       \
  template BasicLimitPoint<T> balance_all<T>(const BasicLimitPoint<T>&);

INDUCIB_INSTANTIATE(BigFloat)
INDUCIB_INSTANTIATE(ExactRat)
#undef INDUCIB_INSTANTIATE

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Merge: return "merge";
    case MoveKind::Balance: return "balance";
    case MoveKind::BalanceAll: return "balance-all";
    case MoveKind::AbsorbResidual: return "absorb";
    case MoveKind::ResidualToPart: return "residual-to-part";
    case MoveKind::ForcedMerge: return "forced-merge";
    case MoveKind::ForcedAbsorb: return "forced-absorb";
  }
  return "?";
}

namespace {

struct Candidate {
  MoveKind kind;
  int i = -1;
  int j = -1;
  LimitPoint point;
  BigFloat value;
};

// All candidate moves in a fixed order; ties keep the earliest.
std::vector<Candidate> candidates(const PatternSpec& f, const LimitPoint& p, bool merges_only) {
  std::vector<Candidate> out;
  const int s = p.support_size();
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      auto m = merge_move(p, i, j);
      BigFloat v = p_f(f, m);
      out.push_back({MoveKind::Merge, i, j, std::move(m), std::move(v)});
    }
  if (merges_only) return out;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      if (p[i] == p[j]) continue;
      auto b = balance_move(p, i, j);
      BigFloat v = p_f(f, b);
      out.push_back({MoveKind::Balance, i, j, std::move(b), std::move(v)});
    }
  if (s > 1 && p[0] != p[s - 1]) {
    auto b = balance_all(p);
    BigFloat v = p_f(f, b);
    out.push_back({MoveKind::BalanceAll, -1, -1, std::move(b), std::move(v)});
  }
  if (p.x0() > 0) {
    auto a = absorb_residual(p);
    BigFloat v = p_f(f, a);
    out.push_back({MoveKind::AbsorbResidual, -1, -1, std::move(a), std::move(v)});
    if (s < kMaxSupport) {
      auto n = residual_to_part(p);
      BigFloat nv = p_f(f, n);
      out.push_back({MoveKind::ResidualToPart, -1, -1, std::move(n), std::move(nv)});
    }
  }
  return out;
}

const Candidate* best_of(const std::vector<Candidate>& cs) {
  const Candidate* best = nullptr;
  for (const auto& c : cs)
    if (!best || c.value > best->value) best = &c;
  return best;
}

}  // namespace

AscentResult symmetrize_ascend(const PatternSpec& f, std::optional<int> k_cap, const LimitPoint& start,
                               const BigFloat& tol) {
  AscentResult res;
  LimitPoint p = start;
  BigFloat value = p_f(f, p);

  if (k_cap) {
    if (*k_cap < 1) throw std::invalid_argument("k_cap must be positive");
    if (p.x0() > 0) {
      p = absorb_residual(p);
      value = p_f(f, p);
      res.trace.push_back({MoveKind::ForcedAbsorb, -1, -1, value});
    }
    while (p.support_size() > *k_cap) {
      const auto cs = candidates(f, p, true);
      const Candidate* best = best_of(cs);
      p = best->point;
      value = best->value;
      res.trace.push_back({MoveKind::ForcedMerge, best->i, best->j, value});
    }
  }

  // A merge whose gain lies in (-tol, tol) is taken only when nothing
  // improves. This walks off the zero-derivative plateaus of the ell = r + 1
  // case; every such step shrinks the support, so it cannot cycle.
  while (static_cast<long>(res.trace.size()) < kMaxAscentMoves) {
    const auto cs = candidates(f, p, false);
    const Candidate* best = best_of(cs);
    if (best && best->value - value >= tol) {
      p = best->point;
      value = best->value;
      res.trace.push_back({best->kind, best->i, best->j, value});
      continue;
    }
    const Candidate* neutral = nullptr;
    for (const auto& c : cs)
      if (c.kind == MoveKind::Merge && abs(c.value - value) < tol && (!neutral || c.value > neutral->value))
        neutral = &c;
    if (neutral) {
      p = neutral->point;
      value = neutral->value;
      res.trace.push_back({neutral->kind, neutral->i, neutral->j, value});
      ++res.neutral_moves;
      continue;
    }
    // Near a balanced point the gain of balancing is quadratic in the
    // distance, so it drops below tol while the point is still ~sqrt(tol)
    // away. A positive balance-all gain is therefore still taken; it lands on
    // an exactly balanced point, so this happens at most once in a row.
    const Candidate* polish = nullptr;
    for (const auto& c : cs)
      if (c.kind == MoveKind::BalanceAll && c.value > value) polish = &c;
    if (polish) {
      p = polish->point;
      value = polish->value;
      res.trace.push_back({polish->kind, -1, -1, value});
      continue;
    }
    res.converged = true;
    break;
  }
  res.point = p;
  res.value = value;
  res.plateau = res.converged && !(p.is_balanced(BigFloat("1e-40")) && p.x0() == 0);
  return res;
}

LimitPoint random_start(std::uint64_t seed, int index, int min_support, int max_support, bool residual) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> support(min_support, max_support);
  std::exponential_distribution<double> expo(1.0);
  const int s = support(rng);
  std::vector<BigFloat> w;
  w.reserve(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) w.emplace_back(expo(rng) + 1e-3);
  BigFloat x0 = 0;
  if (residual) {
    std::uniform_real_distribution<double> frac(0.05, 0.5);
    x0 = frac(rng);
    BigFloat sum = 0;
    for (const auto& v : w) sum += v;
    for (auto& v : w) v = v / sum * (1 - x0);
  }
  return LimitPoint::from_weights(std::move(w), std::move(x0));
}

CertifyReport certify_opt(const PatternSpec& f, const CertifyOptions& opts) {
  if (f.r() < 2 || f.is_complete()) throw std::invalid_argument("certify_opt needs a non-complete pattern with r >= 2");
  CertifyReport rep;
  rep.f = f;
  rep.k_cap = opts.k_cap;
  rep.m = m_star(f.r(), f.ell());
  rep.target_k = opts.k_cap && *opts.k_cap < rep.m ? *opts.k_cap : rep.m;
  if (rep.target_k < f.r()) throw std::invalid_argument("k_cap below r leaves no copies of F");
  rep.target_value = kappa(f) * f_value(f.r(), f.ell(), rep.target_k);
  const BigFloat target = to_bigfloat(rep.target_value);

  // Merge and balance moves never enlarge the support, so starts smaller than
  // the target support could not reach it; sizes are drawn from
  // [target, max(2m, 3r)] (exactly k_cap under a cap).
  const int lo = rep.target_k;
  const int hi = opts.k_cap ? *opts.k_cap : std::max(2 * rep.m, 3 * f.r());

  rep.trials.resize(static_cast<std::size_t>(std::max(opts.trials, 0)));
  parallel_for(rep.trials.size(), opts.threads, [&](std::size_t t) {
    const int idx = static_cast<int>(t);
    const bool residual = !opts.k_cap && idx % 4 == 3;
    const LimitPoint start = random_start(opts.seed, idx, lo, std::max(lo, hi), residual);
    const AscentResult run = symmetrize_ascend(f, opts.k_cap, start, opts.step_tol);
    TrialRecord& rec = rep.trials[t];
    rec.index = idx;
    rec.start_support = start.support_size();
    rec.start_residual = residual;
    rec.final_support = run.point.support_size();
    rec.distance = run.point.distance_to_balanced(rep.target_k);
    rec.value = run.value;
    rec.value_error = abs(run.value - target);
    rec.moves = static_cast<long>(run.trace.size());
    rec.converged = run.converged;
    rec.plateau = run.plateau;
    rec.neutral_moves = run.neutral_moves;
    rec.pass = run.converged && rec.distance <= opts.point_tol && rec.value_error <= opts.value_tol;
    rec.final_point = run.point.to_string(12);
  });
  for (const auto& rec : rep.trials) {
    if (rec.plateau) ++rep.plateau_count;
    if (rec.neutral_moves > 0) ++rep.plateau_escapes;
    if (!rec.pass) ++rep.failures;
  }
  rep.pass = rep.failures == 0 && !rep.trials.empty();
  return rep;
}

}  // namespace inducib
