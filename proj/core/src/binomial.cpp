#include "fanohodge/binomial.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "fanohodge/errors.hpp"

namespace fanohodge {

Integer binomial(long n, long m) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (n < 0) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(m) +
                      "): negative upper index with positive lower index");
  }
  if (n < m) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  return out;
}

namespace {

class GaussCache {
 public:
  const LaurentPoly* find(int n, int m) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find({n, m});
    return it == entries_.end() ? nullptr : &it->second;
  }

  // First writer wins; map nodes are never erased, so references stay valid.
  const LaurentPoly& insert(int n, int m, LaurentPoly value) {
    std::unique_lock lock(mutex_);
    return entries_.try_emplace({n, m}, std::move(value)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, LaurentPoly> entries_;
};

GaussCache& cache() {
  static GaussCache instance;
  return instance;
}

const LaurentPoly& zero() {
  static const LaurentPoly value;
  return value;
}

const LaurentPoly& one() {
  static const LaurentPoly value(1);
  return value;
}

}  // namespace

const LaurentPoly& gauss_binomial(int n, int m) {
  if (m < 0) return zero();
  if (m == 0) return one();
  if (n < 0) {
    throw DomainError("gauss_binomial(" + std::to_string(n) + ", " + std::to_string(m) +
                      "): negative upper index with positive lower index");
  }
  if (n < m) return zero();
  if (n == m) return one();

  if (const LaurentPoly* hit = cache().find(n, m)) return *hit;

  LaurentPoly value = gauss_binomial(n - 1, m - 1);
  value += gauss_binomial(n - 1, m).shifted(m);
  return cache().insert(n, m, std::move(value));
}

}  // namespace fanohodge
