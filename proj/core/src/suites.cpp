#include "fanohodge/suites.hpp"

#include <string>

#include "fanohodge/binomial.hpp"
#include "fanohodge/errors.hpp"
#include "fanohodge/motivic.hpp"
#include "fanohodge/stacky_counts.hpp"

namespace fanohodge {

namespace {

constexpr std::size_t kMaxListedFailures = 5;

class Tally {
 public:
  void record(bool ok, const std::string& instance) {
    ++checked_;
    if (ok) {
      ++passed_;
    } else if (failures_.size() < kMaxListedFailures) {
      failures_.push_back("failed at " + instance);
    }
  }

  VerificationReport report(std::string identity, std::vector<ReportParam> params) && {
    return VerificationReport{
        .identity = std::move(identity),
        .params = std::move(params),
        .lhs = Integer(checked_),
        .rhs = Integer(passed_),
        .notes = std::move(failures_),
    };
  }

 private:
  long checked_ = 0;
  long passed_ = 0;
  std::vector<std::string> failures_;
};

void require_bound(int value, int minimum, const char* name) {
  if (value < minimum) {
    throw PreconditionError(std::string(name) + " must be at least " + std::to_string(minimum));
  }
}

template <typename Check>
VerificationReport gessel_range(const char* identity, int max_m, int max_a, Check check) {
  require_bound(max_m, 0, "max_m");
  require_bound(max_a, 0, "max_a");
  return timed([&] {
    Tally tally;
    for (int m = 0; m <= max_m; ++m) {
      for (int a = 0; a <= max_a; a += 2) {
        tally.record(check(m, a), "m=" + std::to_string(m) + " a=" + std::to_string(a));
      }
    }
    return std::move(tally).report(identity, {{"max_m", max_m}, {"max_a", max_a}});
  });
}

bool palindromic_non_negative(const LaurentPoly& p, int degree) {
  if (!is_effective(p)) return false;
  return p.inverted().shifted(degree) == p;
}

}  // namespace

VerificationReport gessel_suite(int max_m, int max_a) {
  return gessel_range("gessel", max_m, max_a, gessel_identity_check);
}

VerificationReport gessel_series_suite(int max_m, int max_a) {
  return gessel_range("gessel-series", max_m, max_a, gessel_series_check);
}

VerificationReport chu_vandermonde_suite(int max_n) {
  require_bound(max_n, 0, "max_n");
  return timed([&] {
    Tally tally;
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= k; ++j) {
          tally.record(chu_vandermonde_check(n, j, k),
                       "n=" + std::to_string(n) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
        }
      }
    }
    return std::move(tally).report("chu-vandermonde", {{"max_n", max_n}});
  });
}

VerificationReport multiplicity_at_one_suite(int max_g) {
  require_bound(max_g, 2, "max_g");
  return timed([&] {
    Tally tally;
    for (int g = 2; g <= max_g; ++g) {
      for (int k = 0; k <= g - 2; ++k) {
        for (int i = 0; i <= k + 1; ++i) {
          tally.record(eval_at_one(m_polynomial(g, k, i)) == m_at_one(g, k, i),
                       "g=" + std::to_string(g) + " k=" + std::to_string(k) + " i=" + std::to_string(i));
        }
      }
    }
    return std::move(tally).report("multiplicity-at-one", {{"max_g", max_g}});
  });
}

VerificationReport q_binomial_suite(int max_n) {
  require_bound(max_n, 0, "max_n");
  return timed([&] {
    Tally tally;
    for (int n = 0; n <= max_n; ++n) {
      for (int m = 0; m <= n; ++m) {
        const LaurentPoly& p = gauss_binomial(n, m);
        const int degree = m * (n - m);
        const bool ok = p == gauss_binomial(n, n - m) && eval_at_one(p) == binomial(n, m) &&
                        p.max_degree() == degree && p.min_degree() == 0 &&
                        palindromic_non_negative(p, degree);
        tally.record(ok, "n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
    return std::move(tally).report("q-binomial", {{"max_n", max_n}});
  });
}

}  // namespace fanohodge
