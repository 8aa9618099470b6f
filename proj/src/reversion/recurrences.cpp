#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

#include "oscint/reversion/reversion.hpp"

namespace oscint {

namespace {

using Coef = std::function<BigRational(long)>;

// Σ_s coef[s](k) γ_{k-s} = 0 for k ≥ start, where γ_k = β_{step(k-1)+1}
// and every other β vanishes.
struct Recurrence {
  long step = 1;
  long start = 2;
  std::vector<Coef> coef;
};

BigRational R(long v) { return BigRational(v); }

Recurrence recurrence_for(RecurrenceFamily family, long k) {
  switch (family) {
    case RecurrenceFamily::x_plus_k_x2:
      return {1, 2, {[](long j) { return R(j); }, [k](long j) { return R(2 * k * (2 * j - 3)); }}};
    case RecurrenceFamily::x_plus_x3:
      return {2, 2, {[](long q) { return R((2 * q - 1) * (2 * q - 2)); },
                     [](long q) { return R(3 * (3 * q - 4) * (3 * q - 5)); }}};
    case RecurrenceFamily::x_plus_2x3:
      return {2, 2, {[](long q) { return R((2 * q - 1) * (q - 1)); },
                     [](long q) { return R(3 * (3 * q - 4) * (3 * q - 5)); }}};
    case RecurrenceFamily::x_plus_x4:
      return {3, 2, {[](long q) { return R((3 * q - 3) * (3 * q - 4) * (3 * q - 2)); },
                     [](long q) { return R(4 * (4 * q - 5) * (4 * q - 7) * (4 * q - 6)); }}};
    case RecurrenceFamily::x_plus_2x4:
      return {3, 2, {[](long q) { return R((3 * q - 3) * (3 * q - 4) * (3 * q - 2)); },
                     [](long q) { return R(8 * (4 * q - 5) * (4 * q - 7) * (4 * q - 6)); }}};
    case RecurrenceFamily::x_plus_x5:
      return {4, 2, {[](long q) { return R((4 * q - 4) * (4 * q - 5) * (4 * q - 3) * (4 * q - 6)); },
                     [](long q) { return R(5 * (5 * q - 9) * (5 * q - 8) * (5 * q - 7) * (5 * q - 6)); }}};
    case RecurrenceFamily::x_2x2_x3:
      return {1, 2, {[](long j) { return R(2 * j * (2 * j - 1)); },
                     [](long j) { return R(3 * (3 * j - 2) * (3 * j - 4)); }}};
    case RecurrenceFamily::x_x2_2x3:
      return {1, 3, {[](long j) { return R(7 * j * (j - 1)); },
                     [](long j) { return R(16 * (j - 1) * (2 * j - 3)); },
                     [](long j) { return R(12 * (3 * j - 5) * (3 * j - 7)); }}};
    case RecurrenceFamily::x_x2_x4:
      return {1, 3, {[](long j) { return R(1147 * j * (j - 1) * (j - 2)); },
                     [](long j) { return R(8 * (j - 1) * (j - 2) * (647 * j - 738)); },
                     [](long j) { return R(4 * (j - 2) * (224 * j * j + 1504 * j - 5157)); },
                     [](long j) { return R(8 * (800 * j * j * j - 5040 * j * j + 8746 * j - 2655)); },
                     [](long j) { return R(-192 * (4 * j - 15) * (2 * j - 7) * (4 * j - 17)); }}};
    case RecurrenceFamily::x_x3_x4:
      return {1, 5, {[](long j) { return R(124 * j * (j - 1) * (j - 2)); },
                     [](long j) { return R((j - 1) * (j - 2) * (7 * j - 88)); },
                     [](long j) { return R((j - 2) * (870 * j * j - 3465 * j + 3347)); },
                     [](long j) { return R(1243 * j * j * j - 9870 * j * j + 25869 * j - 22490); },
                     [](long j) { return R(8 * (4 * j - 15) * (2 * j - 7) * (4 * j - 17)); }}};
    default:
      throw std::invalid_argument("family " + to_string(family) + " is not a reversion family");
  }
}

// Low-order reversion coefficients from their classical closed forms, used
// to seed recurrences whose first terms are not determined by the recurrence.
std::vector<BigRational> classical_seeds(const Poly<BigRational>& a, std::size_t count) {
  const BigRational a1 = a.coeff(1), a2 = a.coeff(2), a3 = a.coeff(3), a4 = a.coeff(4);
  std::vector<BigRational> b;
  b.push_back(a1.inverse());
  b.push_back(-a2 / a1.pow(3));
  b.push_back((R(2) * a2.pow(2) - a1 * a3) / a1.pow(5));
  b.push_back((R(5) * a1 * a2 * a3 - a1.pow(2) * a4 - R(5) * a2.pow(3)) / a1.pow(7));
  if (count > b.size()) throw std::logic_error("not enough classical seeds");
  b.resize(count);
  return b;
}

BigRational at(const std::vector<BigRational>& beta, long j) {
  if (j < 0 || j >= static_cast<long>(beta.size())) return BigRational(0);
  return beta[static_cast<std::size_t>(j)];
}

constexpr std::array<std::pair<RecurrenceFamily, const char*>, 14> kNames{{
    {RecurrenceFamily::x_plus_k_x2, "x_plus_k_x2"},
    {RecurrenceFamily::x_plus_x3, "x_plus_x3"},
    {RecurrenceFamily::x_plus_x4, "x_plus_x4"},
    {RecurrenceFamily::x_plus_x5, "x_plus_x5"},
    {RecurrenceFamily::x_plus_2x3, "x_plus_2x3"},
    {RecurrenceFamily::x_plus_2x4, "x_plus_2x4"},
    {RecurrenceFamily::x_x2_x4, "x_x2_x4"},
    {RecurrenceFamily::x_x3_x4, "x_x3_x4"},
    {RecurrenceFamily::x_2x2_x3, "x_2x2_x3"},
    {RecurrenceFamily::x_x2_2x3, "x_x2_2x3"},
    {RecurrenceFamily::central_binomial, "central_binomial"},
    {RecurrenceFamily::cubic_kappa, "cubic_kappa"},
    {RecurrenceFamily::cubic_lambda, "cubic_lambda"},
    {RecurrenceFamily::quartic_eta, "quartic_eta"},
}};

}  // namespace

std::string to_string(RecurrenceFamily family) {
  for (const auto& [f, name] : kNames)
    if (f == family) return name;
  throw std::invalid_argument("unknown recurrence family");
}

RecurrenceFamily recurrence_family_from_string(const std::string& name) {
  for (const auto& [f, n] : kNames)
    if (name == n) return f;
  throw std::invalid_argument("unknown recurrence family '" + name + "'");
}

std::vector<RecurrenceFamily> reversion_families() {
  return {RecurrenceFamily::x_plus_k_x2, RecurrenceFamily::x_plus_x3,  RecurrenceFamily::x_plus_x4,
          RecurrenceFamily::x_plus_x5,   RecurrenceFamily::x_plus_2x3, RecurrenceFamily::x_plus_2x4,
          RecurrenceFamily::x_x2_x4,     RecurrenceFamily::x_x3_x4,    RecurrenceFamily::x_2x2_x3,
          RecurrenceFamily::x_x2_2x3};
}

Poly<BigRational> family_polynomial(RecurrenceFamily family, long k) {
  auto poly = [](std::vector<long> c) {
    std::vector<BigRational> out(c.begin(), c.end());
    return Poly<BigRational>(std::move(out));
  };
  switch (family) {
    case RecurrenceFamily::x_plus_k_x2: return poly({0, 1, k});
    case RecurrenceFamily::x_plus_x3: return poly({0, 1, 0, 1});
    case RecurrenceFamily::x_plus_x4: return poly({0, 1, 0, 0, 1});
    case RecurrenceFamily::x_plus_x5: return poly({0, 1, 0, 0, 0, 1});
    case RecurrenceFamily::x_plus_2x3: return poly({0, 1, 0, 2});
    case RecurrenceFamily::x_plus_2x4: return poly({0, 1, 0, 0, 2});
    case RecurrenceFamily::x_x2_x4: return poly({0, 1, 1, 0, 1});
    case RecurrenceFamily::x_x3_x4: return poly({0, 1, 0, 1, 1});
    case RecurrenceFamily::x_2x2_x3: return poly({0, 1, 2, 1});
    case RecurrenceFamily::x_x2_2x3: return poly({0, 1, 1, 2});
    default: throw std::invalid_argument("family " + to_string(family) + " has no phase polynomial");
  }
}

long recurrence_start(RecurrenceFamily family) {
  switch (family) {
    case RecurrenceFamily::central_binomial:
    case RecurrenceFamily::cubic_kappa:
    case RecurrenceFamily::cubic_lambda: return 1;
    case RecurrenceFamily::quartic_eta: return 2;
    default: {
      const Recurrence rec = recurrence_for(family, 1);
      return rec.step * (rec.start - 1) + 1;
    }
  }
}

BigRational recurrence_residual(RecurrenceFamily family, const std::vector<BigRational>& beta, long j, long k) {
  const Recurrence rec = recurrence_for(family, k);
  if ((j - 1) % rec.step != 0) return at(beta, j);
  const long q = (j - 1) / rec.step + 1;
  BigRational sum(0);
  for (std::size_t s = 0; s < rec.coef.size(); ++s) {
    const long qs = q - static_cast<long>(s);
    if (qs < 1) continue;
    sum += rec.coef[s](q) * at(beta, rec.step * (qs - 1) + 1);
  }
  return sum;
}

std::vector<BigRational> oracle_recurrence(RecurrenceFamily family, int count, long k) {
  if (count < 0) throw std::invalid_argument("term count must be non-negative");
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(count));
  switch (family) {
    case RecurrenceFamily::central_binomial: {
      BigRational c(1);
      for (long l = 0; l < count; ++l) {
        if (l > 0) c = c * R(2 * (2 * l - 1)) / R(l);
        out.push_back(c);
      }
      return out;
    }
    case RecurrenceFamily::cubic_kappa:
    case RecurrenceFamily::cubic_lambda: {
      const bool lambda = family == RecurrenceFamily::cubic_lambda;
      BigRational c(1);
      for (long n = 0; n < count; ++n) {
        if (n > 0) {
          c = lambda ? c * R(3 * (6 * n - 1) * (3 * n + 1)) / R((n + 1) * (2 * n + 1))
                     : c * R(3 * (6 * n - 1) * (3 * n - 2)) / R(n * (2 * n + 1));
        }
        out.push_back(c);
      }
      return out;
    }
    case RecurrenceFamily::quartic_eta: {
      BigRational c(1);
      for (long j = 1; j <= count; ++j) {
        if (j > 1) c = c * R(2 * (4 * j - 5)) / R(j);
        out.push_back(c);
      }
      return out;
    }
    default: break;
  }

  const Recurrence rec = recurrence_for(family, k);
  // beta[j] = β_j, beta[0] = 0
  std::vector<BigRational> beta(static_cast<std::size_t>(count) + 1, BigRational(0));
  const long dense_seeds = rec.step == 1 ? rec.start - 1 : 1;
  const auto seeds = classical_seeds(family_polynomial(family, k), static_cast<std::size_t>(dense_seeds));
  for (long j = 1; j <= std::min<long>(dense_seeds, count); ++j) beta[static_cast<std::size_t>(j)] = seeds[j - 1];

  for (long q = rec.start;; ++q) {
    const long j = rec.step * (q - 1) + 1;
    if (j > count) break;
    // the recurrence is linear in γ_q: solve with γ_q = 0 in place
    const BigRational rest = recurrence_residual(family, beta, j, k);
    beta[static_cast<std::size_t>(j)] = -rest / rec.coef[0](q);
  }
  out.assign(beta.begin() + 1, beta.end());
  return out;
}

}  // namespace oscint
