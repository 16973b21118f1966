#include "mzstar/bell.hpp"

#include <functional>
#include <string>

#include "mzstar/bernoulli.hpp"
#include "mzstar/errors.hpp"

namespace mzstar {

int PartitionTerm::total() const {
  int s = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) s += parts[i] * multiplicities[i];
  return s;
}

std::vector<PartitionTerm> enumerate_partitions(int n, std::span<const int> parts) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] <= parts[i - 1])) {
      throw std::invalid_argument("enumerate_partitions: parts must be positive and strictly ascending");
    }
  }
  std::vector<PartitionTerm> out;
  PartitionTerm current{std::vector<int>(parts.begin(), parts.end()), std::vector<int>(parts.size(), 0)};

  std::function<void(std::ptrdiff_t, int)> descend = [&](std::ptrdiff_t idx, int remaining) {
    if (idx < 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int part = parts[static_cast<std::size_t>(idx)];
    for (int k = 0; k * part <= remaining; ++k) {
      current.multiplicities[static_cast<std::size_t>(idx)] = k;
      descend(idx - 1, remaining - k * part);
    }
    current.multiplicities[static_cast<std::size_t>(idx)] = 0;
  };
  descend(static_cast<std::ptrdiff_t>(parts.size()) - 1, n);
  return out;
}

std::vector<PartitionTerm> odd_partitions(int n, int max_part) {
  std::vector<int> parts;
  for (int p = 1; p <= max_part; p += 2) parts.push_back(p);
  return enumerate_partitions(n, parts);
}

PiValue zeta_bar_even(int s) {
  if (s < 2 || s % 2 != 0) throw DomainError("zeta_bar_even: s must be even and >= 2, got " + std::to_string(s));
  const PiValue z = zeta_even(static_cast<unsigned>(s / 2));
  // 2^{1-s} - 1 = (2 - 2^s) / 2^s
  const Integer two_s = pow2(static_cast<unsigned long>(s));
  return z * Rational(2 - two_s, two_s);
}

namespace {

void require_bell_args(int d, int m, const char* fn) {
  if (d < 1) throw DomainError(std::string(fn) + ": d must be >= 1");
  if (m < 1) throw DomainError(std::string(fn) + ": m must be >= 1");
}

// Weight attached to the odd part p = 2j - 1:
//   (2 - 2^s) B_s / (p * s!),  s = 2 m p.
Rational part_weight(int m, int p) {
  const auto s = static_cast<std::size_t>(2 * m * p);
  const Rational& b = (*bernoulli_table(s))[s];
  return Rational(2 - pow2(s)) * b / Rational(Integer(p) * factorial(s));
}

Rational odd_partition_sum(int n, int m) {
  const int max_part = (n % 2 == 0) ? n - 1 : n;
  std::vector<Rational> weight;
  for (int p = 1; p <= max_part; p += 2) weight.push_back(part_weight(m, p));

  Rational total;
  for (const auto& term : odd_partitions(n, max_part)) {
    Rational t = 1;
    for (std::size_t i = 0; i < term.parts.size(); ++i) {
      const int k = term.multiplicities[i];
      if (k == 0) continue;
      Integer num = weight[i].numerator();
      Integer den = weight[i].denominator();
      mpz_pow_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
      mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
      t *= Rational(num, den * factorial(static_cast<std::size_t>(k)));
    }
    total += t;
  }
  return total;
}

}  // namespace

PiValue bell_plain(int d, int m) {
  require_bell_args(d, m, "bell_plain");
  return PiValue(odd_partition_sum(2 * d, m), static_cast<unsigned>(4 * m * d));
}

PiValue bell_tail(int d, int m) {
  require_bell_args(d, m, "bell_tail");
  // Every weight carries the sign (-1)^m and an odd number of parts is
  // used, while the generating function gives -P_{2d+1}; together the
  // partition sum picks up (-1)^m.
  Rational c = odd_partition_sum(2 * d + 1, m);
  if (m % 2 != 0) c = -c;
  return PiValue(std::move(c), static_cast<unsigned>(2 * m * (2 * d + 1)));
}

std::vector<PiValue> bell_inputs(int m, int count) {
  if (m < 1) throw DomainError("bell_inputs: m must be >= 1");
  std::vector<PiValue> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    const int s = 2 * m * k;
    xs.push_back(k % 2 == 1 ? zeta_bar_even(s) * Rational(2) : PiValue::zero(static_cast<unsigned>(s)));
  }
  return xs;
}

GradedSeries bell_generating_series(int m, int T) {
  if (m < 1) throw DomainError("bell_generating_series: m must be >= 1");
  auto u = GradedSeries::zero(T);
  const auto xs = bell_inputs(m, T / (2 * m));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    u.mutable_at(2 * m * k) = xs[i].coeff / Rational(k);
  }
  return series_exp(u);
}

namespace {

Rational b_over_fact(std::size_t s) { return (*bernoulli_table(s))[s] / Rational(factorial(s)); }

Rational cube(const Rational& q) { return q * q * q; }

}  // namespace

PiValue corollary_d1(int m) {
  if (m < 1) throw DomainError("corollary_d1: m must be >= 1");
  const auto s = static_cast<std::size_t>(2 * m);
  const Rational a = Rational(1 - pow2(s - 1)) * b_over_fact(s);
  return PiValue(Rational(2) * a * a, static_cast<unsigned>(4 * m));
}

PiValue corollary_d1_tail(int m) {
  if (m < 1) throw DomainError("corollary_d1_tail: m must be >= 1");
  const auto s = static_cast<std::size_t>(2 * m);
  const Rational first = cube(Rational(pow2(s) - 2) * b_over_fact(s)) / Rational(2);
  const Rational second = Rational(pow2(3 * s) - 2) * b_over_fact(3 * s);
  return PiValue((first + second) / Rational(3), static_cast<unsigned>(6 * m));
}

PiValue corollary_d2(int m) {
  if (m < 1) throw DomainError("corollary_d2: m must be >= 1");
  const auto s = static_cast<std::size_t>(2 * m);
  const Rational outside = Rational(2 - pow2(s)) * b_over_fact(s) / Rational(3);
  const Rational inside = cube(Rational(1 - pow2(s - 1)) * b_over_fact(s)) +
                          Rational(2 - pow2(3 * s)) * b_over_fact(3 * s);
  return PiValue(outside * inside, static_cast<unsigned>(8 * m));
}

}  // namespace mzstar
