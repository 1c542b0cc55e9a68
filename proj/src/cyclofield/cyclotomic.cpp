#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "field_data.hpp"

namespace liefix {

unsigned totient(unsigned m) {
  unsigned result = m;
  unsigned x = m;
  for (unsigned p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

namespace {

std::vector<long> compute_phi(unsigned m) {
  // (t^m - 1) divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& div = cyclotomic_coefficients(d);
    std::size_t dd = div.size() - 1;
    std::size_t n = p.size() - 1;
    std::vector<mpz_class> q(n - dd + 1, 0);
    for (std::size_t k = n + 1; k-- > dd;) {
      mpz_class c = p[k];
      q[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) p[k - dd + i] -= c * div[i];
    }
    p = std::move(q);
  }
  std::vector<long> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.get_si());
  return out;
}

std::mutex& phi_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const std::vector<long>& cyclotomic_coefficients(unsigned m) {
  return detail::field(m).phi;
}

namespace detail {

const FieldData& field(unsigned m) {
  if (m == 0) throw Error(ErrorKind::Conductor, "conductor must be positive");
  static std::map<unsigned, std::unique_ptr<FieldData>> cache;
  {
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  // Computed outside the lock because it recurses into smaller conductors.
  auto data = std::make_unique<FieldData>();
  data->m = m;
  data->degree = totient(m);
  data->phi = m == 1 ? std::vector<long>{-1, 1} : compute_phi(m);
  std::lock_guard<std::mutex> lock(phi_mutex());
  auto [it, inserted] = cache.emplace(m, std::move(data));
  return *it->second;
}

void reduce_mod_phi(const FieldData& f, std::vector<Rational>& p) {
  const std::size_t d = f.degree;
  if (p.size() > d) {
    for (std::size_t k = p.size(); k-- > d;) {
      if (sgn(p[k]) == 0) continue;
      Rational c = p[k];
      for (std::size_t i = 0; i < d; ++i) {
        if (f.phi[i] != 0) p[k - d + i] -= c * f.phi[i];
      }
      p[k] = 0;
    }
  }
  p.resize(d, Rational(0));
}

}  // namespace detail
}  // namespace liefix
