#include "fimhom/field.hpp"

#include <stdexcept>

namespace fimhom {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(u32 prime) : p(prime) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("modulus must be < 2^31");
}

u32 PrimeField::inv(u32 a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<u32>(t);
}

u32 PrimeField::reduce(long long v) const {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

}  // namespace fimhom
