#include "qconst/modfield.hpp"

#include <gmpxx.h>
#include <stdexcept>

namespace qconst {

std::uint64_t ModField::pow(std::uint64_t a, std::uint64_t e) const
{
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

namespace {

static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");

std::uint64_t mod_of(const mpz_class& z, std::uint64_t p)
{
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t eval_cyclotomic_poly(int conductor, std::uint64_t x, const ModField& f)
{
  const auto& phi = cyclotomic_polynomial(conductor);
  std::uint64_t acc = 0;
  for (std::size_t i = phi.size(); i-- > 0;) {
    const std::int64_t c = phi[i];
    const std::uint64_t cm = c >= 0 ? static_cast<std::uint64_t>(c) % f.p : f.p - (static_cast<std::uint64_t>(-c) % f.p);
    acc = f.add(f.mul(acc, x), cm % f.p);
  }
  return acc;
}

} // namespace

ModField random_field(int conductor, std::mt19937_64& rng)
{
  if (conductor < 1)
    throw std::invalid_argument("conductor must be positive");
  ModField f;
  f.conductor = conductor;
  const std::uint64_t lo = (std::uint64_t{1} << 60) / static_cast<std::uint64_t>(conductor);
  std::uniform_int_distribution<std::uint64_t> pick(lo, 2 * lo);
  for (;;) {
    const std::uint64_t p = pick(rng) * static_cast<std::uint64_t>(conductor) + 1;
    const mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
      continue;
    f.p = p;
    break;
  }
  std::uniform_int_distribution<std::uint64_t> elem(2, f.p - 1);
  for (;;) {
    const std::uint64_t w = f.pow(elem(rng), (f.p - 1) / static_cast<std::uint64_t>(conductor));
    if (eval_cyclotomic_poly(conductor, w, f) == 0) {
      f.zeta = w;
      return f;
    }
  }
}

std::optional<std::uint64_t> reduce(const Cyclotomic& c, const ModField& f)
{
  if (f.conductor % c.conductor() != 0)
    throw std::invalid_argument("value outside the field of the evaluation point");
  const std::uint64_t z = f.pow(f.zeta, static_cast<std::uint64_t>(f.conductor / c.conductor()));
  std::uint64_t acc = 0;
  std::uint64_t zp = 1;
  for (const auto& q : c.coeffs()) {
    if (q != 0) {
      const std::uint64_t den = mod_of(q.get_den(), f.p);
      if (den == 0)
        return std::nullopt;
      acc = f.add(acc, f.mul(f.mul(mod_of(q.get_num(), f.p), f.inv(den)), zp));
    }
    zp = f.mul(zp, z);
  }
  return acc;
}

} // namespace qconst
