#include "ellgen/rational.hpp"

#include "ellgen/errors.hpp"

namespace ellgen {

std::string to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat rat_pow(long base, int exp) {
  if (exp < 0 && base == 0) throw InvalidArgument("rat_pow: 0 to a negative power");
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), mpz_class(base).get_mpz_t(),
             static_cast<unsigned long>(exp < 0 ? -exp : exp));
  Rat r(p);
  if (exp < 0) r = 1 / r;
  return r;
}

}  // namespace ellgen
