#include "genfact/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "genfact/factorials.hpp"

namespace genfact {

namespace {

std::vector<std::int64_t> bases_up_to(std::uint64_t k) {
  return BaseSet::all_bases_up_to(std::nullopt).resolve(SetDescriptor::all_integers(), k);
}

std::string decimal(const FactoredNumber& f) { return format_decimal(to_decimal(f), true); }
std::string factored(const FactoredNumber& f) { return format_factored(refine_to_primes(f)); }

FactoredNumber binomial_Z(std::uint64_t k, std::uint64_t l) {
  return gen_binomial(SetDescriptor::all_integers(), bases_up_to(k), k, l).value;
}

}  // namespace

std::string render_table(int which) {
  const auto Z = SetDescriptor::all_integers();
  std::ostringstream os;
  switch (which) {
    case 1:
      os << "n\tdecimal\tfactored\n";
      for (std::uint64_t n = 1; n <= 60; ++n) {
        const FactoredNumber v = gen_integer(Z, bases_up_to(n), n).value;
        os << n << '\t' << (n <= 40 ? decimal(v) : std::string()) << '\t' << factored(v) << '\n';
      }
      break;
    case 2:
      os << "k\tdecimal\tfactored\n";
      for (std::uint64_t k = 0; k <= 19; ++k) {
        const FactoredNumber v = factorial(Z, bases_up_to(k), k).value;
        os << k << '\t' << decimal(v) << '\t' << factored(v) << '\n';
      }
      break;
    case 3:
    case 4: {
      const std::uint64_t max_l = which == 3 ? 10 : 7;
      os << "k\\l";
      for (std::uint64_t l = 0; l <= max_l; ++l) os << '\t' << l;
      os << '\n';
      for (std::uint64_t k = 0; k <= 10; ++k) {
        os << k;
        for (std::uint64_t l = 0; l <= std::min(k, max_l); ++l) {
          const FactoredNumber v = binomial_Z(k, l);
          os << '\t' << (which == 3 ? decimal(v) : factored(v));
        }
        os << '\n';
      }
      break;
    }
    default:
      throw std::invalid_argument("unknown table " + std::to_string(which) + " (expected 1-4)");
  }
  return os.str();
}

}  // namespace genfact
