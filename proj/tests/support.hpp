#pragma once

#include "skewquiver/checks.hpp"
#include "skewquiver/io.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <string>

namespace skq::test {

inline std::string fixture(const std::string &name) {
  return std::string(SKEWQ_DATA_DIR) + "/fixtures/" + name + ".json";
}

inline const std::vector<std::string> &all_fixtures() {
  static const std::vector<std::string> names{
      "c2xs3",   "dihedral10",  "trivial_cycle", "z2_mixed",
      "z2_swap", "z3_rotation", "z6_twist"};
  return names;
}

// Loaded once per process; QG construction dominates test start-up otherwise.
struct Loaded {
  std::unique_ptr<Setting> S;
  std::unique_ptr<QG> qg;
};

inline const Loaded &load(const std::string &name) {
  static std::map<std::string, Loaded> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    Loaded l;
    l.S = std::make_unique<Setting>(load_instance(fixture(name)));
    l.qg = std::make_unique<QG>(*l.S);
    it = cache.emplace(name, std::move(l)).first;
  }
  return it->second;
}

// Floating point image of a cyclotomic number under zeta_n -> exp(2 pi i / n).
inline std::complex<double> to_complex(const Cyc &c) {
  std::complex<double> z = 0;
  const int n = c.conductor();
  for (std::size_t k = 0; k < c.coeffs().size(); ++k)
    z += c.coeffs()[k].get_d() * std::polar(1.0, 2 * M_PI * k / n);
  return z;
}

inline bool near(std::complex<double> a, std::complex<double> b,
                 double tol = 1e-9) {
  return std::abs(a - b) < tol * (1 + std::abs(a) + std::abs(b));
}

} // namespace skq::test
