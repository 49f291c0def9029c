#pragma once

// The four standing example quotients used across the test suites:
//   two_planes_line : Q[x,y,z,t,w] / (x,y) cap (z,t)   two 3-planes along a line
//   mixed_chain     : Q[x,y,z]     / (x) cap (y,z) cap (x^2,y^2,z)
//   embedded_plane  : Q[x,y,z,t]   / (x) cap (y) cap (x^2,y^2)
//   two_planes_point: Q[x,y,z,t]   / (x,y) cap (z,t)   two planes at the origin

#include "seqcm/presented_module.hpp"

namespace seqcm::testing {

struct Fixture {
  RingPtr ring;
  std::vector<Polynomial> ideal;
  PresentedModule module;
};

inline Fixture make_fixture(std::vector<std::string> vars, std::vector<std::string> gens) {
  Fixture f;
  f.ring = make_ring(std::move(vars));
  for (const auto& g : gens) f.ideal.push_back(parse_polynomial(f.ring, g));
  f.module = PresentedModule::quotient_ring(f.ring, f.ideal);
  return f;
}

inline Fixture two_planes_line() {
  return make_fixture({"x", "y", "z", "t", "w"}, {"x*z", "x*t", "y*z", "y*t"});
}

inline Fixture mixed_chain() {
  // (x) cap (y,z) cap (x^2,y^2,z) = (x*z, x^2*y, x*y^2)
  return make_fixture({"x", "y", "z"}, {"x*z", "x^2*y", "x*y^2"});
}

inline Fixture embedded_plane() {
  // (x) cap (y) cap (x^2,y^2) = (x^2*y, x*y^2)
  return make_fixture({"x", "y", "z", "t"}, {"x^2*y", "x*y^2"});
}

inline Fixture two_planes_point() {
  return make_fixture({"x", "y", "z", "t"}, {"x*z", "x*t", "y*z", "y*t"});
}

}  // namespace seqcm::testing
